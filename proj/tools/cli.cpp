#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "oscrep/error.hpp"
#include "oscrep/probe.hpp"

namespace oscrep::cli {

using json = nlohmann::ordered_json;

namespace {

struct FamilyArgs {
  std::string family = "swapped";
  std::string parity = "even";
  int n = 1;
  int n1 = 1;
  int n2 = 1;
  std::string c = "formal";
  std::string a;
  std::string b;
};

struct AmbientArgs {
  std::vector<std::string> seeds{"1"};
  int cap = -1;
  int box = -1;
  int inner = -1;
  std::string center;
};

struct Args {
  bool trace = false;
  int threads = 1;
  FamilyArgs fam;
  AmbientArgs amb;
  std::string mode = "symbolic";
  int degree = 3;
  int k = 0;
  int cap = 4;
  int buffer = 2;
  std::string identity;
  int i = 1;
  std::string c_list;
  std::string suite;
};

// Thrown for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> parse_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  return out;
}

Scalar parse_c(const std::string& text) {
  if (text == "formal") return Scalar::parameter();
  try {
    return Scalar(parse_rational(text));
  } catch (const Error& e) {
    throw UsageError(std::string("--c: ") + e.what());
  }
}

RepFamily build_family(const FamilyArgs& f) {
  const LieAlgebraSpec spec(parse_parity(f.parity), f.n);
  const Scalar c = parse_c(f.c);
  switch (parse_rep_kind(f.family)) {
    case RepKind::Conformal: return RepFamily::conformal(spec, c);
    case RepKind::Twisted: return RepFamily::twisted(spec, c, parse_list("--a", f.a), parse_list("--b", f.b));
    case RepKind::Swapped: return RepFamily::swapped(spec, c, f.n1, f.n2);
  }
  throw UsageError("--family: unknown family");
}

std::vector<Polynomial> build_seeds(const RepFamily& rep, const AmbientArgs& a) {
  std::vector<Polynomial> out;
  for (const auto& s : a.seeds) {
    try {
      out.push_back(parse_polynomial(s, rep.roster()));
    } catch (const Error& e) {
      throw UsageError("--seed '" + s + "': " + e.what());
    }
  }
  return out;
}

Weight parse_center(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '(') t.erase(0, 1);
  if (!t.empty() && t.back() == ')') t.pop_back();
  const auto halves = split(t, ';');
  if (halves.size() != 2) throw UsageError("--center: expected 'mu1,...,mun;k', got '" + text + "'");
  Weight w;
  try {
    for (const auto& m : split(halves[0], ',')) w.mu.push_back(std::stoi(m));
    w.k = std::stoi(halves[1]);
  } catch (const std::exception&) {
    throw UsageError("--center: bad integer in '" + text + "'");
  }
  return w;
}

AmbientSpec build_ambient(const AmbientArgs& a) {
  const bool cap = a.cap >= 0, box = a.box >= 0;
  if (cap == box) throw UsageError("exactly one of --cap or --box is required");
  if (cap) return DegreeCap{a.cap};
  WeightBox wb{std::nullopt, a.box, a.inner >= 0 ? a.inner : std::max(0, a.box - 2)};
  if (!a.center.empty()) wb.center = parse_center(a.center);
  return wb;
}

json to_json(const Rational& q) { return to_string(q); }

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json closure_json(const RepFamily& rep, const ClosureReport& r, bool trace) {
  json d;
  d["status"] = to_string(r.status);
  d["ambient"] = r.ambient;
  if (r.c) d["c"] = to_json(*r.c);
  d["iterations"] = r.iterations;
  d["rank"] = r.rank;
  d["asserted_found"] = r.asserted_found;
  d["asserted_ambient"] = r.asserted_ambient;
  d["fill_percent"] = r.asserted_ambient ? 100.0 * double(r.asserted_found) / double(r.asserted_ambient) : 0.0;
  d["caveat"] = r.caveat;
  json table = json::array();
  for (const auto& row : r.table)
    table.push_back({{"window", row.window}, {"found", row.found}, {"ambient", row.ambient}, {"asserted", row.asserted}});
  d["table"] = table;
  json coeffs = json::array();
  for (const auto& e : r.coefficients)
    coeffs.push_back({{"factor", e.factor}, {"at", e.parameter}, {"value", to_json(e.value)}, {"vanishes", e.vanishes}});
  d["coefficients"] = coeffs;
  if (trace) {
    json traces = json::array();
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const auto t = trace_of(r, i);
      json word = json::array();
      for (const auto& l : t.word) word.push_back(to_string(l));
      json entry{{"record", i}, {"seed", t.seed}, {"word", word}, {"vector", r.records[i].vector.to_string()}};
      if (t.component) entry["component"] = to_string(*t.component);
      traces.push_back(entry);
    }
    d["traces"] = traces;
  }
  (void)rep;
  return d;
}

struct Outcome {
  std::string status;
  json details;
  std::string summary;
};

Outcome do_verify_lie(const Args& a) {
  const LieAlgebraSpec spec(parse_parity(a.fam.parity), a.fam.n);
  const auto r = verify_lie(spec);
  json d{{"algebra", spec.name()},
         {"dimension", r.dimension},
         {"expected_dimension", r.expected_dimension},
         {"pairs_checked", r.pairs_checked},
         {"triples_checked", r.triples_checked},
         {"subalgebras", r.subalgebras},
         {"failures", r.failures}};
  const std::string status = r.passed() ? "pass" : "fail";
  return {status, d, status + ", " + spec.name() + " dim " + std::to_string(r.dimension)};
}

Outcome do_verify_rep(const Args& a) {
  const RepFamily rep = build_family(a.fam);
  const CheckMode mode = parse_check_mode(a.mode);
  const auto r = verify_homomorphism(rep, mode, a.degree);
  json d{{"family", rep.describe()},
         {"mode", to_string(r.mode)},
         {"degree_bound", r.degree_bound},
         {"pairs_checked", r.pairs_checked},
         {"monomials_checked", r.monomials_checked}};
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"x", to_string(f.x)}, {"y", to_string(f.y)}, {"difference", f.detail}});
  d["failures"] = failures;
  bool oracle_ok = true;
  if (rep.kind() == RepKind::Swapped) {
    const auto conf = RepFamily::conformal(rep.spec(), rep.c());
    json mismatches = json::array();
    for (const auto& [label, op] : image_table(rep))
      if (!(op == swap_transform(image(conf, label), rep.n1(), rep.n2()))) mismatches.push_back(to_string(label));
    oracle_ok = mismatches.empty();
    d["swap_oracle_mismatches"] = mismatches;
  }
  const std::string status = r.passed() && oracle_ok ? "pass" : "fail";
  return {status, d, status + ", " + std::to_string(r.pairs_checked) + " pairs"};
}

Outcome do_decompose(const Args& a) {
  FamilyArgs f = a.fam;
  f.family = "swapped";
  const RepFamily rep = build_family(f);
  const auto r = verify_decomposition(rep, a.k, a.cap, a.buffer);
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"power", c.power},
                     {"harmonic_grade", c.harmonic_grade},
                     {"harmonic_dimension", c.harmonic_dimension},
                     {"generators_kept", c.generators_kept}});
  json missing = json::array();
  for (const auto& m : r.missing) missing.push_back(to_string(m, rep.roster()));
  json d{{"family", rep.describe()},
         {"k", r.k},
         {"cap", r.cap},
         {"buffer", r.buffer},
         {"outcome", to_string(r.status)},
         {"precondition", r.precondition},
         {"piece_dimension", r.piece_dimension},
         {"window_dimension", r.window_dimension},
         {"generator_count", r.generator_count},
         {"span_rank", r.span_rank},
         {"direct", r.direct},
         {"spans", r.spans},
         {"spans_full_window", r.spans_full_window},
         {"components", comps},
         {"missing", missing}};
  std::string status = r.status == DecompositionStatus::Pass   ? "pass"
                       : r.status == DecompositionStatus::Fail ? "fail"
                                                               : "inconclusive";
  std::string summary = status + ", piece dim " + std::to_string(r.piece_dimension) + " split";
  for (const auto& c : r.components)
    if (c.generators_kept) summary += " " + std::to_string(c.generators_kept);
  if (r.status == DecompositionStatus::PreconditionUnmet) summary = "inconclusive: precondition unmet, " + r.precondition;
  return {status, d, summary};
}

Outcome do_identity(const Args& a) {
  const IdentityName name = parse_identity_name(a.identity);
  const IdentityParams p{parse_parity(a.fam.parity), a.fam.n, a.fam.n1, a.fam.n2, a.k, a.i};
  const auto r = verify_identity(name, p);
  json d{{"identity", to_string(r.name)}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  if (r.factor) d["factor"] = to_json(*r.factor);
  if (r.shift) d["shift"] = to_json(*r.shift);
  const std::string status = r.passed ? "pass" : "fail";
  return {status, d, status + ", " + to_string(r.name)};
}

Outcome do_probe(const Args& a) {
  const RepFamily rep = build_family(a.fam);
  const auto seeds = build_seeds(rep, a.amb);
  const auto r = submodule_closure(rep, seeds, build_ambient(a.amb));
  json d = closure_json(rep, r, a.trace);
  d["family"] = rep.describe();
  std::ostringstream s;
  s << to_string(r.status) << ", " << r.asserted_found << "/" << r.asserted_ambient << " on the asserted window";
  return {to_string(r.status), d, s.str()};
}

Outcome do_certify(const Args& a) {
  if (a.fam.family != "twisted") throw UsageError("--family: certificates exist for the twisted family only");
  const auto av = parse_list("--a", a.fam.a);
  const auto bv = parse_list("--b", a.fam.b);
  const Scalar c = parse_c(a.fam.c);
  if (!c.is_constant()) throw UsageError("--c: certificates need a rational c");
  const int n = static_cast<int>(bv.size());
  const auto r = parse_parity(a.fam.parity) == Parity::Even ? certify_twisted_even(n, av, bv, c.constant(), a.degree)
                                                            : certify_twisted_odd(n, av, bv, c.constant(), a.degree);
  json d{{"parity", to_string(r.parity)},
         {"a", rational_list(av)},
         {"b", rational_list(bv)},
         {"c", to_json(c.constant())},
         {"degree", r.degree},
         {"hypothesis", r.hypothesis},
         {"hypothesis_value", to_json(r.hypothesis_value)},
         {"route", r.route},
         {"combination", r.combination},
         {"identities_checked", r.identities_checked},
         {"monomials_generated", r.monomials_generated},
         {"failures", r.failures},
         {"note", r.note}};
  const std::string status = to_string(r.status);
  std::string summary = status;
  if (r.status == CertificateStatus::Inconclusive) summary = "inconclusive: " + r.hypothesis + " = 0";
  else summary += ", " + r.route + ", " + std::to_string(r.monomials_generated) + " monomials generated";
  return {status, d, summary};
}

Outcome do_scan(const Args& a) {
  FamilyArgs f = a.fam;
  f.family = "swapped";
  if (f.c == "formal") f.c = "0";
  const RepFamily rep = build_family(f);
  const auto seeds = build_seeds(rep, a.amb);
  const auto values = parse_list("--c-list", a.c_list);
  if (values.empty()) throw UsageError("--c-list: at least one value is required");
  const auto reports = excluded_parameter_scan(rep, values, seeds, build_ambient(a.amb));
  json runs = json::array();
  for (const auto& r : reports) runs.push_back(closure_json(rep, r, a.trace));
  json d{{"family", rep.describe()}, {"runs", runs}};
  return {"pass", d, "pass, " + std::to_string(reports.size()) + " scan reports (observational)"};
}

Outcome do_suite(const Args& a) {
  const auto entries = run_suite(a.suite);
  json list = json::array();
  std::size_t ok = 0;
  for (const auto& e : entries) {
    list.push_back({{"name", e.name}, {"expected", e.expected}, {"observed", e.observed}, {"ok", e.ok()},
                    {"detail", e.detail}});
    ok += e.ok();
  }
  const std::string status = ok == entries.size() ? "pass" : "fail";
  return {status,
          json{{"suite", a.suite}, {"entries", list}},
          status + ", " + std::to_string(ok) + "/" + std::to_string(entries.size()) + " entries as expected"};
}

json echo_params(const CLI::App& app, const CLI::App* sub) {
  json params;
  auto add = [&](const CLI::App& from) {
    for (const CLI::Option* opt : from.get_options()) {
      const std::string name = opt->get_lnames().empty() ? opt->get_name(true) : opt->get_lnames().front();
      if (name.empty()) continue;
      if (name == "help") continue;
      if (opt->get_expected_min() == 0) {
        params[name] = opt->count() > 0;
      } else if (opt->count() > 0) {
        const auto res = opt->results();
        params[name] = res.size() == 1 && opt->get_expected_max() == 1 ? json(res.front()) : json(res);
      } else if (opt->get_default_str().empty()) {
        params[name] = nullptr;
      } else {
        params[name] = opt->get_default_str();
      }
    }
  };
  add(app);
  add(*sub);
  return params;
}

}  // namespace

int exit_code_for(const std::string& status) {
  if (status == "pass" || status == "filled") return kExitPass;
  if (status == "fail" || status == "not-filled") return kExitFail;
  if (status == "inconclusive") return kExitInconclusive;
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact verification of oscillator representations of orthogonal Lie algebras", "oscrep"};
  app.require_subcommand(1);
  app.add_flag("--trace", a.trace, "Include derivation traces in probe reports");
  app.add_option("--threads", a.threads, "Parallelism hint; results do not depend on it")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto family_opts = [&](CLI::App* sub, bool with_family) {
    if (with_family)
      sub->add_option("--family", a.fam.family, "conformal | twisted | swapped")
          ->check(CLI::IsMember({"conformal", "twisted", "swapped"}))
          ->capture_default_str();
    sub->add_option("--parity", a.fam.parity, "even | odd")->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
    sub->add_option("--n", a.fam.n, "Rank parameter n >= 1")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--n1", a.fam.n1, "Swap index n1")->capture_default_str();
    sub->add_option("--n2", a.fam.n2, "Swap index n2")->capture_default_str();
  };
  auto c_opt = [&](CLI::App* sub) { sub->add_option("--c", a.fam.c, "P/Q or 'formal'")->capture_default_str(); };
  auto twist_opts = [&](CLI::App* sub) {
    sub->add_option("--a", a.fam.a, "Comma-separated rationals (odd: a0 first)")->capture_default_str();
    sub->add_option("--b", a.fam.b, "Comma-separated rationals")->capture_default_str();
  };
  auto ambient_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", a.amb.seeds, "Seed polynomial (repeatable)")->capture_default_str();
    sub->add_option("--cap", a.amb.cap, "Degree-cap window")->check(CLI::NonNegativeNumber);
    sub->add_option("--box", a.amb.box, "Weight-box radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--inner", a.amb.inner, "Weight-box inner radius (default radius-2)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--center", a.amb.center, "Weight-box center 'mu1,...,mun;k'");
  };

  auto* lie = app.add_subcommand("verify-lie", "Antisymmetry, Jacobi, closure and dimension of the basis");
  lie->add_option("--parity", a.fam.parity)->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
  lie->add_option("--n", a.fam.n)->check(CLI::PositiveNumber)->capture_default_str();

  auto* rep = app.add_subcommand("verify-rep", "Homomorphism check of a representation table");
  family_opts(rep, true);
  c_opt(rep);
  twist_opts(rep);
  rep->add_option("--mode", a.mode, "symbolic | applied")
      ->check(CLI::IsMember({"symbolic", "applied"}))
      ->capture_default_str();
  rep->add_option("--degree", a.degree, "Degree bound for applied mode")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* dec = app.add_subcommand("decompose", "Harmonic decomposition of a graded piece (swapped family)");
  family_opts(dec, false);
  dec->add_option("--k", a.k, "Grade")->capture_default_str();
  dec->add_option("--cap", a.cap, "Degree cap")->check(CLI::NonNegativeNumber)->capture_default_str();
  dec->add_option("--buffer", a.buffer, "Truncation buffer")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* idn = app.add_subcommand("identity", "Named operator identity");
  idn->add_option("--name", a.identity, "eq2.34 | eq2.51 | eq3.36 | sl2")
      ->required()
      ->check(CLI::IsMember({"eq2.34", "eq2.51", "eq3.36", "sl2"}));
  family_opts(idn, false);
  idn->add_option("--k", a.k)->capture_default_str();
  idn->add_option("--i", a.i)->capture_default_str();

  auto* probe = app.add_subcommand("probe", "Submodule closure inside a finite window");
  family_opts(probe, true);
  c_opt(probe);
  twist_opts(probe);
  ambient_opts(probe);

  auto* cert = app.add_subcommand("certify", "Replay of the twisted-family degree induction");
  cert->add_option("--family", a.fam.family)->capture_default_str();
  cert->add_option("--parity", a.fam.parity)->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
  c_opt(cert);
  twist_opts(cert);
  cert->add_option("--degree", a.degree)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Closure runs at excluded values of c with step-factor logs");
  family_opts(scan, false);
  scan->add_option("--c-list", a.c_list, "Comma-separated values in Z/2")->required();
  ambient_opts(scan);

  auto* suite = app.add_subcommand("suite", "Run a named acceptance bundle");
  suite->add_option("name", a.suite, "all | paper-identities | homomorphisms | decompositions | probes")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string task = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  json report{{"task", task}, {"params", echo_params(app, sub)}};
  Outcome o;
  try {
    if (sub == lie) o = do_verify_lie(a);
    else if (sub == rep) o = do_verify_rep(a);
    else if (sub == dec) o = do_decompose(a);
    else if (sub == idn) o = do_identity(a);
    else if (sub == probe) o = do_probe(a);
    else if (sub == cert) o = do_certify(a);
    else if (sub == scan) o = do_scan(a);
    else o = do_suite(a);
  } catch (const std::exception& e) {
    report["status"] = "usage-error";
    report["error"] = e.what();
    out << report.dump(2) << "\n";
    err << task << ": usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  report["status"] = o.status;
  report["details"] = o.details;
  report["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  err << task << ": " << o.summary << "\n";
  return exit_code_for(o.status);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"oscrep"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace oscrep::cli
