#include "oscrep/probe.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oscrep/error.hpp"

namespace oscrep {

std::string describe(const AmbientSpec& ambient) {
  if (const auto* cap = std::get_if<DegreeCap>(&ambient)) return "degree-cap " + std::to_string(cap->cap);
  const auto& box = std::get<WeightBox>(ambient);
  std::string out = "weight-box radius " + std::to_string(box.radius) + " inner " + std::to_string(box.inner);
  if (box.center) out += " center " + to_string(*box.center);
  return out;
}

std::string to_string(ClosureStatus status) {
  switch (status) {
    case ClosureStatus::Filled: return "filled";
    case ClosureStatus::NotFilled: return "not-filled";
    case ClosureStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Pass: return "pass";
    case CertificateStatus::Fail: return "fail";
    case CertificateStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

Polynomial weight_component(const RepFamily& rep, const Polynomial& p, const Weight& w) {
  Polynomial out(p.roster());
  for (const auto& [m, s] : p.terms())
    if (weight_of(rep, m) == w) out.add_term(m, s);
  return out;
}

namespace {

constexpr const char* kNoClaim = "closure inside a finite window; an unfilled window is not evidence of reducibility";

Rational constant_c(const RepFamily& rep) {
  if (!rep.c().is_constant()) throw Error("formal c: closure needs a rational value of c");
  return rep.c().constant();
}

void validate_seeds(const RepFamily& rep, const std::vector<Polynomial>& seeds) {
  if (seeds.empty()) throw Error("empty seeds");
  for (const auto& s : seeds) {
    if (rep.kind() == RepKind::Twisted && rep.spec().parity == Parity::Even && s.roster().has_x0())
      throw Error("x0 in seed: even parity has no x0");
    if (!(s.roster() == rep.roster())) throw Error("roster mismatch: seed " + s.to_string());
    if (s.is_zero()) throw Error("zero seed");
    if (s.has_parameter()) throw Error("parameterized coefficients in seed " + s.to_string());
  }
}

int distance(const Weight& a, const Weight& b) {
  int d = std::abs(a.k - b.k);
  for (std::size_t i = 0; i < a.mu.size(); ++i) d = std::max(d, std::abs(a.mu[i] - b.mu[i]));
  return d;
}

std::vector<Weight> weights_in_box(const Weight& center, int radius) {
  std::vector<Weight> out;
  const std::size_t dims = center.mu.size() + 1;
  std::vector<int> offset(dims, -radius);
  while (true) {
    Weight w = center;
    for (std::size_t i = 0; i < center.mu.size(); ++i) w.mu[i] += offset[i];
    w.k += offset.back();
    out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < dims && offset[i] == radius) offset[i++] = -radius;
    if (i == dims) break;
    ++offset[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

void add_hypothesis_coefficient(const RepFamily& rep, std::vector<CoefficientEntry>& log) {
  if (rep.kind() != RepKind::Twisted) return;
  const bool odd = rep.spec().parity == Parity::Odd;
  Rational sum = 0;
  for (int i = 1; i <= rep.spec().n; ++i)
    sum += rep.a()[static_cast<std::size_t>(odd ? i : i - 1)] * rep.b()[static_cast<std::size_t>(i - 1)];
  if (odd) {
    const Rational a0 = rep.a()[0];
    log.push_back({"a0^2+2*sum(a_i*b_i)", "-", a0 * a0 + 2 * sum, a0 * a0 + 2 * sum == 0});
  } else {
    log.push_back({"sum(a_i*b_i)", "-", sum, sum == 0});
  }
}

}  // namespace

std::vector<CoefficientEntry> step_coefficients(const RepFamily& rep, int k, int spread) {
  if (rep.kind() != RepKind::Swapped) throw Error("not a weight family: " + to_string(rep.kind()));
  if (!rep.c().is_constant()) throw Error("formal c: coefficients need a rational value of c");
  const Rational ct = rep.c_tilde().constant();
  const bool odd = rep.spec().parity == Parity::Odd;
  const int n = rep.spec().n, n1 = rep.n1(), n2 = rep.n2();
  const Rational half_or_one = odd ? Rational(1, 2) : Rational(1);
  std::vector<CoefficientEntry> out;
  auto push = [&](std::string factor, std::string param, Rational value) {
    out.push_back({std::move(factor), std::move(param), value, value == 0});
  };
  for (int r = k - spread; r <= k + spread; ++r) {
    const std::string p = "r=" + std::to_string(r);
    push(odd ? "1/2+r+c~-n2+n1" : "1+r+c~-n2+n1", p, half_or_one + r + ct - n2 + n1);
    push("r+c~", p, r + ct);
    push("r-1+c~", p, r - 1 + ct);
  }
  for (int l = k - spread; l <= k + spread; ++l) {
    const Rational lead = odd ? 2 : 1;
    push(odd ? "2-l+n2+n-n1-2(c~+1)" : "1-l+n2+n-n1-2(c~+1)", "l=" + std::to_string(l),
         lead - l + n2 + n - n1 - 2 * (ct + 1));
  }
  return out;
}

ClosureReport submodule_closure(const RepFamily& rep, const std::vector<Polynomial>& seeds,
                                const AmbientSpec& ambient) {
  validate_seeds(rep, seeds);
  const Rational c = constant_c(rep);
  const VariableRoster roster = rep.roster();
  const LieAlgebraSpec& spec = rep.spec();

  ClosureReport report;
  report.ambient = describe(ambient);
  report.c = c;
  report.seeds = seeds;
  report.caveat = kNoClaim;

  std::vector<std::pair<BasisLabel, WeylOperator>> ops;
  for (const auto& label : basis(spec)) ops.emplace_back(label, image(rep, label).evaluate(c));

  auto& records = report.records;
  std::vector<std::size_t> frontier;

  if (const auto* dc = std::get_if<DegreeCap>(&ambient)) {
    const int cap = dc->cap;
    if (cap < 0) throw Error("degree cap must be non-negative");
    auto index = monomials_up_to(roster, static_cast<std::uint32_t>(cap));
    std::reverse(index.begin(), index.end());
    LinearSubspace space(roster, index);
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      if (seeds[s].degree() > cap) throw Error("seed exceeds the degree cap: " + seeds[s].to_string());
      if (space.insert(seeds[s])) {
        records.push_back({s, std::nullopt, std::nullopt, std::nullopt, seeds[s]});
        frontier.push_back(records.size() - 1);
      }
    }
    while (!frontier.empty()) {
      ++report.iterations;
      std::vector<std::size_t> next;
      for (std::size_t idx : frontier) {
        for (const auto& [label, op] : ops) {
          const Polynomial& v = records[idx].vector;
          if (v.degree() + op.degree_raise() > cap) continue;
          Polynomial img = apply(op, v);
          if (img.is_zero() || !space.insert(img)) continue;
          records.push_back({records[idx].seed, std::nullopt, idx, label, std::move(img)});
          next.push_back(records.size() - 1);
        }
      }
      frontier = std::move(next);
    }
    report.rank = space.rank();
    std::vector<std::size_t> pivot_degrees;
    for (std::size_t p : space.pivots()) pivot_degrees.push_back(index[p].degree());
    std::size_t ambient_count = 0;
    for (int d = 0; d <= cap; ++d) {
      ambient_count += monomials_of_degree(roster, static_cast<std::uint32_t>(d)).size();
      const auto found = static_cast<std::size_t>(std::count_if(pivot_degrees.begin(), pivot_degrees.end(),
                                                                [&](std::size_t g) { return g <= std::size_t(d); }));
      const bool asserted = d <= cap - 2;
      report.table.push_back({"deg<=" + std::to_string(d), found, ambient_count, asserted});
      if (asserted) {
        report.asserted_found = found;
        report.asserted_ambient = ambient_count;
      }
    }
    if (rep.kind() == RepKind::Swapped) report.coefficients = step_coefficients(rep, 0, cap);
    add_hypothesis_coefficient(rep, report.coefficients);
  } else {
    if (rep.kind() != RepKind::Swapped) throw Error("weight-box mode needs the swapped family");
    const auto& box = std::get<WeightBox>(ambient);
    if (box.radius < 0 || box.inner < 0 || box.inner > box.radius)
      throw Error("weight box needs 0 <= inner <= radius");

    // Split seeds into weight components; each component lies in the
    // submodule because the Cartan images act diagonally.
    struct Component {
      std::size_t seed;
      Weight w;
      Polynomial v;
    };
    std::vector<Component> components;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      std::map<Weight, Polynomial> parts;
      for (const auto& [m, coeff] : seeds[s].terms()) {
        auto [it, fresh] = parts.try_emplace(weight_of(rep, m), roster);
        it->second.add_term(m, coeff);
      }
      // leading component first so a defaulted center follows the leading term
      const Weight lead = weight_of(rep, seeds[s].leading_monomial());
      components.push_back({s, lead, parts.at(lead)});
      for (auto& [w, v] : parts)
        if (!(w == lead)) components.push_back({s, w, std::move(v)});
    }
    const Weight center = box.center ? *box.center : components.front().w;
    if (center.mu.size() != static_cast<std::size_t>(spec.n))
      throw Error("weight-box center needs " + std::to_string(spec.n) + " mu entries");
    report.ambient = describe(WeightBox{center, box.radius, box.inner});

    std::map<Weight, LinearSubspace> spaces;
    auto space_for = [&](const Weight& w) -> LinearSubspace& {
      auto it = spaces.find(w);
      if (it == spaces.end()) it = spaces.emplace(w, LinearSubspace(roster, weight_space_basis(rep, w))).first;
      return it->second;
    };
    std::vector<Weight> record_weight;
    for (auto& comp : components) {
      if (distance(comp.w, center) > box.radius) continue;
      if (space_for(comp.w).insert(comp.v)) {
        records.push_back({comp.seed, comp.w, std::nullopt, std::nullopt, comp.v});
        record_weight.push_back(comp.w);
        frontier.push_back(records.size() - 1);
      }
    }

    const RootTable roots(spec);
    std::vector<std::tuple<BasisLabel, const WeylOperator*, std::vector<int>>> root_ops;
    for (const auto& [label, op] : ops)
      if (const auto& root = roots.root(label)) root_ops.emplace_back(label, &op, *root);

    while (!frontier.empty()) {
      ++report.iterations;
      std::vector<std::size_t> next;
      for (std::size_t idx : frontier) {
        for (const auto& [label, op, root] : root_ops) {
          const Weight target = shifted(record_weight[idx], root);
          if (distance(target, center) > box.radius) continue;
          Polynomial img = apply(*op, records[idx].vector);
          if (img.is_zero()) continue;
          for (const auto& [m, s] : img.terms())
            if (!(weight_of(rep, m) == target))
              throw Error("weight coherence violated by " + to_string(label) + " at " + to_string(m, roster));
          if (!space_for(target).insert(img)) continue;
          records.push_back({records[idx].seed, std::nullopt, idx, label, std::move(img)});
          record_weight.push_back(target);
          next.push_back(records.size() - 1);
        }
      }
      frontier = std::move(next);
    }

    for (const auto& w : weights_in_box(center, box.radius)) {
      const std::size_t dim = weight_space_basis(rep, w).size();
      if (dim == 0) continue;
      auto it = spaces.find(w);
      const std::size_t found = it == spaces.end() ? 0 : it->second.rank();
      const bool asserted = distance(w, center) <= box.inner;
      report.rank += found;
      report.table.push_back({to_string(w), found, dim, asserted});
      if (asserted) {
        report.asserted_found += found;
        report.asserted_ambient += dim;
      }
    }
    report.coefficients = step_coefficients(rep, center.k, box.radius);
  }

  if (report.asserted_ambient == 0) {
    report.status = ClosureStatus::Inconclusive;
    report.caveat = "asserted window is empty; " + std::string(kNoClaim);
  } else if (report.asserted_found == report.asserted_ambient) {
    report.status = ClosureStatus::Filled;
  } else {
    report.status = ClosureStatus::NotFilled;
  }
  return report;
}

DerivationTrace trace_of(const ClosureReport& report, std::size_t record) {
  if (record >= report.records.size()) throw Error("no such record: " + std::to_string(record));
  DerivationTrace trace;
  std::size_t at = record;
  while (report.records[at].parent) {
    trace.word.push_back(*report.records[at].label);
    at = *report.records[at].parent;
  }
  std::reverse(trace.word.begin(), trace.word.end());
  trace.seed = report.records[at].seed;
  trace.component = report.records[at].component;
  return trace;
}

Polynomial replay(const RepFamily& rep, const std::vector<Polynomial>& seeds, const DerivationTrace& trace) {
  const Rational c = constant_c(rep);
  if (trace.seed >= seeds.size()) throw Error("trace names a missing seed");
  Polynomial v = seeds[trace.seed];
  if (trace.component) v = weight_component(rep, v, *trace.component);
  for (const auto& label : trace.word) v = apply(image(rep, label).evaluate(c), v);
  return v;
}

std::vector<ClosureReport> excluded_parameter_scan(const RepFamily& rep, const std::vector<Rational>& c_values,
                                                   const std::vector<Polynomial>& seeds, const AmbientSpec& ambient) {
  if (rep.kind() != RepKind::Swapped) throw Error("not a weight family: " + to_string(rep.kind()));
  for (const auto& c : c_values) {
    const Rational twice = 2 * c;
    if (twice.get_den() != 1) throw Error("not in Z/2: c = " + to_string(c));
  }
  std::vector<ClosureReport> out;
  for (const auto& c : c_values) {
    ClosureReport r = submodule_closure(rep.with_c(Scalar(c)), seeds, ambient);
    r.caveat = "excluded parameter c = " + to_string(c) +
               "; the observation is reported as is and makes no reducibility claim";
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Leading linear form of a twisted operator on degree-l input, modulo degree <= l.
struct ResidueStep {
  std::string name;
  WeylOperator op;
  Polynomial form;
};

struct TwistData {
  VariableRoster roster;
  bool odd;
  int n;
  Rational a0;
  std::vector<Rational> a;  // a[i] for i = 1..n at index i
  std::vector<Rational> b;

  Polynomial var_x(int i) const { return Polynomial::variable(roster, roster.x(i)); }
  Polynomial var_y(int j) const { return Polynomial::variable(roster, roster.y(j)); }
};

Polynomial lin(const TwistData& t, std::initializer_list<std::pair<Rational, Polynomial>> parts) {
  Polynomial out(t.roster);
  for (const auto& [q, p] : parts) out += p * Scalar(q);
  return out;
}

ResidueStep residue(const RepFamily& rep, const TwistData& t, const BasisLabel& l) {
  const int n = t.n;
  ResidueStep step{to_string(l), image(rep, l), Polynomial(t.roster)};
  switch (l.family) {
    case Family::A:
      step.form = lin(t, {{t.a[l.j], t.var_x(l.i)}, {-t.b[l.i], t.var_y(l.j)}});
      break;
    case Family::B:
      step.form = lin(t, {{t.b[l.j], t.var_x(l.i)}, {-t.b[l.i], t.var_x(l.j)}});
      break;
    case Family::C:
      step.form = lin(t, {{t.a[l.j], t.var_y(l.i)}, {-t.a[l.i], t.var_y(l.j)}});
      break;
    case Family::K:
      if (l.i <= n) step.form = lin(t, {{t.a[l.i], t.var_x(0)}, {-t.a0, t.var_y(l.i)}});
      else step.form = lin(t, {{t.b[l.i - n - 1], t.var_x(0)}, {-t.a0, t.var_x(l.i - n - 1)}});
      break;
  }
  return step;
}

ResidueStep grading_step(const RepFamily& rep, const TwistData& t) {
  ResidueStep step{"-A(" + std::to_string(t.n + 1) + "," + std::to_string(t.n + 1) + ")",
                   -image(rep, BasisLabel{Family::A, t.n + 1, t.n + 1}), Polynomial(t.roster)};
  if (t.odd) step.form += t.var_x(0) * Scalar(t.a0);
  for (int i = 1; i <= t.n; ++i) step.form += t.var_x(i) * Scalar(t.a[i]) + t.var_y(i) * Scalar(t.b[i]);
  return step;
}

void check_descent(const RepFamily& rep, const TwistData& t, CertificateReport& report) {
  const VariableRoster& r = t.roster;
  auto expect = [&](const WeylOperator& got, const WeylOperator& want, const std::string& what) {
    ++report.identities_checked;
    if (!(got == want)) report.failures.push_back("descent " + what + ": " + got.to_string());
  };
  const int n = t.n;
  for (int i = 1; i <= n; ++i) {
    expect(image(rep, BasisLabel{Family::A, n + 1, i}) - WeylOperator::scalar(r, Scalar(t.a[i])),
           WeylOperator::partial(r, r.x(i)), "A(n+1," + std::to_string(i) + ")");
    expect(-(image(rep, BasisLabel{Family::B, i, n + 1}) + WeylOperator::scalar(r, Scalar(t.b[i]))),
           WeylOperator::partial(r, r.y(i)), "B(" + std::to_string(i) + ",n+1)");
  }
  if (t.odd)
    expect(-(image(rep, BasisLabel{Family::K, 2 * n + 2}) + WeylOperator::scalar(r, Scalar(t.a0))),
           WeylOperator::partial(r, r.x(0)), "K(2n+2)");
}

// Every variable reachable from `known` through forms with a single unknown variable.
std::set<std::size_t> propagate(const std::vector<ResidueStep>& steps, std::set<std::size_t> known) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : steps) {
      std::vector<std::size_t> unknown;
      for (const auto& [m, coeff] : s.form.terms()) {
        const auto v = static_cast<std::size_t>(std::find(m.exponents.begin(), m.exponents.end(), 1u) -
                                                m.exponents.begin());
        if (!known.count(v)) unknown.push_back(v);
      }
      if (unknown.size() == 1) {
        known.insert(unknown.front());
        grew = true;
      }
    }
  }
  return known;
}

CertificateReport run_induction(const RepFamily& rep, const TwistData& t, int degree,
                                const std::vector<ResidueStep>& steps,
                                const std::vector<std::pair<std::size_t, Rational>>& combination,
                                std::optional<std::size_t> target_var, const Rational& factor,
                                CertificateReport report) {
  const VariableRoster& r = t.roster;
  check_descent(rep, t, report);

  std::set<std::size_t> known;
  if (target_var) {
    Polynomial assembled(r);
    for (const auto& [idx, q] : combination) assembled += steps[idx].form * Scalar(q);
    const Polynomial want = Polynomial::variable(r, *target_var) * Scalar(factor);
    report.combination = assembled.to_string();
    ++report.identities_checked;
    if (!(assembled == want))
      report.failures.push_back("combination gives " + assembled.to_string() + ", expected " + want.to_string());
    known.insert(*target_var);
  } else {
    report.combination = "none";
  }
  const auto reached = propagate(steps, known);
  if (reached.size() != r.size()) report.failures.push_back("forms do not reach every variable");

  std::size_t generated = 1;  // the constants, from the descent identities
  for (int l = 0; l < degree; ++l) {
    for (const auto& g : monomials_of_degree(r, static_cast<std::uint32_t>(l))) {
      const Polynomial gp = Polynomial::monomial(r, g);
      for (const auto& s : steps) {
        ++report.identities_checked;
        const Polynomial rest = apply(s.op, gp) - s.form * gp;
        if (rest.degree() > l)
          report.failures.push_back(s.name + " on " + to_string(g, r) + " leaves " + rest.to_string());
      }
    }
    generated += monomials_of_degree(r, static_cast<std::uint32_t>(l + 1)).size();
  }
  report.monomials_generated = generated;
  report.status = report.failures.empty() ? CertificateStatus::Pass : CertificateStatus::Fail;
  return report;
}

TwistData twist_data(const RepFamily& rep) {
  TwistData t{rep.roster(), rep.spec().parity == Parity::Odd, rep.spec().n, 0, {}, {}};
  t.a.assign(static_cast<std::size_t>(t.n + 1), 0);
  t.b.assign(static_cast<std::size_t>(t.n + 1), 0);
  if (t.odd) t.a0 = rep.a()[0];
  for (int i = 1; i <= t.n; ++i) {
    t.a[i] = rep.a()[static_cast<std::size_t>(t.odd ? i : i - 1)];
    t.b[i] = rep.b()[static_cast<std::size_t>(i - 1)];
  }
  return t;
}

}  // namespace

CertificateReport certify_twisted_even(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       const Rational& c, int degree) {
  if (degree < 0) throw Error("degree must be non-negative");
  const RepFamily rep = RepFamily::twisted(LieAlgebraSpec(Parity::Even, n), Scalar(c), a, b);
  const TwistData t = twist_data(rep);
  CertificateReport report;
  report.parity = Parity::Even;
  report.degree = degree;
  report.hypothesis = "sum a_i b_i";
  for (int i = 1; i <= n; ++i) report.hypothesis_value += t.a[i] * t.b[i];
  if (report.hypothesis_value == 0) {
    report.note = "inconclusive: sum a_i b_i = 0, the nondegeneracy hypothesis fails and no claim is made";
    return report;
  }
  int p = 1;
  while (t.a[p] == 0) ++p;  // some a_p is nonzero because the sum is
  report.route = "pivot a_" + std::to_string(p);

  std::vector<ResidueStep> steps{grading_step(rep, t)};
  std::vector<std::pair<std::size_t, Rational>> combo{{0, 1}};
  for (int i = 1; i <= n; ++i) {
    steps.push_back(residue(rep, t, BasisLabel{Family::A, i, p}));
    combo.emplace_back(steps.size() - 1, -t.a[i] / t.a[p]);
  }
  for (int i = 1; i <= n; ++i) {
    if (i == p) continue;
    steps.push_back(residue(rep, t, BasisLabel{Family::C, i, p}));
    combo.emplace_back(steps.size() - 1, -t.b[i] / t.a[p]);
  }
  const Rational factor = 2 * report.hypothesis_value / t.a[p];
  return run_induction(rep, t, degree, steps, combo, t.roster.y(p), factor, report);
}

CertificateReport certify_twisted_odd(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      const Rational& c, int degree) {
  if (degree < 0) throw Error("degree must be non-negative");
  const RepFamily rep = RepFamily::twisted(LieAlgebraSpec(Parity::Odd, n), Scalar(c), a, b);
  const TwistData t = twist_data(rep);
  CertificateReport report;
  report.parity = Parity::Odd;
  report.degree = degree;
  report.hypothesis = "a0^2 + 2 sum a_i b_i";
  Rational sum = 0;
  for (int i = 1; i <= n; ++i) sum += t.a[i] * t.b[i];
  report.hypothesis_value = t.a0 * t.a0 + 2 * sum;
  if (report.hypothesis_value == 0) {
    report.note = "inconclusive: a0^2 + 2 sum a_i b_i = 0, the nondegeneracy hypothesis fails and no claim is made";
    return report;
  }

  int pa = 0, pb = 0;
  for (int i = n; i >= 1; --i) {
    if (t.a[i] != 0) pa = i;
    if (t.b[i] != 0) pb = i;
  }
  std::vector<ResidueStep> steps{grading_step(rep, t)};
  std::vector<std::pair<std::size_t, Rational>> combo{{0, 1}};

  if (pa) {
    report.route = "case 1, pivot a_" + std::to_string(pa);
    for (int i = 1; i <= n; ++i) {
      steps.push_back(residue(rep, t, BasisLabel{Family::A, i, pa}));
      combo.emplace_back(steps.size() - 1, -t.a[i] / t.a[pa]);
    }
    for (int i = 1; i <= n; ++i) {
      if (i == pa) continue;
      steps.push_back(residue(rep, t, BasisLabel{Family::C, i, pa}));
      combo.emplace_back(steps.size() - 1, -t.b[i] / t.a[pa]);
    }
    steps.push_back(residue(rep, t, BasisLabel{Family::K, pa}));
    combo.emplace_back(steps.size() - 1, -t.a0 / t.a[pa]);
    return run_induction(rep, t, degree, steps, combo, t.roster.y(pa), report.hypothesis_value / t.a[pa], report);
  }
  if (pb) {
    // Every a_i vanishes for i >= 1, so the pivot moves to b.
    report.route = "case 1, pivot b_" + std::to_string(pb);
    for (int j = 1; j <= n; ++j) {
      steps.push_back(residue(rep, t, BasisLabel{Family::A, pb, j}));
      combo.emplace_back(steps.size() - 1, t.b[j] / t.b[pb]);
    }
    steps.push_back(residue(rep, t, BasisLabel{Family::K, n + 1 + pb}));
    combo.emplace_back(steps.size() - 1, -t.a0 / t.b[pb]);
    for (int i = 1; i <= n; ++i)
      if (i != pb) steps.push_back(residue(rep, t, BasisLabel{Family::B, i, pb}));
    return run_induction(rep, t, degree, steps, combo, t.roster.x(pb), report.hypothesis_value / t.b[pb], report);
  }
  report.route = "case 2";
  for (int i = 1; i <= n; ++i) {
    steps.push_back(residue(rep, t, BasisLabel{Family::K, i}));
    steps.push_back(residue(rep, t, BasisLabel{Family::K, n + 1 + i}));
  }
  return run_induction(rep, t, degree, steps, {}, std::nullopt, 0, report);
}

}  // namespace oscrep
