// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "oscrep/probe.hpp"

using namespace oscrep;

namespace {

const Scalar kC = Scalar::parameter();

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

std::vector<std::tuple<Parity, int, int, int>> swap_configs() {
  std::vector<std::tuple<Parity, int, int, int>> out;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int n : {1, 2})
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) out.emplace_back(p, n, n1, n2);
  return out;
}

std::string tag(Parity p, int n, int n1, int n2) {
  return to_string(p) + " n=" + std::to_string(n) + " (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

Polynomial one(const RepFamily& rep) { return Polynomial::constant(rep.roster(), Scalar(1)); }

// Probes shared by criteria 8 and 11.
struct ProbeRun {
  RepFamily rep;
  ClosureReport report;
};
std::vector<ProbeRun>& probe_runs() {
  static std::vector<ProbeRun> runs;
  return runs;
}

Outcome lie_suite() {
  Outcome o;
  const std::vector<std::tuple<Parity, int, std::size_t>> dims{
      {Parity::Even, 1, 6}, {Parity::Even, 2, 15}, {Parity::Odd, 1, 10}, {Parity::Odd, 2, 21}};
  for (auto [p, n, dim] : dims) {
    const LieAlgebraSpec spec(p, n);
    const auto r = verify_lie(spec);
    o.require(r.passed(), spec.name() + ": " + (r.failures.empty() ? "" : r.failures.front()));
    o.require(r.dimension == dim && basis(spec).size() == dim, spec.name() + " dimension");
    const std::size_t m = spec.matrix_size();
    o.require(dim == m * (m - 1) / 2, spec.name() + " size formula");
    // Jacobi over all triples is part of verify_lie; count them here.
    o.require(r.triples_checked >= dim * (dim - 1) * (dim - 2) / 6, spec.name() + " triple count");
  }
  return o;
}

Outcome homomorphism_suite() {
  Outcome o;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(p, n);
      const std::size_t pairs = spec.dimension() * (spec.dimension() - 1) / 2;
      const auto rc = verify_homomorphism(RepFamily::conformal(spec, kC), CheckMode::Symbolic);
      o.require(rc.passed() && rc.pairs_checked == pairs, "conformal " + spec.name());
    }
  for (auto [p, n, n1, n2] : swap_configs()) {
    const LieAlgebraSpec spec(p, n);
    const auto r = verify_homomorphism(RepFamily::swapped(spec, kC, n1, n2), CheckMode::Symbolic);
    o.require(r.passed() && r.pairs_checked == spec.dimension() * (spec.dimension() - 1) / 2,
              "swapped " + tag(p, n, n1, n2));
    if (p == Parity::Even && n == 2) o.require(r.pairs_checked == 105, "o(6) pair count");
  }
  return o;
}

Outcome twisted_suite() {
  Outcome o;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(p, n);
      const std::vector<Rational> a(p == Parity::Odd ? n + 1 : n, 0), b(n, 0);
      o.require(image_table(RepFamily::twisted(spec, kC, a, b)) == image_table(RepFamily::conformal(spec, kC)),
                "zero shift " + spec.name());
    }
  const auto r = verify_homomorphism(RepFamily::twisted(LieAlgebraSpec(Parity::Even, 2), kC, {1, 2}, {3, -1}),
                                     CheckMode::Applied, 3);
  o.require(r.passed() && r.pairs_checked == 105, "applied o(6) a=(1,2) b=(3,-1)");
  return o;
}

Outcome scalar_action() {
  Outcome o;
  for (auto [p, n, n1, n2] : swap_configs()) {
    const auto rep = RepFamily::swapped(LieAlgebraSpec(p, n), kC, n1, n2);
    const auto top = image(rep, BasisLabel{Family::A, n + 1, n + 1});
    const oracle::Vars v{p == Parity::Odd, n};
    const auto monos = oracle::sample_monomials(v.count(), 6, 50, 1000u + 100u * n + 10u * n1 + n2);
    for (const auto& e : monos) {
      const auto u = oracle::to(oracle::mono(e), rep.roster());
      const Scalar k(oracle::swapped_grading(v, n1, n2, e));
      o.require(apply(top, u) == u * (-(k + rep.c_tilde())), tag(p, n, n1, n2) + " at " + u.to_string());
    }
  }
  return o;
}

Outcome commutant() {
  Outcome o;
  for (auto [p, n, n1, n2] : swap_configs()) {
    const auto rep = RepFamily::swapped(LieAlgebraSpec(p, n), kC, n1, n2);
    const auto r = verify_commutant(rep);
    const std::size_t subalgebra = p == Parity::Even ? subalgebra_k(rep.spec()).size() : subalgebra_g(rep.spec()).size();
    const std::size_t against = p == Parity::Even ? 2 : 3;
    o.require(r.passed(), tag(p, n, n1, n2));
    o.require(r.checks.size() == subalgebra * against, tag(p, n, n1, n2) + " check count");
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  const auto rep = RepFamily::swapped(LieAlgebraSpec(Parity::Even, 1), kC, 1, 1);
  const auto r = verify_decomposition(rep, 0, 4, 2);
  o.require(r.status == DecompositionStatus::Pass && r.piece_dimension == 3, "even n=1 k=0");
  std::vector<std::size_t> split;
  for (const auto& c : r.components)
    if (c.generators_kept) split.push_back(c.generators_kept);
  o.require(split == std::vector<std::size_t>{1, 1, 1}, "even n=1 split 1+1+1");
  const char* generators[] = {"1", "x1^2", "x1^4"};
  for (int i = 0; i < 3; ++i) {
    const auto h = harmonic_basis(rep, -2 * i, 4);
    o.require(h.rank() == 1 && h.basis()[0] == parse_polynomial(generators[i], rep.roster()),
              std::string("harmonic generator ") + generators[i]);
  }
  for (int k : {0, -1}) {
    const auto r2 = verify_decomposition(RepFamily::swapped(LieAlgebraSpec(Parity::Even, 2), kC, 1, 2), k, 4, 2);
    o.require(r2.status == DecompositionStatus::Pass && r2.direct && r2.spans, "even n=2 (1,2) k=" + std::to_string(k));
    const auto r3 = verify_decomposition(RepFamily::swapped(LieAlgebraSpec(Parity::Odd, 1), kC, 1, 1), k, 4, 2);
    o.require(r3.status == DecompositionStatus::Pass && r3.direct && r3.spans, "odd n=1 k=" + std::to_string(k));
  }
  return o;
}

Outcome identities() {
  Outcome o;
  for (int k : {0, -1, -2})
    for (int i : {1, 2}) {
      const auto r = verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, k, i});
      long coeff = i % 2 ? -1 : 1;
      for (int s = 1; s <= i; ++s) coeff *= s * (i + s - k);
      const std::string want = std::to_string(coeff) + "*x1" + (i - k == 1 ? "" : "^" + std::to_string(i - k));
      o.require(r.passed && r.lhs == want, "eq2.34 k=" + std::to_string(k) + " i=" + std::to_string(i));
    }
  o.require(verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, 0, 1}).lhs == "-2*x1", "spot value");
  for (auto [n, n1, n2] : {std::tuple{1, 1, 1}, std::tuple{2, 1, 2}, std::tuple{2, 2, 2}, std::tuple{2, 1, 1}}) {
    o.require(verify_identity(IdentityName::EvenCasimirStep, {Parity::Even, n, n1, n2, 0, 1}).passed,
              "eq2.51 " + tag(Parity::Even, n, n1, n2));
    o.require(verify_identity(IdentityName::OddCasimirStep, {Parity::Odd, n, n1, n2, 0, 1}).passed,
              "eq3.36 " + tag(Parity::Odd, n, n1, n2));
  }
  return o;
}

Outcome probes() {
  Outcome o;
  probe_runs().clear();
  for (auto [p, radius, inner] : {std::tuple{Parity::Even, 5, 3}, std::tuple{Parity::Odd, 4, 2}}) {
    const auto rep = RepFamily::swapped(LieAlgebraSpec(p, 1), Scalar(Rational(1, 3)), 1, 1);
    auto r = submodule_closure(rep, {one(rep)}, WeightBox{std::nullopt, radius, inner});
    o.require(r.status == ClosureStatus::Filled && r.asserted_found == r.asserted_ambient && r.asserted_ambient > 0,
              to_string(p) + " probe");
    probe_runs().push_back({rep, std::move(r)});
  }
  return o;
}

Outcome even_certificates() {
  Outcome o;
  for (const Rational& c : {Rational(0), Rational(-5), Rational(1, 2)})
    o.require(certify_twisted_even(1, {1}, {1}, c, 3).status == CertificateStatus::Pass, "n=1 c=" + to_string(c));
  o.require(certify_twisted_even(2, {1, 2}, {3, -1}, 0, 3).status == CertificateStatus::Pass, "n=2 a=(1,2) b=(3,-1)");
  const auto inc = certify_twisted_even(2, {1, 0}, {0, 1}, 0, 3);
  o.require(inc.status == CertificateStatus::Inconclusive && inc.hypothesis_value == 0 && !inc.note.empty(),
            "a=(1,0) b=(0,1) inconclusive with logged zero");
  return o;
}

Outcome odd_certificates() {
  Outcome o;
  const auto c1 = certify_twisted_odd(2, {0, 1, 1}, {1, 0}, 0, 3);
  o.require(c1.status == CertificateStatus::Pass && c1.hypothesis_value == 2 &&
                c1.route.find("case 1") != std::string::npos,
            "case 1");
  const auto c2 = certify_twisted_odd(2, {1, 0, 0}, {0, 0}, Rational(1, 2), 3);
  o.require(c2.status == CertificateStatus::Pass && c2.hypothesis_value == 1 && c2.route == "case 2", "case 2");
  o.require(certify_twisted_odd(2, {0, 0, 0}, {0, 0}, 0, 3).status == CertificateStatus::Inconclusive, "a=b=0");
  return o;
}

Outcome replay_soundness() {
  Outcome o;
  auto runs = probe_runs();
  {
    const auto rep = RepFamily::twisted(LieAlgebraSpec(Parity::Even, 1), Scalar(0), {2}, {3});
    runs.push_back({rep, submodule_closure(rep, {one(rep)}, DegreeCap{5})});
  }
  std::size_t replayed = 0;
  for (const auto& [rep, r] : runs) {
    if (r.status != ClosureStatus::Filled) continue;
    const std::size_t total = r.records.size();
    const std::size_t samples = std::min<std::size_t>(20, total);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t i = s * total / samples;
      o.require(replay(rep, r.seeds, trace_of(r, i)) == r.records[i].vector,
                rep.describe() + " record " + std::to_string(i));
      ++replayed;
    }
  }
  o.require(replayed > 0, "nothing replayed");
  o.note = o.ok ? std::to_string(replayed) + " traces" : o.note;
  return o;
}

Outcome scan() {
  Outcome o;
  const auto rep = RepFamily::swapped(LieAlgebraSpec(Parity::Even, 1), Scalar(0), 1, 1);
  const auto reports =
      excluded_parameter_scan(rep, {0, Rational(1, 2), 1, -1}, {one(rep)}, WeightBox{std::nullopt, 5, 3});
  o.require(reports.size() == 4, "four reports");
  for (const auto& r : reports) {
    const auto s = to_string(r.status);
    o.require(s == "filled" || s == "not-filled" || s == "inconclusive", "status " + s);
    o.require(!r.coefficients.empty(), "coefficient log");
    o.require(s.find("reducible") == std::string::npos, "reducibility claim");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "lie algebra suite", 30, lie_suite},
      {2, "homomorphism suite", 120, homomorphism_suite},
      {3, "twisted family", 60, twisted_suite},
      {4, "scalar action", 60, scalar_action},
      {5, "commutant", 60, commutant},
      {6, "harmonic decomposition windows", 120, decomposition},
      {7, "operator identities", 120, identities},
      {8, "weight-box probes", 300, probes},
      {9, "even twisted certificates", 60, even_certificates},
      {10, "odd twisted certificates", 60, odd_certificates},
      {11, "derivation replay", 60, replay_soundness},
      {12, "excluded-parameter scan", 300, scan},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.ok && in_time;
    failures += !ok;
    std::printf("criterion %2d %-32s %s  %.2fs/%gs%s%s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs, c.limit_seconds,
                o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
