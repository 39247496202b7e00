#include <functional>

#include "cli.hpp"
#include "oscrep/error.hpp"
#include "oscrep/probe.hpp"

namespace oscrep::cli {

namespace {

using Bundle = std::vector<SuiteEntry>;

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

std::string triple(int n, int n1, int n2) {
  return "n=" + std::to_string(n) + " (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

std::vector<std::pair<int, int>> swap_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int n1 = 1; n1 <= n; ++n1)
    for (int n2 = n1; n2 <= n; ++n2) out.emplace_back(n1, n2);
  return out;
}

void identity_fixtures(Bundle& out) {
  for (int k : {0, -1, -2})
    for (int i : {1, 2}) {
      const auto r = verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, k, i});
      out.push_back({"eq2.34 k=" + std::to_string(k) + " i=" + std::to_string(i), "pass", pass_fail(r.passed), r.lhs});
    }
  const std::vector<std::tuple<int, int, int>> configs{{1, 1, 1}, {2, 1, 2}, {2, 2, 2}, {2, 1, 1}};
  for (auto name : {IdentityName::EvenCasimirStep, IdentityName::OddCasimirStep})
    for (auto [n, n1, n2] : configs) {
      const auto r = verify_identity(name, {Parity::Even, n, n1, n2, 0, 1});
      out.push_back({to_string(name) + " " + triple(n, n1, n2), "pass", pass_fail(r.passed), ""});
    }
  for (auto parity : {Parity::Even, Parity::Odd})
    for (auto [n, n1, n2] : configs) {
      const auto r = verify_identity(IdentityName::Sl2, {parity, n, n1, n2, 0, 1});
      std::string detail = r.factor ? to_string(*r.factor) + "*D + " + to_string(*r.shift) : "";
      out.push_back({"sl2 " + to_string(parity) + " " + triple(n, n1, n2), "pass", pass_fail(r.passed), detail});
    }
}

void homomorphisms(Bundle& out) {
  for (auto parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(parity, n);
      const auto lie = verify_lie(spec);
      out.push_back({"lie " + spec.name(), "pass", pass_fail(lie.passed()), ""});
      const auto conf = RepFamily::conformal(spec, Scalar::parameter());
      const auto rc = verify_homomorphism(conf, CheckMode::Symbolic);
      out.push_back({"conformal " + spec.name(), "pass", pass_fail(rc.passed()),
                     std::to_string(rc.pairs_checked) + " pairs"});
      for (auto [n1, n2] : swap_pairs(n)) {
        const auto sw = RepFamily::swapped(spec, Scalar::parameter(), n1, n2);
        const auto rs = verify_homomorphism(sw, CheckMode::Symbolic);
        bool oracle = true;
        for (const auto& [label, op] : image_table(sw))
          oracle = oracle && op == swap_transform(image(conf, label), n1, n2);
        out.push_back({"swapped " + spec.name() + " " + triple(n, n1, n2), "pass",
                       pass_fail(rs.passed() && oracle), std::to_string(rs.pairs_checked) + " pairs"});
      }
    }
  const LieAlgebraSpec e2(Parity::Even, 2);
  const auto tw = RepFamily::twisted(e2, Scalar::parameter(), {1, 2}, {3, -1});
  const auto rt = verify_homomorphism(tw, CheckMode::Applied, 3);
  out.push_back({"twisted o(6) applied deg<=3", "pass", pass_fail(rt.passed()), ""});
}

void decompositions(Bundle& out) {
  struct Case {
    Parity parity;
    int n, n1, n2, k;
  };
  for (auto c : {Case{Parity::Even, 1, 1, 1, 0}, Case{Parity::Even, 2, 1, 2, 0}, Case{Parity::Even, 2, 1, 2, -1},
                 Case{Parity::Odd, 1, 1, 1, 0}, Case{Parity::Odd, 1, 1, 1, -1}}) {
    const auto rep = RepFamily::swapped(LieAlgebraSpec(c.parity, c.n), Scalar::parameter(), c.n1, c.n2);
    const auto r = verify_decomposition(rep, c.k, 4, 2);
    out.push_back({"decompose " + to_string(c.parity) + " " + triple(c.n, c.n1, c.n2) + " k=" + std::to_string(c.k),
                   "pass", to_string(r.status), ""});
  }
  for (auto parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2})
      for (auto [n1, n2] : swap_pairs(n)) {
        const auto rep = RepFamily::swapped(LieAlgebraSpec(parity, n), Scalar::parameter(), n1, n2);
        out.push_back({"commutant " + to_string(parity) + " " + triple(n, n1, n2), "pass",
                       pass_fail(verify_commutant(rep).passed()), ""});
      }
}

void probes(Bundle& out) {
  const Rational third(1, 3);
  for (auto [parity, radius, inner] : {std::tuple{Parity::Even, 5, 3}, std::tuple{Parity::Odd, 4, 2}}) {
    const auto rep = RepFamily::swapped(LieAlgebraSpec(parity, 1), Scalar(third), 1, 1);
    const auto r = submodule_closure(rep, {Polynomial::constant(rep.roster(), Scalar(1))},
                                     WeightBox{std::nullopt, radius, inner});
    out.push_back({"probe swapped " + to_string(parity) + " c=1/3", "filled", to_string(r.status),
                   std::to_string(r.asserted_found) + "/" + std::to_string(r.asserted_ambient)});
  }
  {
    const auto rep = RepFamily::twisted(LieAlgebraSpec(Parity::Even, 1), Scalar(0), {2}, {3});
    const auto r = submodule_closure(rep, {Polynomial::constant(rep.roster(), Scalar(1))}, DegreeCap{5});
    out.push_back({"probe twisted even a=(2) b=(3)", "filled", to_string(r.status), ""});
  }
  auto cert = [&](const std::string& name, const std::string& expected, const CertificateReport& r) {
    out.push_back({name, expected, to_string(r.status), r.route});
  };
  for (const Rational& c : {Rational(0), Rational(-5), Rational(1, 2)})
    cert("certify even a=(1) b=(1) c=" + to_string(c), "pass", certify_twisted_even(1, {1}, {1}, c, 3));
  cert("certify even a=(1,2) b=(3,-1)", "pass", certify_twisted_even(2, {1, 2}, {3, -1}, 0, 3));
  cert("certify even a=(1,0) b=(0,1)", "inconclusive", certify_twisted_even(2, {1, 0}, {0, 1}, 0, 3));
  cert("certify odd a=(0;1,1) b=(1,0)", "pass", certify_twisted_odd(2, {0, 1, 1}, {1, 0}, 0, 3));
  cert("certify odd a=(1;0,0) b=(0,0)", "pass", certify_twisted_odd(2, {1, 0, 0}, {0, 0}, Rational(1, 2), 3));
  cert("certify odd a=0 b=0", "inconclusive", certify_twisted_odd(2, {0, 0, 0}, {0, 0}, 0, 3));
}

const std::vector<std::pair<std::string, std::function<void(Bundle&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Bundle&)>>> r{
      {"paper-identities", identity_fixtures},
      {"homomorphisms", homomorphisms},
      {"decompositions", decompositions},
      {"probes", probes},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"all"};
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteEntry> run_suite(const std::string& name) {
  Bundle out;
  bool known = false;
  for (const auto& [n, fn] : registry()) {
    if (name == "all" || name == n) {
      fn(out);
      known = true;
    }
  }
  if (!known) throw Error("unknown suite '" + name + "'");
  return out;
}

}  // namespace oscrep::cli
