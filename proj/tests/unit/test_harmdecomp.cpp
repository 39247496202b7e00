#include <doctest.h>

#include "labels.hpp"
#include "oscrep/error.hpp"
#include "oscrep/harmonic.hpp"

using namespace oscrep;

namespace {

const Scalar kC = Scalar::parameter();

RepFamily swapped(Parity p, int n, int n1, int n2) { return RepFamily::swapped(LieAlgebraSpec(p, n), kC, n1, n2); }

Polynomial poly(const std::string& s, const VariableRoster& r) { return parse_polynomial(s, r); }

std::vector<std::tuple<Parity, int, int, int>> configs() {
  std::vector<std::tuple<Parity, int, int, int>> out;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int n : {1, 2})
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) out.emplace_back(p, n, n1, n2);
  return out;
}

}  // namespace

TEST_CASE("weight space examples") {
  const auto rep = swapped(Parity::Even, 1, 1, 1);
  const auto r = rep.roster();
  CHECK(weight_space_basis(rep, {{-2}, 1}) == std::vector<Monomial>{parse_monomial("y1", r)});
  CHECK(weight_space_basis(rep, {{-3}, 0}) == std::vector<Monomial>{parse_monomial("x1*y1", r)});
  CHECK(weight_space_basis(rep, {{0}, 0}).empty());
  CHECK_THROWS_WITH_AS(weight_of(RepFamily::conformal(LieAlgebraSpec(Parity::Even, 1), kC), Monomial(2)),
                       doctest::Contains("not a weight family"), Error);
}

TEST_CASE("weights match the exponent oracle") {
  for (auto [p, n, n1, n2] : configs()) {
    const auto rep = swapped(p, n, n1, n2);
    const oracle::Vars v{p == Parity::Odd, n};
    for (const auto& m : monomials_up_to(rep.roster(), 4)) {
      const oracle::Exps e(m.exponents.begin(), m.exponents.end());
      const Weight w = weight_of(rep, m);
      CHECK(w.k == oracle::swapped_grading(v, n1, n2, e));
      CHECK(w.mu == oracle::swapped_mu(v, n1, n2, e));
      const auto space = weight_space_basis(rep, w);
      CHECK(std::find(space.begin(), space.end(), m) != space.end());
      for (const auto& other : space) CHECK(weight_of(rep, other) == w);
    }
  }
}

TEST_CASE("Cartan images act by the weight on weight-space vectors") {
  for (auto [p, n, n1, n2] : configs()) {
    const auto rep = swapped(p, n, n1, n2);
    for (const auto& m : monomials_up_to(rep.roster(), 3)) {
      const Weight w = weight_of(rep, m);
      for (const auto& u : weight_space_basis(rep, w)) {
        const auto poly_u = Polynomial::monomial(rep.roster(), u);
        for (int i = 1; i <= n; ++i)
          CHECK(apply(image(rep, BasisLabel{Family::A, i, i}), poly_u) == poly_u * Scalar(w.mu[i - 1]));
        CHECK(apply(image(rep, BasisLabel{Family::A, n + 1, n + 1}), poly_u) == poly_u * (-(Scalar(w.k) + rep.c_tilde())));
      }
    }
  }
}

TEST_CASE("grading, raising and lowering shift the graded pieces") {
  for (auto [p, n, n1, n2] : configs()) {
    const auto rep = swapped(p, n, n1, n2);
    const auto variant = rep.variant();
    const auto d = structural_operator(Structural::D, variant, n, n1, n2);
    const auto eta = structural_operator(Structural::Eta, variant, n, n1, n2);
    const auto lap = structural_operator(Structural::Laplacian, variant, n, n1, n2);
    for (int k : {-2, -1, 0, 1}) {
      for (const auto& m : graded_piece(rep, k, 4).basis) {
        const auto u = Polynomial::monomial(rep.roster(), m);
        CHECK(apply(d, u) == u * Scalar(k));
        const auto up = apply(eta, u), down = apply(lap, u);
        for (const auto& [mm, s] : up.terms()) CHECK(grading_of(rep, mm) == k + 2);
        for (const auto& [mm, s] : down.terms()) CHECK(grading_of(rep, mm) == k - 2);
      }
    }
  }
}

TEST_CASE("harmonic basis examples") {
  const auto rep = swapped(Parity::Even, 1, 1, 1);
  const auto r = rep.roster();
  const auto h0 = harmonic_basis(rep, 0, 4);
  REQUIRE(h0.rank() == 1);
  CHECK(h0.basis()[0] == poly("1", r));
  const auto h2 = harmonic_basis(rep, -2, 4);
  REQUIRE(h2.rank() == 1);
  CHECK(h2.basis()[0] == poly("x1^2", r));
  CHECK(harmonic_basis(rep, 1, 4).rank() == 0);
}

TEST_CASE("harmonic vectors are annihilated and counted like the oracle kernel") {
  for (auto [p, n, n1, n2] : configs()) {
    if (n == 2 && p == Parity::Odd) continue;
    const auto rep = swapped(p, n, n1, n2);
    const auto lap = structural_operator(Structural::Laplacian, rep.variant(), n, n1, n2);
    for (int k : {-1, 0}) {
      const auto h = harmonic_basis(rep, k, 4);
      for (const auto& v : h.basis()) CHECK(apply(lap, v).is_zero());
      // oracle: nullity of the Laplacian matrix on the capped piece
      const auto piece = graded_piece(rep, k, 4).basis;
      std::vector<oracle::Poly> images;
      for (const auto& m : piece) images.push_back(oracle::from(apply(lap, Polynomial::monomial(rep.roster(), m))));
      CHECK(h.rank() == piece.size() - oracle::rank(images));
    }
  }
}

TEST_CASE("decomposition windows") {
  {
    const auto r = verify_decomposition(swapped(Parity::Even, 1, 1, 1), 0, 4, 2);
    CHECK(r.status == DecompositionStatus::Pass);
    CHECK(r.piece_dimension == 3);
    REQUIRE(r.components.size() >= 3);
    for (std::size_t i = 0; i < r.components.size(); ++i) CHECK(r.components[i].generators_kept == (i < 3 ? 1u : 0u));
    CHECK(r.components[1].harmonic_grade == -2);
    CHECK(r.components[2].harmonic_grade == -4);
    CHECK(r.direct);
    CHECK(r.spans);
  }
  for (int k : {0, -1}) {
    const auto r = verify_decomposition(swapped(Parity::Even, 2, 1, 2), k, 4, 2);
    CHECK(r.status == DecompositionStatus::Pass);
    std::size_t sum = 0;
    for (const auto& c : r.components) sum += c.generators_kept;
    CHECK(sum == r.generator_count);
    CHECK(r.span_rank == r.generator_count);
  }
  for (int k : {0, -1}) CHECK(verify_decomposition(swapped(Parity::Odd, 1, 1, 1), k, 4, 2).status == DecompositionStatus::Pass);
  const auto unmet = verify_decomposition(swapped(Parity::Even, 1, 1, 1), 1, 4, 2);
  CHECK(unmet.status == DecompositionStatus::PreconditionUnmet);
  CHECK(to_string(unmet.status) == "precondition unmet");
  CHECK_THROWS_AS(verify_decomposition(RepFamily::conformal(LieAlgebraSpec(Parity::Even, 1), kC), 0, 4), Error);
}

TEST_CASE("eta powers of the harmonic generators match direct computation") {
  const auto rep = swapped(Parity::Even, 1, 1, 1);
  const auto r = rep.roster();
  const auto eta = structural_operator(Structural::Eta, rep.variant(), 1, 1, 1);
  CHECK(apply(eta, poly("x1^2", r)) == poly("2*x1*y1", r));
  CHECK(apply(eta, apply(eta, poly("x1^4", r))) == poly("12*x1^2*y1^2", r));
}

TEST_CASE("duplicated generator breaks directness") {
  const auto rep = swapped(Parity::Even, 1, 1, 1);
  const auto r = rep.roster();
  const auto d = assess_decomposition(rep, 0, 4, 2,
                                      {{poly("1", r)}, {poly("2*x1*y1", r)}, {poly("x1*y1", r)}, {poly("12*x1^2*y1^2", r)}});
  CHECK_FALSE(d.direct);
  CHECK(d.status == DecompositionStatus::Fail);
}

TEST_CASE("commutant") {
  CHECK(verify_commutant(swapped(Parity::Even, 1, 1, 1)).passed());
  const auto odd = verify_commutant(swapped(Parity::Odd, 1, 1, 1));
  CHECK(odd.passed());
  bool has_k = false, has_d = false;
  for (const auto& c : odd.checks) {
    has_k = has_k || c.label.family == Family::K;
    has_d = has_d || c.against == Structural::D;
  }
  CHECK(has_k);
  CHECK(has_d);
  for (auto [p, n, n1, n2] : configs()) CHECK(verify_commutant(swapped(p, n, n1, n2)).passed());
  const auto bad = verify_commutant(swapped(Parity::Even, 1, 1, 1), std::vector<BasisLabel>{parse_label("A(2,1)")});
  CHECK_FALSE(bad.passed());
  bool eta_nonzero = false;
  for (const auto& c : bad.checks) eta_nonzero = eta_nonzero || (c.against == Structural::Eta && !c.vanishes);
  CHECK(eta_nonzero);
}

TEST_CASE("raising-lowering identity") {
  // closed form i! (-1)^i prod_{r=1..i} (i + r - k) as the coefficient of x1^(i-k)
  auto expected = [](int k, int i) {
    long v = 1;
    for (int r = 1; r <= i; ++r) v *= r * (i + r - k);
    v *= (i % 2 ? -1 : 1);
    const std::string mono = i - k == 1 ? "x1" : "x1^" + std::to_string(i - k);
    return std::to_string(v) + "*" + mono;
  };
  for (int k : {0, -1, -2})
    for (int i : {1, 2}) {
      const auto r = verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, k, i});
      CHECK(r.passed);
      CHECK(r.lhs == expected(k, i));
    }
  CHECK(verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, 0, 1}).lhs == "-2*x1");
  CHECK_THROWS_WITH_AS(verify_identity(IdentityName::RaisingLowering, {Parity::Even, 1, 1, 1, 1, 1}),
                       doctest::Contains("invalid params"), Error);
  CHECK_THROWS_WITH_AS(parse_identity_name("eq9.99"), doctest::Contains("invalid params"), Error);
}

TEST_CASE("casimir-step identities and the sl2 shape") {
  for (auto [n, n1, n2] : {std::tuple{1, 1, 1}, std::tuple{2, 1, 2}, std::tuple{2, 2, 2}, std::tuple{2, 1, 1}}) {
    CHECK(verify_identity(IdentityName::EvenCasimirStep, {Parity::Even, n, n1, n2, 0, 1}).passed);
    CHECK(verify_identity(IdentityName::OddCasimirStep, {Parity::Odd, n, n1, n2, 0, 1}).passed);
  }
  const auto sl2 = verify_identity(IdentityName::Sl2, {Parity::Even, 1, 1, 1, 0, 1});
  CHECK(sl2.passed);
  CHECK(*sl2.factor == 1);
  CHECK(*sl2.shift == 0);
  const auto odd = verify_identity(IdentityName::Sl2, {Parity::Odd, 1, 1, 1, 0, 1});
  CHECK(odd.passed);
  CHECK(*odd.factor == 2);
  CHECK_THROWS_AS(verify_identity(IdentityName::Sl2, {Parity::Even, 2, 2, 1, 0, 1}), Error);
}
