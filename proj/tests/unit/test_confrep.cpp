#include <doctest.h>

#include "labels.hpp"
#include "oscrep/error.hpp"
#include "oscrep/representation.hpp"

using namespace oscrep;

namespace {

BasisLabel L(const char* s) { return parse_label(s); }
WeylOperator op(const std::string& s, const VariableRoster& r) { return parse_operator(s, r); }

const Scalar kC = Scalar::parameter();

}  // namespace

TEST_CASE("image examples") {
  const LieAlgebraSpec e1(Parity::Even, 1), e2(Parity::Even, 2), o1(Parity::Odd, 1);
  CHECK(image(RepFamily::conformal(e1, kC), L("A(2,1)")) == op("Dx1", e1.roster()));
  CHECK(image(RepFamily::swapped(e2, kC, 1, 2), L("A(3,1)")) == op("-x1", e2.roster()));
  CHECK(image(RepFamily::swapped(o1, kC, 1, 1), L("K(1)")) == op("-x0*x1 - y1*Dx0", o1.roster()));
  CHECK(image(RepFamily::twisted(e1, kC, {2}, {3}), L("A(2,1)")) == op("Dx1 + 2", e1.roster()));
  CHECK(image(RepFamily::swapped(e1, kC, 1, 1), L("A(1,1)")) == op("-x1*Dx1 - y1*Dy1 - 1", e1.roster()));
}

TEST_CASE("image errors") {
  const LieAlgebraSpec e1(Parity::Even, 1);
  const auto rep = RepFamily::conformal(e1, kC);
  CHECK_THROWS_WITH_AS(image(rep, L("K(1)")), doctest::Contains("invalid label"), Error);
  CHECK_THROWS_WITH_AS(image(rep, L("A(1,3)")), doctest::Contains("invalid label"), Error);
  CHECK_THROWS_AS(RepFamily::swapped(e1, kC, 2, 1), Error);
  CHECK_THROWS_WITH_AS(RepFamily::twisted(e1, kC, {1, 2}, {1}), doctest::Contains("twist vector a"), Error);
  CHECK_THROWS_AS(parse_rep_kind("fourier"), Error);
  CHECK(to_string(parse_check_mode("applied")) == "applied");
}

TEST_CASE("conformal images agree with the oracle operators") {
  const Rational c(7, 3);
  for (Parity parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(parity, n);
      const oracle::Conformal ref{{parity == Parity::Odd, n}, c};
      const auto rep = RepFamily::conformal(spec, c);
      const auto monos = oracle::sample_monomials(ref.v.count(), 4, 12, 3u + n);
      for (const auto& l : basis(spec)) {
        const auto mine = image(rep, l);
        const auto theirs = ref.image(to_oracle(l));
        for (const auto& e : monos)
          CHECK_MESSAGE(oracle::from(apply(mine, oracle::to(oracle::mono(e), spec.roster()))) == theirs(oracle::mono(e)),
                        to_string(l));
      }
    }
}

TEST_CASE("homomorphism: symbolic, formal c, all families") {
  for (Parity parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(parity, n);
      const std::size_t dim = spec.dimension();
      const auto rc = verify_homomorphism(RepFamily::conformal(spec, kC), CheckMode::Symbolic);
      CHECK(rc.passed());
      CHECK(rc.pairs_checked == dim * (dim - 1) / 2);
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) {
          const auto rs = verify_homomorphism(RepFamily::swapped(spec, kC, n1, n2), CheckMode::Symbolic);
          CHECK(rs.passed());
        }
    }
  // o(4) has dimension 6, so 15 unordered pairs.
  CHECK(verify_homomorphism(RepFamily::conformal(LieAlgebraSpec(Parity::Even, 1), kC), CheckMode::Symbolic)
            .pairs_checked == 15);
  CHECK(verify_homomorphism(RepFamily::swapped(LieAlgebraSpec(Parity::Even, 2), kC, 1, 2), CheckMode::Symbolic)
            .pairs_checked == 105);
}

TEST_CASE("swapped images satisfy the oracle brackets when applied") {
  const Rational c(-5, 2);
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const LieAlgebraSpec spec(parity, 2);
    const auto alg = to_oracle(spec);
    const auto rep = RepFamily::swapped(spec, c, 1, 2);
    const auto labels = basis(spec);
    const auto monos = oracle::sample_monomials(spec.roster().size(), 3, 6, 11);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); b += 2) {
        const auto coeffs = alg.read(oracle::comm(alg.matrix(to_oracle(labels[a])), alg.matrix(to_oracle(labels[b]))));
        WeylOperator lhs(spec.roster());
        for (const auto& [l, v] : coeffs) lhs += image(rep, from_oracle(l)) * Scalar(Rational(v));
        const auto x = image(rep, labels[a]), y = image(rep, labels[b]);
        for (const auto& e : monos) {
          const auto u = oracle::to(oracle::mono(e), spec.roster());
          CHECK(apply(lhs, u) == apply(x, apply(y, u)) - apply(y, apply(x, u)));
        }
      }
  }
}

TEST_CASE("twisted: zero shift equals conformal, applied homomorphism") {
  for (Parity parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2}) {
      const LieAlgebraSpec spec(parity, n);
      const std::vector<Rational> a(parity == Parity::Odd ? n + 1 : n, 0), b(n, 0);
      CHECK(image_table(RepFamily::twisted(spec, kC, a, b)) == image_table(RepFamily::conformal(spec, kC)));
    }
  const auto tw = RepFamily::twisted(LieAlgebraSpec(Parity::Even, 2), kC, {1, 2}, {3, -1});
  const auto r = verify_homomorphism(tw, CheckMode::Applied, 3);
  CHECK(r.passed());
  CHECK(r.pairs_checked == 105);
  CHECK(r.monomials_checked > 0);
  CHECK(verify_homomorphism(RepFamily::twisted(LieAlgebraSpec(Parity::Odd, 1), kC, {Rational(1, 2), 1}, {-2}),
                            CheckMode::Symbolic)
            .passed());
}

TEST_CASE("swap oracle reproduces the entered swapped tables") {
  for (Parity parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2, 3})
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) {
          const LieAlgebraSpec spec(parity, n);
          const auto conf = RepFamily::conformal(spec, kC);
          for (const auto& [l, t] : image_table(RepFamily::swapped(spec, kC, n1, n2)))
            CHECK_MESSAGE(t == swap_transform(image(conf, l), n1, n2), to_string(l));
        }
}

TEST_CASE("antisymmetric labels carry a sign") {
  const LieAlgebraSpec spec(Parity::Odd, 2);
  for (const auto& rep : {RepFamily::conformal(spec, kC), RepFamily::swapped(spec, kC, 1, 2)})
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        CHECK(image(rep, BasisLabel{Family::B, j, i}) == -image(rep, BasisLabel{Family::B, i, j}));
        CHECK(image(rep, BasisLabel{Family::C, j, i}) == -image(rep, BasisLabel{Family::C, i, j}));
      }
}

TEST_CASE("scalar action of the top Cartan element") {
  for (Parity parity : {Parity::Even, Parity::Odd})
    for (int n : {1, 2})
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) {
          const LieAlgebraSpec spec(parity, n);
          const auto rep = RepFamily::swapped(spec, kC, n1, n2);
          const auto top = image(rep, BasisLabel{Family::A, n + 1, n + 1});
          const oracle::Vars v{parity == Parity::Odd, n};
          for (const auto& e : oracle::sample_monomials(v.count(), 6, 50, 2024)) {
            const auto u = oracle::to(oracle::mono(e), spec.roster());
            CHECK(apply(top, u) == u * (-(Scalar(oracle::swapped_grading(v, n1, n2, e)) + rep.c_tilde())));
          }
        }
}

TEST_CASE("corrupted table is caught") {
  const LieAlgebraSpec spec(Parity::Even, 1);
  auto table = image_table(RepFamily::conformal(spec, kC));
  table.insert_or_assign(L("A(2,1)"), op("x1", spec.roster()));
  const auto r = verify_homomorphism(spec, table, CheckMode::Symbolic);
  CHECK_FALSE(r.passed());
  bool listed = false;
  for (const auto& f : r.failures)
    listed = listed || (f.x == L("A(1,2)") && f.y == L("A(2,1)")) || (f.x == L("A(2,1)") && f.y == L("A(1,2)"));
  CHECK(listed);
  CHECK_FALSE(verify_homomorphism(spec, table, CheckMode::Applied, 2).passed());
}

TEST_CASE("structural operators") {
  CHECK(structural_operator(Structural::D, Variant::SwappedEven, 1, 1, 1) ==
        op("-x1*Dx1 + y1*Dy1", VariableRoster(Parity::Even, 1)));
  CHECK(structural_operator(Structural::Eta, Variant::SwappedEven, 1, 1, 1) ==
        op("y1*Dx1", VariableRoster(Parity::Even, 1)));
  CHECK(structural_operator(Structural::Laplacian, Variant::SwappedOdd, 1, 1, 1) ==
        op("Dx0^2 - 2*x1*Dy1", VariableRoster(Parity::Odd, 1)));
  CHECK_THROWS_WITH_AS(structural_operator(Structural::D, Variant::SwappedEven, 1),
                       doctest::Contains("missing n1/n2"), Error);
  CHECK(structural_operator(Structural::Eta, Variant::ConformalOdd, 1) ==
        op("x1*y1 + 1/2*x0^2", VariableRoster(Parity::Odd, 1)));
}
