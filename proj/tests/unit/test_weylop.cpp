#include <doctest.h>

#include "oracle/oracle.hpp"
#include "oscrep/error.hpp"
#include "oscrep/representation.hpp"

using namespace oscrep;

namespace {

const VariableRoster kR(Parity::Even, 1);

WeylOperator op(const std::string& s, const VariableRoster& r = kR) { return parse_operator(s, r); }
Polynomial poly(const std::string& s, const VariableRoster& r = kR) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("apply examples") {
  CHECK(apply(op("Dx1"), poly("x1^2*y1")) == poly("2*x1*y1"));
  const auto minus_d_c = op("-x1*Dx1 - y1*Dy1 - c");
  CHECK(apply(minus_d_c, poly("x1*y1")) == Polynomial::monomial(kR, parse_monomial("x1*y1", kR), -Scalar::parameter() - 2));
  const auto a12 = op("x1*y1*Dy1 - x1*(x1*Dx1 + y1*Dy1 + c)");
  CHECK(apply(a12, poly("1")) == Polynomial::monomial(kR, parse_monomial("x1", kR), -Scalar::parameter()));
}

TEST_CASE("compose examples") {
  CHECK(op("Dx1") * op("x1") == op("x1*Dx1 + 1"));
  const auto lhs = op("Dx1^2") * op("x1^2");
  CHECK(lhs == op("x1^2*Dx1^2 + 4*x1*Dx1 + 2"));
  for (int m = 0; m <= 4; ++m) {
    oracle::Poly u = oracle::mono({m, 0});
    const auto direct = oracle::diff(0)(oracle::diff(0)(oracle::mulv(0)(oracle::mulv(0)(u))));
    CHECK(oracle::from(apply(lhs, oracle::to(u, kR))) == direct);
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(op("Dx1"), op("x1")) == WeylOperator::identity(kR));
  CHECK(commutator(op("y1*Dx1"), op("x1*Dy1")) == op("y1*Dy1 - x1*Dx1"));
  const auto t = op("x1*y1*Dx1 + c*Dy1^2");
  CHECK(commutator(t, t).is_zero());
}

TEST_CASE("twist examples") {
  CHECK(twist(op("Dx1"), {{2, 3}}) == op("Dx1 + 2"));
  CHECK(twist(op("x1*Dx1"), {{2, 3}}) == op("x1*Dx1 + 2*x1"));
  CHECK(twist(commutator(op("Dx1"), op("x1")), {{2, 3}}) == WeylOperator::identity(kR));
}

TEST_CASE("evaluate specializes c") {
  const auto d = op("x1*Dx1 + y1*Dy1");
  CHECK((-d - WeylOperator::scalar(kR, Scalar::parameter())).evaluate(0) == -d);
}

TEST_CASE("roster mismatch") {
  const VariableRoster other(Parity::Even, 2);
  CHECK_THROWS_WITH_AS(apply(op("Dx1"), poly("x1", other)), doctest::Contains("roster mismatch"), Error);
  CHECK_THROWS_WITH_AS(op("Dx1") * op("Dx1", other), doctest::Contains("roster mismatch"), Error);
  CHECK_THROWS_WITH_AS(commutator(op("Dx1"), op("Dx1", other)), doctest::Contains("roster mismatch"), Error);
  CHECK_THROWS_WITH_AS(twist(op("Dx1"), {{1}}), doctest::Contains("roster mismatch"), Error);
}

TEST_CASE("display syntax round-trips") {
  const VariableRoster r(Parity::Odd, 2);
  for (const char* s : {"x1*Dx1 + 2*x1", "-c*x0*Dy2^2 + 1/2*x0^2*Dx0", "(x1 + c)*(Dx2 - 3/4)"}) {
    const auto t = op(s, r);
    CHECK(op(t.to_string(), r) == t);
    CHECK(t * WeylOperator::identity(r) == t);
    CHECK(WeylOperator::identity(r) * t == t);
  }
  CHECK_THROWS_AS(op("x1 +", r), Error);
  CHECK_THROWS_WITH_AS(parse_polynomial("Dx1", r), doctest::Contains("contains derivatives"), Error);
}

TEST_CASE("application is coherent with composition on table operators") {
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const LieAlgebraSpec spec(parity, 2);
    const auto rep = RepFamily::swapped(spec, Rational(2, 5), 1, 2);
    const auto table = image_table(rep);
    const auto monos = monomials_up_to(spec.roster(), parity == Parity::Even ? 4 : 3);
    std::vector<WeylOperator> ops;
    for (const auto& [l, t] : table) ops.push_back(t);
    for (std::size_t s = 0; s < ops.size(); s += 3)
      for (std::size_t t = 1; t < ops.size(); t += 4) {
        const auto st = ops[s] * ops[t];
        for (std::size_t m = 0; m < monos.size(); m += 5) {
          const auto u = Polynomial::monomial(spec.roster(), monos[m]);
          CHECK(apply(st, u) == apply(ops[s], apply(ops[t], u)));
        }
      }
  }
}

TEST_CASE("apply is linear") {
  const VariableRoster r(Parity::Odd, 1);
  const auto t = op("x0*y1*Dx1 - c*Dx0^2 + x1^2*Dy1", r);
  const auto u = poly("x0^3*x1 - 2*y1^2", r), v = poly("x1*y1 + 5*x0", r);
  const Scalar alpha(Rational(3, 7)), beta = Scalar::parameter();
  CHECK(apply(t, alpha * u + beta * v) == alpha * apply(t, u) + beta * apply(t, v));
}

TEST_CASE("twist preserves commutators of table operators") {
  const LieAlgebraSpec spec(Parity::Odd, 1);
  const auto conf = image_table(RepFamily::conformal(spec, Scalar::parameter()));
  const TwistShift s{{Rational(1, 2), 2, -3}};
  for (const auto& [lx, x] : conf)
    for (const auto& [ly, y] : conf) CHECK(twist(commutator(x, y), s) == commutator(twist(x, s), twist(y, s)));
}
