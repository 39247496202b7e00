#ifndef OSCREP_WEYL_OPERATOR_HPP
#define OSCREP_WEYL_OPERATOR_HPP

#include <map>
#include <string>
#include <vector>

#include "oscrep/polynomial.hpp"

namespace oscrep {

/// Key of a normal-ordered term x^mult * D^deriv.
struct OperatorTerm {
  Monomial mult;
  Monomial deriv;

  int order() const { return static_cast<int>(mult.degree() + deriv.degree()); }
  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

bool operator<(const OperatorTerm& a, const OperatorTerm& b);

/// Differential operator with polynomial coefficients in normal order.
///
/// Every term keeps multiplications to the left of derivatives, terms with
/// the same (mult, deriv) are merged and zero terms are dropped, so two
/// operators are equal iff their term maps are equal.
class WeylOperator {
 public:
  using Terms = std::map<OperatorTerm, Scalar>;

  explicit WeylOperator(VariableRoster roster) : roster_(roster) {}
  static WeylOperator identity(const VariableRoster& roster);
  static WeylOperator scalar(const VariableRoster& roster, const Scalar& s);
  static WeylOperator multiplication(const Polynomial& p);
  /// Multiplication by the variable at `position`.
  static WeylOperator variable(const VariableRoster& roster, std::size_t position);
  /// D_v^power for the variable at `position`.
  static WeylOperator partial(const VariableRoster& roster, std::size_t position, std::uint32_t power = 1);

  const VariableRoster& roster() const { return roster_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest (deg mult - deg deriv) over terms; how far the operator can raise total degree.
  int degree_raise() const;
  int max_derivative_order() const;
  bool has_parameter() const;
  /// If the operator is s * identity, returns s.
  std::optional<Scalar> as_scalar() const;

  void add_term(const Monomial& mult, const Monomial& deriv, const Scalar& coeff);

  WeylOperator& operator+=(const WeylOperator& other);
  WeylOperator& operator-=(const WeylOperator& other);
  WeylOperator& operator*=(const Scalar& s);
  WeylOperator operator-() const;
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Scalar& s) { return a *= s; }
  friend WeylOperator operator*(const Scalar& s, WeylOperator a) { return a *= s; }
  /// Composition: (S * T)(p) = S(T(p)).
  friend WeylOperator operator*(const WeylOperator& s, const WeylOperator& t);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.roster_ == b.roster_ && a.terms_ == b.terms_;
  }

  WeylOperator evaluate(const Rational& c) const;
  /// Display form, e.g. "x1*Dx1 + 2*x1"; accepted back by parse_operator.
  std::string to_string() const;

 private:
  VariableRoster roster_;
  Terms terms_;
};

/// Per-variable shifts of an exponential twist e^{s . v}.
struct TwistShift {
  std::vector<Rational> shifts;
};

Polynomial apply(const WeylOperator& op, const Polynomial& p);
WeylOperator compose(const WeylOperator& s, const WeylOperator& t);
WeylOperator commutator(const WeylOperator& s, const WeylOperator& t);
/// Conjugation by the exponential: every D_v becomes D_v + s_v.
WeylOperator twist(const WeylOperator& op, const TwistShift& shift);

/// Parses the display syntax (sums of products of rationals, c, variables,
/// D<var> and parenthesized groups, with ^ powers). Products compose left to right.
WeylOperator parse_operator(const std::string& text, const VariableRoster& roster);
/// Parses a derivative-free expression as a polynomial.
Polynomial parse_polynomial(const std::string& text, const VariableRoster& roster);

}  // namespace oscrep

#endif
