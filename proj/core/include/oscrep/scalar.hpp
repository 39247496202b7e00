#ifndef OSCREP_SCALAR_HPP
#define OSCREP_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace oscrep {

using Rational = mpq_class;

/// Element of Q[c]: an exact univariate polynomial in the formal parameter c.
///
/// Coefficients are indexed by the power of c and kept without trailing
/// zeros, so the zero scalar has an empty coefficient list and a constant
/// scalar has exactly one entry.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(long value);             // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT

  /// The formal parameter c itself.
  static Scalar parameter();
  static Scalar from_coefficients(std::vector<Rational> coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  /// Degree in c; -1 for the zero scalar.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of c^power (zero beyond the degree).
  Rational coefficient(std::size_t power) const;
  /// Value of a constant scalar. Throws "parameterized coefficients" otherwise.
  Rational constant() const;

  Scalar evaluate(const Rational& c) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// Single-term scalars such as "3/2", "-c" or "2*c^2".
  bool is_monomial() const;
  /// True when the leading coefficient is negative.
  bool is_negative() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

}  // namespace oscrep

#endif
