#ifndef OSCREP_POLYNOMIAL_HPP
#define OSCREP_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscrep/scalar.hpp"

namespace oscrep {

enum class Parity { Even, Odd };

std::string to_string(Parity parity);
Parity parse_parity(const std::string& text);

/// Ordered variable list of the polynomial algebra.
///
/// Even parity: x1..xn, y1..yn. Odd parity: x0, x1..xn, y1..yn.
class VariableRoster {
 public:
  VariableRoster(Parity parity, int n);

  Parity parity() const { return parity_; }
  int n() const { return n_; }
  bool has_x0() const { return parity_ == Parity::Odd; }
  std::size_t size() const { return static_cast<std::size_t>(2 * n_ + (has_x0() ? 1 : 0)); }

  /// Position of x_i; i = 0 only under odd parity.
  std::size_t x(int i) const;
  /// Position of y_j, 1 <= j <= n.
  std::size_t y(int j) const;
  std::string name(std::size_t position) const;
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const VariableRoster&, const VariableRoster&) = default;

 private:
  Parity parity_;
  int n_;
};

/// Exponent vector over a roster.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t variables) : exponents(variables, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::uint32_t degree() const;
  std::uint32_t operator[](std::size_t v) const { return exponents[v]; }
  std::uint32_t& operator[](std::size_t v) { return exponents[v]; }
  std::size_t size() const { return exponents.size(); }
  Monomial operator*(const Monomial& other) const;
  /// Componentwise a >= b.
  bool divisible_by(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then exponent vectors
/// compared left to right along the roster.
bool operator<(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const VariableRoster& roster);
Monomial parse_monomial(const std::string& text, const VariableRoster& roster);

/// All monomials of total degree exactly `degree`, ascending.
std::vector<Monomial> monomials_of_degree(const VariableRoster& roster, std::uint32_t degree);
/// All monomials of total degree at most `cap`, ascending.
std::vector<Monomial> monomials_up_to(const VariableRoster& roster, std::uint32_t cap);

/// Sparse multivariate polynomial with Q[c] coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Polynomial(VariableRoster roster) : roster_(roster) {}
  static Polynomial constant(const VariableRoster& roster, const Scalar& value);
  static Polynomial monomial(const VariableRoster& roster, const Monomial& m, const Scalar& coeff = Scalar(1));
  static Polynomial variable(const VariableRoster& roster, std::size_t position);

  const VariableRoster& roster() const { return roster_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Maximum total degree; -1 for zero.
  int degree() const;
  Scalar coefficient(const Monomial& m) const;
  /// Largest monomial in graded lex order. Precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  bool has_parameter() const;

  void add_term(const Monomial& m, const Scalar& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& s);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.roster_ == b.roster_ && a.terms_ == b.terms_;
  }

  Polynomial evaluate(const Rational& c) const;
  std::string to_string() const;

 private:
  void check_roster(const Polynomial& other) const;
  VariableRoster roster_;
  Terms terms_;
};

}  // namespace oscrep

#endif
