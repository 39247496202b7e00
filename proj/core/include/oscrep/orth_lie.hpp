#ifndef OSCREP_ORTH_LIE_HPP
#define OSCREP_ORTH_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscrep/polynomial.hpp"
#include "oscrep/scalar.hpp"

namespace oscrep {

/// o(2n+2) for even parity, o(2n+3) for odd parity.
///
/// Matrix rows and columns use the labels 1..2n+2 (even) or 0..2n+2 (odd).
struct LieAlgebraSpec {
  Parity parity;
  int n;

  LieAlgebraSpec(Parity p, int rank_n);
  int matrix_size() const { return parity == Parity::Even ? 2 * n + 2 : 2 * n + 3; }
  int first_index() const { return parity == Parity::Even ? 1 : 0; }
  int last_index() const { return 2 * n + 2; }
  /// (2n+2)(2n+1)/2 or (2n+3)(2n+2)/2.
  std::size_t dimension() const;
  VariableRoster roster() const { return VariableRoster(parity, n); }
  std::string name() const;

  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

enum class Family { A, B, C, K };

/// A(i,j), B(i,j), C(i,j) with i,j in 1..n+1, or K(i) with i in 1..2n+2.
struct BasisLabel {
  Family family;
  int i;
  int j = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(const BasisLabel& label);
/// Accepts "A(1,2)", "B(1,2)", "C(1,2)", "K(3)".
BasisLabel parse_label(const std::string& text);

/// Checks index ranges for the spec; B/C with i == j and K in even parity
/// are rejected, B/C with i > j are accepted (they are -B(j,i), -C(j,i)).
void validate_label(const LieAlgebraSpec& spec, const BasisLabel& label);

/// Sign and canonical basis label of a valid label: B(j,i) -> (-1, B(i,j)).
std::pair<int, BasisLabel> canonical_label(const LieAlgebraSpec& spec, const BasisLabel& label);

/// Deterministic basis: A(i,j) row-major, then B(i<j), C(i<j), then K(1..2n+2).
std::vector<BasisLabel> basis(const LieAlgebraSpec& spec);
/// Cartan subalgebra basis A(1,1)..A(n+1,n+1).
std::vector<BasisLabel> cartan(const LieAlgebraSpec& spec);
/// A, B, C with indices <= n: a copy of o(2n).
std::vector<BasisLabel> subalgebra_k(const LieAlgebraSpec& spec);
/// A(i,j) with i,j <= n: a copy of gl(n) (sl(n) plus center).
std::vector<BasisLabel> subalgebra_l(const LieAlgebraSpec& spec);
/// subalgebra_k plus K(i), K(n+1+i) for i <= n: a copy of o(2n+1). Odd parity only.
std::vector<BasisLabel> subalgebra_g(const LieAlgebraSpec& spec);

/// Dense square rational matrix, indexed by the spec's row/column labels.
class LieMatrix {
 public:
  explicit LieMatrix(const LieAlgebraSpec& spec);

  const LieAlgebraSpec& spec() const { return spec_; }
  const Rational& at(int row, int col) const;
  Rational& at(int row, int col);
  bool is_zero() const;
  const std::optional<BasisLabel>& label() const { return label_; }
  void set_label(BasisLabel label) { label_ = label; }

  LieMatrix& operator+=(const LieMatrix& other);
  LieMatrix& operator-=(const LieMatrix& other);
  LieMatrix& operator*=(const Rational& q);
  friend LieMatrix operator+(LieMatrix a, const LieMatrix& b) { return a += b; }
  friend LieMatrix operator-(LieMatrix a, const LieMatrix& b) { return a -= b; }
  friend LieMatrix operator*(LieMatrix a, const Rational& q) { return a *= q; }
  friend LieMatrix operator*(const LieMatrix& a, const LieMatrix& b);
  /// Entry-wise equality; labels are ignored.
  friend bool operator==(const LieMatrix& a, const LieMatrix& b) {
    return a.spec_ == b.spec_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t offset(int row, int col) const;
  LieAlgebraSpec spec_;
  std::vector<Rational> entries_;
  std::optional<BasisLabel> label_;
};

/// E_{r,s} in the spec's indexing.
LieMatrix unit_matrix(const LieAlgebraSpec& spec, int row, int col);
LieMatrix basis_matrix(const LieAlgebraSpec& spec, const BasisLabel& label);
LieMatrix bracket(const LieMatrix& x, const LieMatrix& y);

using Expansion = std::map<BasisLabel, Rational>;
/// Coefficients of m in the labeled basis. Throws "not in algebra" when m
/// is outside the span.
Expansion expand(const LieAlgebraSpec& spec, const LieMatrix& m);
LieMatrix combine(const LieAlgebraSpec& spec, const Expansion& e);

/// Root of a basis element relative to the Cartan A(1,1)..A(n+1,n+1):
/// alpha with [A(i,i), X] = alpha_i X. Returns nullopt for Cartan labels.
std::optional<std::vector<int>> root_of(const LieAlgebraSpec& spec, const BasisLabel& label);

/// Roots of all basis labels, computed once from Cartan brackets.
class RootTable {
 public:
  explicit RootTable(const LieAlgebraSpec& spec);
  const std::optional<std::vector<int>>& root(const BasisLabel& label) const;

 private:
  std::map<BasisLabel, std::optional<std::vector<int>>> roots_;
};

/// Structural self-check of the basis: dimension formula, antisymmetry and
/// closure for all pairs, Jacobi for all triples, and bracket closure of the
/// named subalgebras.
struct LieCheckReport {
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<std::string> subalgebras;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

LieCheckReport verify_lie(const LieAlgebraSpec& spec);

}  // namespace oscrep

#endif
