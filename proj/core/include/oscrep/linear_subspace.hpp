#ifndef OSCREP_LINEAR_SUBSPACE_HPP
#define OSCREP_LINEAR_SUBSPACE_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "oscrep/polynomial.hpp"

namespace oscrep {

/// Subspace of the span of a finite monomial index, held as a reduced row
/// echelon basis over Q.
///
/// Columns follow the order of the index; the pivot of a row is its first
/// nonzero column. Rows are pivot-normalized, sorted by pivot, and every
/// pivot column is zero in all other rows. Coefficients must be constant
/// (the parameter c already specialized).
class LinearSubspace {
 public:
  LinearSubspace(VariableRoster roster, std::vector<Monomial> index);

  const VariableRoster& roster() const { return roster_; }
  const std::vector<Monomial>& index() const { return index_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return index_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Polynomial& v) const;
  /// Adds v to the span. Returns true iff the rank grew.
  bool insert(const Polynomial& v);

  std::vector<Rational> coordinates(const Polynomial& v) const;
  Polynomial to_polynomial(const std::vector<Rational>& coords) const;
  /// Basis rows as polynomials.
  std::vector<Polynomial> basis() const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.roster_ == b.roster_ && a.index_ == b.index_ && a.rows_ == b.rows_;
  }

 private:
  /// Reduces coords against the current rows in place.
  void reduce(std::vector<Rational>& coords) const;

  VariableRoster roster_;
  std::vector<Monomial> index_;
  std::map<Monomial, std::size_t> position_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical subspace spanned by `vectors` over `index`.
///
/// Throws "parameterized coefficients" if any coefficient depends on c and
/// "index miss" if a term lies outside the index.
LinearSubspace rref(const VariableRoster& roster, std::span<const Polynomial> vectors,
                    std::vector<Monomial> index);

/// One column of a linear map: an input basis vector and its image.
struct MapColumn {
  Polynomial input;
  Polynomial image;
};

/// Nullspace of the map, expressed as combinations of the input vectors.
///
/// The returned subspace is indexed by the monomials occurring in the inputs.
LinearSubspace kernel(const VariableRoster& roster, std::span<const MapColumn> map,
                      std::vector<Monomial> codomain_index);

}  // namespace oscrep

#endif
