#include "oscrep/linear_subspace.hpp"

#include <algorithm>
#include <set>

#include "oscrep/error.hpp"

namespace oscrep {

LinearSubspace::LinearSubspace(VariableRoster roster, std::vector<Monomial> index)
    : roster_(roster), index_(std::move(index)) {
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (index_[i].size() != roster_.size()) throw Error("roster mismatch: index monomial length");
    if (!position_.emplace(index_[i], i).second) throw Error("duplicate monomial in index");
  }
}

std::vector<Rational> LinearSubspace::coordinates(const Polynomial& v) const {
  if (!(v.roster() == roster_)) throw Error("roster mismatch");
  std::vector<Rational> coords(index_.size());
  for (const auto& [m, s] : v.terms()) {
    if (!s.is_constant()) throw Error("parameterized coefficients: " + s.to_string());
    auto it = position_.find(m);
    if (it == position_.end()) throw Error("index miss: " + to_string(m, roster_));
    coords[it->second] = s.constant();
  }
  return coords;
}

Polynomial LinearSubspace::to_polynomial(const std::vector<Rational>& coords) const {
  Polynomial p(roster_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) p.add_term(index_[i], Scalar(coords[i]));
  return p;
}

void LinearSubspace::reduce(std::vector<Rational>& coords) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = coords[pivots_[r]];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < row.size(); ++j)
      if (row[j] != 0) coords[j] -= factor * row[j];
  }
}

bool LinearSubspace::contains(const Polynomial& v) const {
  auto coords = coordinates(v);
  reduce(coords);
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

bool LinearSubspace::insert(const Polynomial& v) {
  auto coords = coordinates(v);
  reduce(coords);
  auto first = std::find_if(coords.begin(), coords.end(), [](const Rational& q) { return q != 0; });
  if (first == coords.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(first - coords.begin());
  const Rational lead = coords[pivot];
  for (std::size_t j = pivot; j < coords.size(); ++j) coords[j] /= lead;
  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < row.size(); ++j)
      if (coords[j] != 0) row[j] -= factor * coords[j];
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto offset = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + offset, std::move(coords));
  return true;
}

std::vector<Polynomial> LinearSubspace::basis() const {
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(to_polynomial(row));
  return out;
}

LinearSubspace rref(const VariableRoster& roster, std::span<const Polynomial> vectors,
                    std::vector<Monomial> index) {
  LinearSubspace space(roster, std::move(index));
  for (const auto& v : vectors) space.insert(v);
  return space;
}

LinearSubspace kernel(const VariableRoster& roster, std::span<const MapColumn> map,
                      std::vector<Monomial> codomain_index) {
  std::set<Monomial> domain_monomials;
  for (const auto& col : map)
    for (const auto& [m, s] : col.input.terms()) domain_monomials.insert(m);
  LinearSubspace result(roster, std::vector<Monomial>(domain_monomials.begin(), domain_monomials.end()));

  // Gaussian elimination on the transposed system: each column image is a
  // row; track the combination of inputs producing each reduced row.
  LinearSubspace codomain(roster, std::move(codomain_index));
  const std::size_t cols = codomain.ambient_dimension();
  const std::size_t k = map.size();
  std::vector<std::vector<Rational>> image_rows;
  std::vector<std::vector<Rational>> combos;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k; ++c) {
    auto img = codomain.coordinates(map[c].image);
    // validate input coefficients up front
    (void)result.coordinates(map[c].input);
    std::vector<Rational> combo(k);
    combo[c] = 1;
    for (std::size_t r = 0; r < image_rows.size(); ++r) {
      const Rational f = img[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (image_rows[r][j] != 0) img[j] -= f * image_rows[r][j];
      for (std::size_t j = 0; j < k; ++j)
        if (combos[r][j] != 0) combo[j] -= f * combos[r][j];
    }
    auto first = std::find_if(img.begin(), img.end(), [](const Rational& q) { return q != 0; });
    if (first == img.end()) {
      Polynomial v(roster);
      for (std::size_t j = 0; j < k; ++j)
        if (combo[j] != 0) v += map[j].input * Scalar(combo[j]);
      result.insert(v);
      continue;
    }
    const std::size_t p = static_cast<std::size_t>(first - img.begin());
    const Rational lead = img[p];
    for (auto& q : img) q /= lead;
    for (auto& q : combo) q /= lead;
    image_rows.push_back(std::move(img));
    combos.push_back(std::move(combo));
    pivots.push_back(p);
  }
  return result;
}

}  // namespace oscrep
