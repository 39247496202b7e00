#include "oscrep/orth_lie.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "oscrep/error.hpp"

namespace oscrep {

LieAlgebraSpec::LieAlgebraSpec(Parity p, int rank_n) : parity(p), n(rank_n) {
  if (rank_n < 1) throw Error("n must be positive, got " + std::to_string(rank_n));
}

std::size_t LieAlgebraSpec::dimension() const {
  auto m = static_cast<std::size_t>(matrix_size());
  return m * (m - 1) / 2;
}

std::string LieAlgebraSpec::name() const { return "o(" + std::to_string(matrix_size()) + ")"; }

std::string to_string(const BasisLabel& label) {
  switch (label.family) {
    case Family::A: return "A(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    case Family::B: return "B(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    case Family::C: return "C(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    case Family::K: return "K(" + std::to_string(label.i) + ")";
  }
  return "?";
}

BasisLabel parse_label(const std::string& text) {
  static const std::regex pair_re(R"(^\s*([ABC])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  static const std::regex single_re(R"(^\s*K\s*\(\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pair_re)) {
    Family f = m[1] == "A" ? Family::A : (m[1] == "B" ? Family::B : Family::C);
    return {f, std::stoi(m[2]), std::stoi(m[3])};
  }
  if (std::regex_match(text, m, single_re)) return {Family::K, std::stoi(m[1]), 0};
  throw Error("bad label: '" + text + "'");
}

void validate_label(const LieAlgebraSpec& spec, const BasisLabel& label) {
  auto bad = [&](const std::string& why) { return Error("invalid label " + to_string(label) + ": " + why); };
  const int top = spec.n + 1;
  if (label.family == Family::K) {
    if (spec.parity == Parity::Even) throw bad("K labels need odd parity");
    if (label.i < 1 || label.i > 2 * spec.n + 2) throw bad("index out of range");
    return;
  }
  if (label.i < 1 || label.i > top || label.j < 1 || label.j > top) throw bad("index out of range");
  if (label.family != Family::A && label.i == label.j) throw bad("B(i,i) and C(i,i) vanish");
}

std::pair<int, BasisLabel> canonical_label(const LieAlgebraSpec& spec, const BasisLabel& label) {
  validate_label(spec, label);
  if ((label.family == Family::B || label.family == Family::C) && label.i > label.j)
    return {-1, BasisLabel{label.family, label.j, label.i}};
  return {1, label};
}

std::vector<BasisLabel> basis(const LieAlgebraSpec& spec) {
  std::vector<BasisLabel> out;
  const int top = spec.n + 1;
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j) out.push_back({Family::A, i, j});
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) out.push_back({Family::B, i, j});
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) out.push_back({Family::C, i, j});
  if (spec.parity == Parity::Odd)
    for (int i = 1; i <= 2 * spec.n + 2; ++i) out.push_back({Family::K, i, 0});
  return out;
}

std::vector<BasisLabel> cartan(const LieAlgebraSpec& spec) {
  std::vector<BasisLabel> out;
  for (int i = 1; i <= spec.n + 1; ++i) out.push_back({Family::A, i, i});
  return out;
}

std::vector<BasisLabel> subalgebra_k(const LieAlgebraSpec& spec) {
  std::vector<BasisLabel> out;
  for (const auto& l : basis(spec))
    if (l.family != Family::K && l.i <= spec.n && l.j <= spec.n) out.push_back(l);
  return out;
}

std::vector<BasisLabel> subalgebra_l(const LieAlgebraSpec& spec) {
  std::vector<BasisLabel> out;
  for (const auto& l : basis(spec))
    if (l.family == Family::A && l.i <= spec.n && l.j <= spec.n) out.push_back(l);
  return out;
}

std::vector<BasisLabel> subalgebra_g(const LieAlgebraSpec& spec) {
  if (spec.parity != Parity::Odd) throw Error("subalgebra G needs odd parity");
  auto out = subalgebra_k(spec);
  for (int i = 1; i <= spec.n; ++i) out.push_back({Family::K, i, 0});
  for (int i = 1; i <= spec.n; ++i) out.push_back({Family::K, spec.n + 1 + i, 0});
  return out;
}

LieMatrix::LieMatrix(const LieAlgebraSpec& spec)
    : spec_(spec), entries_(static_cast<std::size_t>(spec.matrix_size() * spec.matrix_size())) {}

std::size_t LieMatrix::offset(int row, int col) const {
  const int lo = spec_.first_index(), hi = spec_.last_index();
  if (row < lo || row > hi || col < lo || col > hi) throw Error("matrix index out of range");
  return static_cast<std::size_t>((row - lo) * spec_.matrix_size() + (col - lo));
}

const Rational& LieMatrix::at(int row, int col) const { return entries_[offset(row, col)]; }
Rational& LieMatrix::at(int row, int col) { return entries_[offset(row, col)]; }

bool LieMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

LieMatrix& LieMatrix::operator+=(const LieMatrix& other) {
  if (!(spec_ == other.spec_)) throw Error("size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  label_.reset();
  return *this;
}

LieMatrix& LieMatrix::operator-=(const LieMatrix& other) {
  if (!(spec_ == other.spec_)) throw Error("size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  label_.reset();
  return *this;
}

LieMatrix& LieMatrix::operator*=(const Rational& q) {
  for (auto& e : entries_) e *= q;
  label_.reset();
  return *this;
}

LieMatrix operator*(const LieMatrix& a, const LieMatrix& b) {
  if (!(a.spec_ == b.spec_)) throw Error("size mismatch");
  LieMatrix out(a.spec_);
  const int lo = a.spec_.first_index(), hi = a.spec_.last_index();
  for (int r = lo; r <= hi; ++r)
    for (int k = lo; k <= hi; ++k) {
      const Rational& ark = a.at(r, k);
      if (ark == 0) continue;
      for (int s = lo; s <= hi; ++s) {
        const Rational& bks = b.at(k, s);
        if (bks != 0) out.at(r, s) += ark * bks;
      }
    }
  return out;
}

std::string LieMatrix::to_string() const {
  std::string out;
  const int lo = spec_.first_index(), hi = spec_.last_index();
  for (int r = lo; r <= hi; ++r)
    for (int s = lo; s <= hi; ++s) {
      const Rational& q = at(r, s);
      if (q == 0) continue;
      if (!out.empty()) out += q < 0 ? " - " : " + ";
      else if (q < 0) out += "-";
      Rational mag = abs(q);
      if (mag != 1) out += oscrep::to_string(mag) + "*";
      out += "E(" + std::to_string(r) + "," + std::to_string(s) + ")";
    }
  return out.empty() ? "0" : out;
}

LieMatrix unit_matrix(const LieAlgebraSpec& spec, int row, int col) {
  LieMatrix m(spec);
  m.at(row, col) = 1;
  return m;
}

LieMatrix basis_matrix(const LieAlgebraSpec& spec, const BasisLabel& label) {
  validate_label(spec, label);
  const int n = spec.n;
  const int i = label.i, j = label.j;
  LieMatrix m(spec);
  switch (label.family) {
    case Family::A:
      m = unit_matrix(spec, i, j) - unit_matrix(spec, n + 1 + j, n + 1 + i);
      break;
    case Family::B:
      m = unit_matrix(spec, i, n + 1 + j) - unit_matrix(spec, j, n + 1 + i);
      break;
    case Family::C:
      m = unit_matrix(spec, n + 1 + i, j) - unit_matrix(spec, n + 1 + j, i);
      break;
    case Family::K:
      if (i <= n + 1) {
        m = unit_matrix(spec, 0, i) - unit_matrix(spec, n + i + 1, 0);
      } else {
        const int r = i - (n + 1);
        m = unit_matrix(spec, 0, n + 1 + r) - unit_matrix(spec, r, 0);
      }
      break;
  }
  m.set_label(label);
  return m;
}

LieMatrix bracket(const LieMatrix& x, const LieMatrix& y) {
  if (!(x.spec() == y.spec())) throw Error("size mismatch");
  return x * y - y * x;
}

namespace {

// Entry that identifies each basis element's coefficient: no other basis
// element has a nonzero entry there.
std::pair<int, int> pivot_entry(const LieAlgebraSpec& spec, const BasisLabel& l) {
  const int n = spec.n;
  switch (l.family) {
    case Family::A: return {l.i, l.j};
    case Family::B: return {l.i, n + 1 + l.j};
    case Family::C: return {n + 1 + l.i, l.j};
    case Family::K: return {0, l.i};
  }
  return {0, 0};
}

}  // namespace

Expansion expand(const LieAlgebraSpec& spec, const LieMatrix& m) {
  if (!(m.spec() == spec)) throw Error("size mismatch");
  Expansion out;
  LieMatrix residual = m;
  for (const auto& label : basis(spec)) {
    auto [r, s] = pivot_entry(spec, label);
    const Rational coeff = m.at(r, s);
    if (coeff == 0) continue;
    out[label] = coeff;
    residual -= basis_matrix(spec, label) * coeff;
  }
  if (!residual.is_zero()) throw Error("not in algebra: residual " + residual.to_string());
  return out;
}

LieMatrix combine(const LieAlgebraSpec& spec, const Expansion& e) {
  LieMatrix out(spec);
  for (const auto& [label, q] : e) out += basis_matrix(spec, label) * q;
  return out;
}

std::optional<std::vector<int>> root_of(const LieAlgebraSpec& spec, const BasisLabel& label) {
  const auto [sign, canon] = canonical_label(spec, label);
  (void)sign;
  if (canon.family == Family::A && canon.i == canon.j) return std::nullopt;
  const LieMatrix x = basis_matrix(spec, canon);
  std::vector<int> alpha;
  for (const auto& h : cartan(spec)) {
    Expansion e = expand(spec, bracket(basis_matrix(spec, h), x));
    if (e.empty()) {
      alpha.push_back(0);
      continue;
    }
    if (e.size() != 1 || e.begin()->first != canon) throw Error("internal: basis element is not a root vector");
    const Rational& q = e.begin()->second;
    if (q.get_den() != 1) throw Error("internal: non-integral root");
    alpha.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return alpha;
}

RootTable::RootTable(const LieAlgebraSpec& spec) {
  for (const auto& label : basis(spec)) roots_.emplace(label, root_of(spec, label));
}

const std::optional<std::vector<int>>& RootTable::root(const BasisLabel& label) const {
  auto it = roots_.find(label);
  if (it == roots_.end()) throw Error("invalid label " + to_string(label) + ": not a basis label");
  return it->second;
}

LieCheckReport verify_lie(const LieAlgebraSpec& spec) {
  LieCheckReport report;
  const auto labels = basis(spec);
  const std::size_t m = static_cast<std::size_t>(spec.matrix_size());
  report.dimension = labels.size();
  report.expected_dimension = m * (m - 1) / 2;
  if (report.dimension != report.expected_dimension || spec.dimension() != report.expected_dimension)
    report.failures.push_back("dimension " + std::to_string(report.dimension) + " != " +
                              std::to_string(report.expected_dimension));

  std::vector<LieMatrix> mats;
  for (const auto& l : labels) mats.push_back(basis_matrix(spec, l));
  const std::size_t d = labels.size();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      ++report.pairs_checked;
      const LieMatrix xy = bracket(mats[a], mats[b]);
      if (!(xy + bracket(mats[b], mats[a])).is_zero())
        report.failures.push_back("antisymmetry " + to_string(labels[a]) + "," + to_string(labels[b]));
      try {
        expand(spec, xy);
      } catch (const Error& e) {
        report.failures.push_back("closure " + to_string(labels[a]) + "," + to_string(labels[b]) + ": " + e.what());
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        ++report.triples_checked;
        const LieMatrix j = bracket(mats[a], bracket(mats[b], mats[c])) +
                            bracket(mats[b], bracket(mats[c], mats[a])) +
                            bracket(mats[c], bracket(mats[a], mats[b]));
        if (!j.is_zero())
          report.failures.push_back("jacobi " + to_string(labels[a]) + "," + to_string(labels[b]) + "," +
                                    to_string(labels[c]));
      }

  std::vector<std::pair<std::string, std::vector<BasisLabel>>> subs{{"K", subalgebra_k(spec)},
                                                                    {"L", subalgebra_l(spec)}};
  if (spec.parity == Parity::Odd) subs.emplace_back("G", subalgebra_g(spec));
  for (const auto& [name, sub] : subs) {
    report.subalgebras.push_back(name);
    const std::set<BasisLabel> members(sub.begin(), sub.end());
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b)
        for (const auto& [label, q] : expand(spec, bracket(basis_matrix(spec, sub[a]), basis_matrix(spec, sub[b]))))
          if (!members.count(label))
            report.failures.push_back("subalgebra " + name + " not closed at " + to_string(sub[a]) + "," +
                                      to_string(sub[b]));
  }
  return report;
}

}  // namespace oscrep
