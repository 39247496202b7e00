#include "oscrep/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "oscrep/error.hpp"

namespace oscrep {

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw Error("bad parity: '" + text + "'");
}

VariableRoster::VariableRoster(Parity parity, int n) : parity_(parity), n_(n) {
  if (n < 1) throw Error("n must be positive, got " + std::to_string(n));
}

std::size_t VariableRoster::x(int i) const {
  int lo = has_x0() ? 0 : 1;
  if (i < lo || i > n_) throw Error("no variable x" + std::to_string(i));
  return static_cast<std::size_t>(has_x0() ? i : i - 1);
}

std::size_t VariableRoster::y(int j) const {
  if (j < 1 || j > n_) throw Error("no variable y" + std::to_string(j));
  return static_cast<std::size_t>((has_x0() ? n_ + 1 : n_) + j - 1);
}

std::string VariableRoster::name(std::size_t position) const {
  std::size_t xs = has_x0() ? n_ + 1 : n_;
  if (position < xs) return "x" + std::to_string(has_x0() ? position : position + 1);
  return "y" + std::to_string(position - xs + 1);
}

std::optional<std::size_t> VariableRoster::find(const std::string& name) const {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return std::nullopt;
  if (!std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return std::nullopt;
  if (name.size() > 6) return std::nullopt;
  int idx = std::stoi(name.substr(1));
  if (name[0] == 'x') {
    if (idx > n_ || (idx == 0 && !has_x0())) return std::nullopt;
    return x(idx);
  }
  if (idx < 1 || idx > n_) return std::nullopt;
  return y(idx);
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exponents.size(); ++v) out.exponents[v] += other.exponents[v];
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t v = 0; v < exponents.size(); ++v)
    if (exponents[v] < other.exponents[v]) return false;
  return true;
}

bool operator<(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

std::string to_string(const Monomial& m, const VariableRoster& roster) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += roster.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, const VariableRoster& roster) {
  Monomial m(roster.size());
  if (text == "1") return m;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(start, end - start);
    std::uint32_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      std::string p = factor.substr(caret + 1);
      if (p.empty() || !std::all_of(p.begin(), p.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error("bad monomial: '" + text + "'");
      power = static_cast<std::uint32_t>(std::stoul(p));
      factor = factor.substr(0, caret);
    }
    auto pos = roster.find(factor);
    if (!pos) throw Error("bad monomial: unknown variable '" + factor + "' in '" + text + "'");
    m[*pos] += power;
    start = end + 1;
  }
  return m;
}

namespace {

void enumerate_degree(std::size_t var, std::uint32_t remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    current[var] = e;
    enumerate_degree(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableRoster& roster, std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial current(roster.size());
  enumerate_degree(0, degree, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to(const VariableRoster& roster, std::uint32_t cap) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= cap; ++d) {
    auto layer = monomials_of_degree(roster, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Polynomial Polynomial::constant(const VariableRoster& roster, const Scalar& value) {
  return monomial(roster, Monomial(roster.size()), value);
}

Polynomial Polynomial::monomial(const VariableRoster& roster, const Monomial& m, const Scalar& coeff) {
  if (m.size() != roster.size()) throw Error("roster mismatch: monomial length");
  Polynomial p(roster);
  p.add_term(m, coeff);
  return p;
}

Polynomial Polynomial::variable(const VariableRoster& roster, std::size_t position) {
  Monomial m(roster.size());
  m[position] = 1;
  return monomial(roster, m);
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

bool Polynomial::has_parameter() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.second.is_constant(); });
}

void Polynomial::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_roster(const Polynomial& other) const {
  if (!(roster_ == other.roster_)) throw Error("roster mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_roster(other);
  for (const auto& [m, s] : other.terms_) add_term(m, s);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_roster(other);
  for (const auto& [m, s] : other.terms_) add_term(m, -s);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, s] : p.terms_) s = -s;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_roster(b);
  Polynomial out(a.roster_);
  for (const auto& [ma, sa] : a.terms_)
    for (const auto& [mb, sb] : b.terms_) out.add_term(ma * mb, sa * sb);
  return out;
}

Polynomial Polynomial::evaluate(const Rational& c) const {
  Polynomial out(roster_);
  for (const auto& [m, s] : terms_) out.add_term(m, s.evaluate(c));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, s] = *it;
    bool unit_monomial = m.degree() == 0;
    bool negative = s.is_monomial() && s.is_negative();
    Scalar mag = negative ? -s : s;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coeff = mag.to_string();
    if (!mag.is_monomial()) coeff = "(" + coeff + ")";
    if (unit_monomial) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += oscrep::to_string(m, roster_);
    }
  }
  return out;
}

}  // namespace oscrep
