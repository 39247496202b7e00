#include "oscrep/weyl_operator.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>

#include "oscrep/error.hpp"

namespace oscrep {

namespace {

mpz_class falling(std::uint32_t top, std::uint32_t count) {
  mpz_class out = 1;
  for (std::uint32_t i = 0; i < count; ++i) out *= top - i;
  return out;
}

mpz_class binomial(std::uint32_t n, std::uint32_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_same(const VariableRoster& a, const VariableRoster& b) {
  if (!(a == b)) throw Error("roster mismatch");
}

}  // namespace

bool operator<(const OperatorTerm& a, const OperatorTerm& b) {
  int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  if (!(a.mult == b.mult)) return a.mult < b.mult;
  return a.deriv < b.deriv;
}

WeylOperator WeylOperator::identity(const VariableRoster& roster) { return scalar(roster, Scalar(1)); }

WeylOperator WeylOperator::scalar(const VariableRoster& roster, const Scalar& s) {
  WeylOperator op(roster);
  op.add_term(Monomial(roster.size()), Monomial(roster.size()), s);
  return op;
}

WeylOperator WeylOperator::multiplication(const Polynomial& p) {
  WeylOperator op(p.roster());
  Monomial none(p.roster().size());
  for (const auto& [m, s] : p.terms()) op.add_term(m, none, s);
  return op;
}

WeylOperator WeylOperator::variable(const VariableRoster& roster, std::size_t position) {
  return multiplication(Polynomial::variable(roster, position));
}

WeylOperator WeylOperator::partial(const VariableRoster& roster, std::size_t position, std::uint32_t power) {
  WeylOperator op(roster);
  Monomial d(roster.size());
  d[position] = power;
  op.add_term(Monomial(roster.size()), d, Scalar(1));
  return op;
}

int WeylOperator::degree_raise() const {
  int best = INT_MIN;
  for (const auto& [t, s] : terms_)
    best = std::max(best, static_cast<int>(t.mult.degree()) - static_cast<int>(t.deriv.degree()));
  return best;
}

int WeylOperator::max_derivative_order() const {
  int best = 0;
  for (const auto& [t, s] : terms_) best = std::max(best, static_cast<int>(t.deriv.degree()));
  return best;
}

bool WeylOperator::has_parameter() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.second.is_constant(); });
}

std::optional<Scalar> WeylOperator::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.order() == 0) return terms_.begin()->second;
  return std::nullopt;
}

void WeylOperator::add_term(const Monomial& mult, const Monomial& deriv, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (mult.size() != roster_.size() || deriv.size() != roster_.size())
    throw Error("roster mismatch: operator term length");
  auto [it, inserted] = terms_.try_emplace(OperatorTerm{mult, deriv}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& other) {
  check_same(roster_, other.roster_);
  for (const auto& [t, s] : other.terms_) add_term(t.mult, t.deriv, s);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& other) {
  check_same(roster_, other.roster_);
  for (const auto& [t, s] : other.terms_) add_term(t.mult, t.deriv, -s);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Scalar& s) {
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

WeylOperator WeylOperator::operator-() const {
  WeylOperator op = *this;
  for (auto& [t, s] : op.terms_) s = -s;
  return op;
}

WeylOperator WeylOperator::evaluate(const Rational& c) const {
  WeylOperator op(roster_);
  for (const auto& [t, s] : terms_) op.add_term(t.mult, t.deriv, s.evaluate(c));
  return op;
}

Polynomial apply(const WeylOperator& op, const Polynomial& p) {
  check_same(op.roster(), p.roster());
  Polynomial out(p.roster());
  const std::size_t vars = p.roster().size();
  for (const auto& [term, coeff] : op.terms()) {
    for (const auto& [e, q] : p.terms()) {
      if (!e.divisible_by(term.deriv)) continue;
      mpz_class factor = 1;
      Monomial result(vars);
      for (std::size_t v = 0; v < vars; ++v) {
        factor *= falling(e[v], term.deriv[v]);
        result[v] = e[v] - term.deriv[v] + term.mult[v];
      }
      out.add_term(result, coeff * q * Scalar(Rational(factor)));
    }
  }
  return out;
}

namespace {

// Expands D^deriv * x^mult by the Leibniz rule: a sum over contraction
// vectors k <= min(deriv, mult) with coefficient prod_v C(d_v,k_v) * (m_v)_(k_v).
void leibniz(const Monomial& deriv, const Monomial& mult, std::size_t v, Monomial& k, const mpz_class& acc,
             const std::function<void(const Monomial&, const mpz_class&)>& emit) {
  if (v == deriv.size()) {
    emit(k, acc);
    return;
  }
  std::uint32_t top = std::min(deriv[v], mult[v]);
  for (std::uint32_t j = 0; j <= top; ++j) {
    k[v] = j;
    leibniz(deriv, mult, v + 1, k, acc * binomial(deriv[v], j) * falling(mult[v], j), emit);
  }
  k[v] = 0;
}

}  // namespace

WeylOperator operator*(const WeylOperator& s, const WeylOperator& t) { return compose(s, t); }

WeylOperator compose(const WeylOperator& s, const WeylOperator& t) {
  check_same(s.roster(), t.roster());
  WeylOperator out(s.roster());
  const std::size_t vars = s.roster().size();
  Monomial k(vars);
  for (const auto& [ts, cs] : s.terms()) {
    for (const auto& [tt, ct] : t.terms()) {
      const Scalar base = cs * ct;
      leibniz(ts.deriv, tt.mult, 0, k, mpz_class(1), [&](const Monomial& contraction, const mpz_class& factor) {
        Monomial mult(vars), deriv(vars);
        for (std::size_t v = 0; v < vars; ++v) {
          mult[v] = ts.mult[v] + tt.mult[v] - contraction[v];
          deriv[v] = ts.deriv[v] - contraction[v] + tt.deriv[v];
        }
        out.add_term(mult, deriv, base * Scalar(Rational(factor)));
      });
    }
  }
  return out;
}

WeylOperator commutator(const WeylOperator& s, const WeylOperator& t) { return compose(s, t) - compose(t, s); }

WeylOperator twist(const WeylOperator& op, const TwistShift& shift) {
  const std::size_t vars = op.roster().size();
  if (shift.shifts.size() != vars) throw Error("roster mismatch: twist shift length");
  WeylOperator out(op.roster());
  for (const auto& [term, coeff] : op.terms()) {
    // (D_v + s_v)^d = sum_j C(d,j) s_v^(d-j) D_v^j, independently per variable.
    std::vector<std::pair<Monomial, Rational>> partial{{Monomial(vars), Rational(1)}};
    for (std::size_t v = 0; v < vars; ++v) {
      const std::uint32_t d = term.deriv[v];
      if (d == 0) continue;
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [m, q] : partial) {
        for (std::uint32_t j = 0; j <= d; ++j) {
          Rational pw = 1;
          for (std::uint32_t r = 0; r < d - j; ++r) pw *= shift.shifts[v];
          if (pw == 0) continue;
          Monomial m2 = m;
          m2[v] = j;
          next.emplace_back(m2, q * pw * Rational(binomial(d, j)));
        }
      }
      partial = std::move(next);
    }
    for (const auto& [deriv, q] : partial) out.add_term(term.mult, deriv, coeff * Scalar(q));
  }
  return out;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [term, s] = *it;
    bool negative = s.is_monomial() && s.is_negative();
    Scalar mag = negative ? -s : s;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    std::string coeff = mag.to_string();
    if (!mag.is_monomial()) coeff = "(" + coeff + ")";
    if (coeff != "1" || term.order() == 0) factors.push_back(coeff);
    if (term.mult.degree() > 0) factors.push_back(oscrep::to_string(term.mult, roster_));
    for (std::size_t v = 0; v < roster_.size(); ++v) {
      if (term.deriv[v] == 0) continue;
      std::string f = "D" + roster_.name(v);
      if (term.deriv[v] > 1) f += "^" + std::to_string(term.deriv[v]);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

namespace {

class OperatorParser {
 public:
  OperatorParser(const std::string& text, const VariableRoster& roster) : text_(text), roster_(roster) {}

  WeylOperator parse() {
    WeylOperator result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("bad expression '" + text_ + "': " + why + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylOperator expression() {
    WeylOperator acc(roster_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    WeylOperator first = term();
    acc += negate ? -first : first;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  WeylOperator term() {
    WeylOperator acc = power();
    while (accept('*')) acc = compose(acc, power());
    return acc;
  }

  WeylOperator power() {
    WeylOperator base = atom();
    if (!accept('^')) return base;
    std::uint32_t e = integer();
    WeylOperator acc = WeylOperator::identity(roster_);
    for (std::uint32_t i = 0; i < e; ++i) acc = compose(acc, base);
    return acc;
  }

  std::uint32_t integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return static_cast<std::uint32_t>(std::stoul(text_.substr(start, pos_ - start)));
  }

  WeylOperator atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      WeylOperator inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      return WeylOperator::scalar(roster_, Scalar(parse_rational(text_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("unexpected '" + std::string(1, ch) + "'");
    if (word == "c") return WeylOperator::scalar(roster_, Scalar::parameter());
    if (word[0] == 'D') {
      auto v = roster_.find(word.substr(1));
      if (!v) fail("unknown derivative '" + word + "'");
      return WeylOperator::partial(roster_, *v);
    }
    auto v = roster_.find(word);
    if (!v) fail("unknown variable '" + word + "'");
    return WeylOperator::variable(roster_, *v);
  }

  const std::string& text_;
  const VariableRoster& roster_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOperator parse_operator(const std::string& text, const VariableRoster& roster) {
  return OperatorParser(text, roster).parse();
}

Polynomial parse_polynomial(const std::string& text, const VariableRoster& roster) {
  WeylOperator op = parse_operator(text, roster);
  if (op.max_derivative_order() > 0) throw Error("bad polynomial '" + text + "': contains derivatives");
  return apply(op, Polynomial::constant(roster, Scalar(1)));
}

}  // namespace oscrep
