#include "oscrep/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "oscrep/error.hpp"

namespace oscrep {

Scalar::Scalar(const Rational& value) {
  if (value != 0) coefficients_.push_back(value);
}

Scalar::Scalar(long value) {
  if (value != 0) coefficients_.emplace_back(value);
}

Scalar Scalar::parameter() {
  Scalar s;
  s.coefficients_ = {Rational(0), Rational(1)};
  return s;
}

Scalar Scalar::from_coefficients(std::vector<Rational> coefficients) {
  Scalar s;
  s.coefficients_ = std::move(coefficients);
  for (auto& q : s.coefficients_) q.canonicalize();
  s.trim();
  return s;
}

void Scalar::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Scalar::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational Scalar::constant() const {
  if (!is_constant()) throw Error("parameterized coefficients: " + to_string());
  return coefficient(0);
}

Scalar Scalar::evaluate(const Rational& c) const {
  // Horner
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * c + *it;
  return Scalar(acc);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  if (other.coefficients_.size() == 1) {
    for (auto& q : coefficients_) q *= other.coefficients_[0];
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      product[i + j] += coefficients_[i] * other.coefficients_[j];
  coefficients_ = std::move(product);
  trim();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& q : s.coefficients_) q = -q;
  return s;
}

bool Scalar::is_monomial() const {
  return std::count_if(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& q) { return q != 0; }) <= 1;
}

bool Scalar::is_negative() const { return !is_zero() && coefficients_.back() < 0; }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Rational& q = coefficients_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += oscrep::to_string(mag);
      continue;
    }
    if (mag != 1) out += oscrep::to_string(mag) + "*";
    out += "c";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error("bad rational literal: '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  std::size_t slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(pos, text.size())) throw bad();
  } else {
    if (!digits(pos, slash) || !digits(slash + 1, text.size())) throw bad();
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error("bad rational literal: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace oscrep
