#include "oscrep/structural.hpp"

#include "oscrep/error.hpp"

namespace oscrep {

std::string to_string(Structural which) {
  switch (which) {
    case Structural::D: return "D";
    case Structural::Eta: return "eta";
    case Structural::Laplacian: return "laplacian";
  }
  return "?";
}

Structural parse_structural(const std::string& text) {
  if (text == "D") return Structural::D;
  if (text == "eta") return Structural::Eta;
  if (text == "laplacian") return Structural::Laplacian;
  throw Error("bad structural operator: '" + text + "'");
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::ConformalEven: return "conformal-even";
    case Variant::ConformalOdd: return "conformal-odd";
    case Variant::SwappedEven: return "swapped-even";
    case Variant::SwappedOdd: return "swapped-odd";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  for (auto v : {Variant::ConformalEven, Variant::ConformalOdd, Variant::SwappedEven, Variant::SwappedOdd})
    if (to_string(v) == text) return v;
  throw Error("bad variant: '" + text + "'");
}

Parity parity_of(Variant variant) {
  return variant == Variant::ConformalEven || variant == Variant::SwappedEven ? Parity::Even : Parity::Odd;
}

bool is_swapped(Variant variant) { return variant == Variant::SwappedEven || variant == Variant::SwappedOdd; }

void validate_swap_indices(int n, int n1, int n2) {
  if (!(1 <= n1 && n1 <= n2 && n2 <= n))
    throw Error("invalid (n1,n2) = (" + std::to_string(n1) + "," + std::to_string(n2) + ") for n = " +
                std::to_string(n) + ": need 1 <= n1 <= n2 <= n");
}

WeylOperator structural_operator(Structural which, Variant variant, int n, std::optional<int> n1,
                                 std::optional<int> n2) {
  const VariableRoster roster(parity_of(variant), n);
  const bool odd = roster.has_x0();
  int s1 = 0, s2 = n;  // conformal: nothing swapped
  if (is_swapped(variant)) {
    if (!n1 || !n2) throw Error("missing n1/n2 for " + to_string(variant));
    validate_swap_indices(n, *n1, *n2);
    s1 = *n1;
    s2 = *n2;
  }
  auto X = [&](int i) { return WeylOperator::variable(roster, roster.x(i)); };
  auto Y = [&](int j) { return WeylOperator::variable(roster, roster.y(j)); };
  auto DX = [&](int i) { return WeylOperator::partial(roster, roster.x(i)); };
  auto DY = [&](int j) { return WeylOperator::partial(roster, roster.y(j)); };

  WeylOperator out(roster);
  switch (which) {
    case Structural::D:
      if (odd) out += X(0) * DX(0);
      for (int i = 1; i <= n; ++i) out += (i <= s1 ? -(X(i) * DX(i)) : X(i) * DX(i));
      for (int j = 1; j <= n; ++j) out += (j <= s2 ? Y(j) * DY(j) : -(Y(j) * DY(j)));
      break;
    case Structural::Eta:
      if (odd) out += X(0) * X(0) * Scalar(Rational(1, 2));
      for (int i = 1; i <= n; ++i) {
        if (i <= s1) out += Y(i) * DX(i);
        else if (i <= s2) out += X(i) * Y(i);
        else out += X(i) * DY(i);
      }
      break;
    case Structural::Laplacian: {
      const Scalar w = odd ? Scalar(2) : Scalar(1);
      if (odd) out += DX(0) * DX(0);
      for (int i = 1; i <= n; ++i) {
        if (i <= s1) out -= X(i) * DY(i) * w;
        else if (i <= s2) out += DX(i) * DY(i) * w;
        else out -= Y(i) * DX(i) * w;
      }
      break;
    }
  }
  return out;
}

}  // namespace oscrep
