#ifndef OSCREP_STRUCTURAL_HPP
#define OSCREP_STRUCTURAL_HPP

#include <optional>
#include <string>

#include "oscrep/weyl_operator.hpp"

namespace oscrep {

/// The grading operator D, the raising operator eta and the Laplacian-type
/// lowering operator, in their conformal and swapped forms.
enum class Structural { D, Eta, Laplacian };
enum class Variant { ConformalEven, ConformalOdd, SwappedEven, SwappedOdd };

std::string to_string(Structural which);
Structural parse_structural(const std::string& text);
std::string to_string(Variant variant);
Variant parse_variant(const std::string& text);
Parity parity_of(Variant variant);
bool is_swapped(Variant variant);

/// Throws unless 1 <= n1 <= n2 <= n.
void validate_swap_indices(int n, int n1, int n2);

/// Swapped variants require n1 and n2 ("missing n1/n2" otherwise).
///
/// Conformal:  D = sum x d/dx + sum y d/dy (x0 included when odd),
///             eta = sum x_i y_i (+ x0^2/2 when odd),
///             Laplacian = sum Dx_i Dy_i (odd: Dx0^2 + 2 sum Dx_i Dy_i).
/// Swapped forms replace D_x by -x and x by D_x on x_1..x_n1, and D_y by -y
/// and y by D_y on y_{n2+1}..y_n, dropping the additive constants from D.
WeylOperator structural_operator(Structural which, Variant variant, int n, std::optional<int> n1 = std::nullopt,
                                 std::optional<int> n2 = std::nullopt);

}  // namespace oscrep

#endif
