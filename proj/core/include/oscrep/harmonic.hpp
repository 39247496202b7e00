#ifndef OSCREP_HARMONIC_HPP
#define OSCREP_HARMONIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "oscrep/linear_subspace.hpp"
#include "oscrep/representation.hpp"

namespace oscrep {

/// Joint eigenvalues on a monomial of the swapped family: mu[i-1] for the
/// Cartan image of A(i,i), i <= n, and the grading eigenvalue k.
struct Weight {
  std::vector<int> mu;
  int k = 0;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

/// Eigenvalue of the grading operator D on a monomial (conformal or swapped form).
int grading_of(const RepFamily& rep, const Monomial& m);
/// Throws "not a weight family" unless rep is swapped.
Weight weight_of(const RepFamily& rep, const Monomial& m);
/// Weight of image(X) applied to a weight-w vector, for a root vector X.
Weight shifted(const Weight& w, const std::vector<int>& root);

/// Every monomial of weight w, sorted ascending.
std::vector<Monomial> weight_space_basis(const RepFamily& rep, const Weight& w);

struct GradedPiece {
  int k = 0;
  int cap = 0;
  std::vector<Monomial> basis;
};

/// Monomials of total degree <= cap with grading eigenvalue k.
GradedPiece graded_piece(const RepFamily& rep, int k, int cap);

/// Kernel of the Laplacian-type operator on the capped graded piece.
LinearSubspace harmonic_basis(const RepFamily& rep, int k, int cap);

enum class DecompositionStatus { Pass, Fail, PreconditionUnmet };
std::string to_string(DecompositionStatus status);

struct DecompositionComponent {
  int power = 0;            // i in eta^i(h)
  int harmonic_grade = 0;   // k - 2i
  std::size_t harmonic_dimension = 0;
  std::size_t generators_kept = 0;
};

struct DecompositionReport {
  DecompositionStatus status = DecompositionStatus::Fail;
  int k = 0;
  int cap = 0;
  int buffer = 0;
  std::string precondition;
  std::vector<DecompositionComponent> components;
  std::size_t generator_count = 0;
  std::size_t span_rank = 0;
  bool direct = false;
  /// Every piece monomial of degree <= cap - buffer is in the span.
  bool spans = false;
  /// Same test on the whole capped piece; reported, not asserted.
  bool spans_full_window = false;
  std::size_t window_dimension = 0;
  std::size_t piece_dimension = 0;
  std::vector<Monomial> missing;
};

/// Generators grouped by eta power; used directly by negative controls.
DecompositionReport assess_decomposition(const RepFamily& rep, int k, int cap, int buffer,
                                         const std::vector<std::vector<Polynomial>>& groups);
DecompositionReport verify_decomposition(const RepFamily& rep, int k, int cap, int buffer = 2);

struct CommutantCheck {
  BasisLabel label;
  Structural against = Structural::Eta;
  bool vanishes = false;
  std::string commutator;
};

struct CommutantReport {
  std::vector<CommutantCheck> checks;
  bool passed() const;
};

/// Commutators of the subalgebra images with eta and the Laplacian (and D in
/// the odd case). `labels` replaces the default subalgebra when given.
CommutantReport verify_commutant(const RepFamily& rep,
                                 const std::optional<std::vector<BasisLabel>>& labels = std::nullopt);

enum class IdentityName { RaisingLowering, EvenCasimirStep, OddCasimirStep, Sl2 };
std::string to_string(IdentityName name);
IdentityName parse_identity_name(const std::string& text);

struct IdentityParams {
  Parity parity = Parity::Even;
  int n = 1;
  int n1 = 1;
  int n2 = 1;
  int k = 0;
  int i = 1;
};

struct IdentityReport {
  IdentityName name = IdentityName::Sl2;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  /// sl2 only: [Laplacian, eta] = factor * D + shift.
  std::optional<Rational> factor;
  std::optional<Rational> shift;
};

/// RaisingLowering: B(1,n+1)^i applied to eta^i(x1^(2i-k)) against
///   i! (-1)^i prod_{r=1..i} (i+r-k) x1^(i-k), for k <= 0, i >= 1.
/// EvenCasimirStep / OddCasimirStep: the operator combination that turns
///   eta times a grading-dependent scalar into a module element, compared
///   symbolically with formal c.
/// Sl2: shape of [Laplacian, eta].
IdentityReport verify_identity(IdentityName name, const IdentityParams& params);

}  // namespace oscrep

#endif
