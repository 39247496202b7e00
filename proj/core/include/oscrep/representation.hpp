#ifndef OSCREP_REPRESENTATION_HPP
#define OSCREP_REPRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "oscrep/orth_lie.hpp"
#include "oscrep/structural.hpp"
#include "oscrep/weyl_operator.hpp"

namespace oscrep {

enum class RepKind { Conformal, Twisted, Swapped };

std::string to_string(RepKind kind);
RepKind parse_rep_kind(const std::string& text);

/// One of the three operator representation families of o(2n+2) / o(2n+3).
///
/// conformal: the inhomogeneous first-order representation with parameter c.
/// twisted:   the conformal operators acting on f * exp(a.x + b.y), written
///            as operators on f (each D_v replaced by D_v + shift_v).
/// swapped:   multiplication and differentiation exchanged on x_1..x_n1 and
///            y_{n2+1}..y_n; the constant term uses c~ = c + n2 - n1 - n.
class RepFamily {
 public:
  static RepFamily conformal(const LieAlgebraSpec& spec, const Scalar& c);
  /// `a` has n entries (even) or n+1 entries a0, a1..an (odd); `b` has n entries.
  static RepFamily twisted(const LieAlgebraSpec& spec, const Scalar& c, std::vector<Rational> a,
                           std::vector<Rational> b);
  static RepFamily swapped(const LieAlgebraSpec& spec, const Scalar& c, int n1, int n2);

  RepKind kind() const { return kind_; }
  const LieAlgebraSpec& spec() const { return spec_; }
  VariableRoster roster() const { return spec_.roster(); }
  const Scalar& c() const { return c_; }
  /// c + n2 - n1 - n for the swapped family; c otherwise.
  Scalar c_tilde() const;
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  /// a0 (odd only), a1..an in that order.
  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  TwistShift shift() const;
  /// Structural-operator variant matching this family (twisted maps to conformal).
  Variant variant() const;

  RepFamily with_c(const Scalar& c) const;
  std::string describe() const;

 private:
  RepFamily(RepKind kind, LieAlgebraSpec spec, Scalar c) : kind_(kind), spec_(spec), c_(std::move(c)) {}

  RepKind kind_;
  LieAlgebraSpec spec_;
  Scalar c_;
  int n1_ = 0;
  int n2_ = 0;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Operator image of a basis label. B/C labels with i > j are accepted and
/// carry a sign; K labels require odd parity.
WeylOperator image(const RepFamily& rep, const BasisLabel& label);
/// Image of a linear combination of basis labels.
WeylOperator image(const RepFamily& rep, const Expansion& element);

using ImageTable = std::map<BasisLabel, WeylOperator>;
ImageTable image_table(const RepFamily& rep);

/// Independent route to the swapped family: applies the substitution
/// D_x -> -x, x -> D_x (x_1..x_n1) and D_y -> -y, y -> D_y (y_{n2+1}..y_n)
/// to every term of a normal-ordered operator and renormalizes.
WeylOperator swap_transform(const WeylOperator& op, int n1, int n2);

enum class CheckMode { Symbolic, Applied };

std::string to_string(CheckMode mode);
CheckMode parse_check_mode(const std::string& text);

struct PairFailure {
  BasisLabel x;
  BasisLabel y;
  /// Symbolic mode: image([X,Y]) - [image X, image Y]. Applied mode: the
  /// first monomial where the two sides differ and the difference there.
  std::string detail;
};

struct HomomorphismReport {
  CheckMode mode = CheckMode::Symbolic;
  int degree_bound = 0;
  std::size_t pairs_checked = 0;
  std::size_t monomials_checked = 0;
  std::vector<PairFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks image([X,Y]) == [image X, image Y] for every unordered basis pair,
/// either as normal-ordered operators or on all monomials of degree <= bound.
HomomorphismReport verify_homomorphism(const LieAlgebraSpec& spec, const ImageTable& table, CheckMode mode,
                                       int degree_bound = 3);
HomomorphismReport verify_homomorphism(const RepFamily& rep, CheckMode mode, int degree_bound = 3);

}  // namespace oscrep

#endif
