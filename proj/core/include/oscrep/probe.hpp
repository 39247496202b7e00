#ifndef OSCREP_PROBE_HPP
#define OSCREP_PROBE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oscrep/harmonic.hpp"

namespace oscrep {

/// All polynomials of total degree <= cap.
struct DegreeCap {
  int cap = 0;
};

/// Weight spaces within L-infinity distance `radius` of `center` (over the
/// mu entries and k); fill is judged on distance <= `inner`. A missing center
/// means the weight of the first seed's leading component.
struct WeightBox {
  std::optional<Weight> center;
  int radius = 0;
  int inner = 0;
};

using AmbientSpec = std::variant<DegreeCap, WeightBox>;
std::string describe(const AmbientSpec& ambient);

enum class ClosureStatus { Filled, NotFilled, Inconclusive };
std::string to_string(ClosureStatus status);

/// A vector of the accumulated space: either a weight component of a seed
/// (parent empty) or image(label) applied to the parent record's vector.
struct DerivationRecord {
  std::size_t seed = 0;
  std::optional<Weight> component;
  std::optional<std::size_t> parent;
  std::optional<BasisLabel> label;
  Polynomial vector;
};

/// Seed index, optional seed weight component, then the operator word in
/// application order.
struct DerivationTrace {
  std::size_t seed = 0;
  std::optional<Weight> component;
  std::vector<BasisLabel> word;
};

struct WindowRow {
  std::string window;  // "deg<=d" or a weight
  std::size_t found = 0;
  std::size_t ambient = 0;
  bool asserted = false;
};

struct CoefficientEntry {
  std::string factor;
  std::string parameter;  // e.g. "r=-1"
  Rational value;
  bool vanishes = false;
};

struct ClosureReport {
  ClosureStatus status = ClosureStatus::Inconclusive;
  std::string ambient;
  std::vector<WindowRow> table;
  std::vector<CoefficientEntry> coefficients;
  std::size_t iterations = 0;
  std::size_t rank = 0;
  std::size_t asserted_found = 0;
  std::size_t asserted_ambient = 0;
  std::string caveat;
  std::optional<Rational> c;
  std::vector<Polynomial> seeds;
  std::vector<DerivationRecord> records;
};

/// Rank fixpoint of the operator images applied to the seeds inside the
/// ambient window. Requires constant c and nonzero seeds; weight-box mode
/// requires the swapped family.
ClosureReport submodule_closure(const RepFamily& rep, const std::vector<Polynomial>& seeds,
                                const AmbientSpec& ambient);

DerivationTrace trace_of(const ClosureReport& report, std::size_t record);
/// Recomputes the vector named by a trace from the seeds.
Polynomial replay(const RepFamily& rep, const std::vector<Polynomial>& seeds, const DerivationTrace& trace);
/// Projection of p onto the monomials of weight w.
Polynomial weight_component(const RepFamily& rep, const Polynomial& p, const Weight& w);

/// Proof-step factors of the swapped-family argument evaluated for the
/// parameter window [k - spread, k + spread].
std::vector<CoefficientEntry> step_coefficients(const RepFamily& rep, int k, int spread);

std::vector<ClosureReport> excluded_parameter_scan(const RepFamily& rep, const std::vector<Rational>& c_values,
                                                   const std::vector<Polynomial>& seeds, const AmbientSpec& ambient);

enum class CertificateStatus { Pass, Fail, Inconclusive };
std::string to_string(CertificateStatus status);

struct CertificateReport {
  CertificateStatus status = CertificateStatus::Inconclusive;
  Parity parity = Parity::Even;
  int degree = 0;
  std::string hypothesis;  // the nondegeneracy quantity, by formula
  Rational hypothesis_value;
  std::string route;
  std::string combination;  // the assembled linear form
  std::size_t identities_checked = 0;
  std::size_t monomials_generated = 0;
  std::vector<std::string> failures;
  std::string note;
};

/// Replays the degree induction for the exponentially twisted even family.
CertificateReport certify_twisted_even(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       const Rational& c, int degree);
/// Same for the odd family; `a` is a0, a1..an.
CertificateReport certify_twisted_odd(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      const Rational& c, int degree);

}  // namespace oscrep

#endif
