#include "oscrep/harmonic.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "oscrep/error.hpp"

namespace oscrep {

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.mu.size(); ++i) out += (i ? "," : "") + std::to_string(w.mu[i]);
  return out + ";" + std::to_string(w.k) + ")";
}

int grading_of(const RepFamily& rep, const Monomial& m) {
  const VariableRoster r = rep.roster();
  const int n = r.n();
  const bool swapped = rep.kind() == RepKind::Swapped;
  const int s1 = swapped ? rep.n1() : 0;
  const int s2 = swapped ? rep.n2() : n;
  long k = r.has_x0() ? static_cast<long>(m[r.x(0)]) : 0;
  for (int i = 1; i <= n; ++i) {
    const long a = m[r.x(i)], b = m[r.y(i)];
    k += i <= s1 ? -a : a;
    k += i <= s2 ? b : -b;
  }
  return static_cast<int>(k);
}

namespace {

void require_weight_family(const RepFamily& rep) {
  if (rep.kind() != RepKind::Swapped) throw Error("not a weight family: " + to_string(rep.kind()));
}

}  // namespace

Weight weight_of(const RepFamily& rep, const Monomial& m) {
  require_weight_family(rep);
  const VariableRoster r = rep.roster();
  const int n = r.n();
  Weight w;
  w.k = grading_of(rep, m);
  for (int i = 1; i <= n; ++i) {
    const int a = static_cast<int>(m[r.x(i)]), b = static_cast<int>(m[r.y(i)]);
    if (i <= rep.n1()) w.mu.push_back(-a - b - 1);
    else if (i <= rep.n2()) w.mu.push_back(a - b);
    else w.mu.push_back(a + b + 1);
  }
  return w;
}

Weight shifted(const Weight& w, const std::vector<int>& root) {
  if (root.size() != w.mu.size() + 1) throw Error("root length does not match weight");
  Weight out = w;
  for (std::size_t i = 0; i < w.mu.size(); ++i) out.mu[i] += root[i];
  // A(n+1,n+1) acts by -(k + c~), so its eigenvalue shift moves k the other way.
  out.k -= root.back();
  return out;
}

std::vector<Monomial> weight_space_basis(const RepFamily& rep, const Weight& w) {
  require_weight_family(rep);
  const VariableRoster r = rep.roster();
  const int n = r.n();
  if (w.mu.size() != static_cast<std::size_t>(n)) throw Error("weight needs " + std::to_string(n) + " entries");
  const int n1 = rep.n1(), n2 = rep.n2();

  // Outer coordinates (i <= n1 or i > n2) have fixed alpha+beta, so they
  // contribute a bounded amount to k; the middle block and x0 absorb the rest.
  std::vector<int> fixed_sum(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    const int mu = w.mu[static_cast<std::size_t>(i - 1)];
    if (i <= n1) fixed_sum[i] = -mu - 1;
    else if (i > n2) fixed_sum[i] = mu - 1;
    else fixed_sum[i] = mu;  // alpha - beta
    if ((i <= n1 || i > n2) && fixed_sum[i] < 0) return {};
  }

  constexpr std::size_t guard = std::size_t{1} << 22;
  std::vector<Monomial> out;
  Monomial cur(r.size());

  std::function<void(int, long)> middle = [&](int i, long budget) {
    if (out.size() > guard) throw Error("enumeration unbounded");
    if (i > n2) {
      if (r.has_x0()) {
        if (budget < 0) return;
        cur[r.x(0)] = static_cast<std::uint32_t>(budget);
        out.push_back(cur);
        cur[r.x(0)] = 0;
      } else if (budget == 0) {
        out.push_back(cur);
      }
      return;
    }
    const int d = fixed_sum[i];
    // alpha + beta = 2 beta + d with beta >= max(0, -d)
    for (long beta = std::max(0, -d);; ++beta) {
      const long used = 2 * beta + d;
      if (used > budget) break;
      cur[r.x(i)] = static_cast<std::uint32_t>(beta + d);
      cur[r.y(i)] = static_cast<std::uint32_t>(beta);
      middle(i + 1, budget - used);
    }
    cur[r.x(i)] = cur[r.y(i)] = 0;
  };

  std::function<void(int, long)> outer = [&](int i, long contribution) {
    if (i > n) {
      middle(n1 + 1, static_cast<long>(w.k) - contribution);
      return;
    }
    if (i > n1 && i <= n2) {
      outer(i + 1, contribution);
      return;
    }
    const int s = fixed_sum[i];
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      cur[r.x(i)] = static_cast<std::uint32_t>(a);
      cur[r.y(i)] = static_cast<std::uint32_t>(b);
      outer(i + 1, contribution + (i <= n1 ? b - a : a - b));
    }
    cur[r.x(i)] = cur[r.y(i)] = 0;
  };

  outer(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GradedPiece graded_piece(const RepFamily& rep, int k, int cap) {
  GradedPiece piece{k, cap, {}};
  if (cap < 0) return piece;
  for (auto& m : monomials_up_to(rep.roster(), static_cast<std::uint32_t>(cap)))
    if (grading_of(rep, m) == k) piece.basis.push_back(std::move(m));
  return piece;
}

namespace {

std::optional<int> swap_n1(const RepFamily& rep) {
  return rep.kind() == RepKind::Swapped ? std::optional<int>(rep.n1()) : std::nullopt;
}
std::optional<int> swap_n2(const RepFamily& rep) {
  return rep.kind() == RepKind::Swapped ? std::optional<int>(rep.n2()) : std::nullopt;
}

WeylOperator structural(const RepFamily& rep, Structural which) {
  return structural_operator(which, rep.variant(), rep.spec().n, swap_n1(rep), swap_n2(rep));
}

std::vector<Monomial> sorted_support(const std::vector<Polynomial>& polys) {
  std::set<Monomial> all;
  for (const auto& p : polys)
    for (const auto& [m, s] : p.terms()) all.insert(m);
  return {all.begin(), all.end()};
}

Polynomial power_apply(const WeylOperator& op, Polynomial p, int times) {
  for (int t = 0; t < times; ++t) p = apply(op, p);
  return p;
}

}  // namespace

LinearSubspace harmonic_basis(const RepFamily& rep, int k, int cap) {
  const VariableRoster roster = rep.roster();
  const WeylOperator lap = structural(rep, Structural::Laplacian);
  const GradedPiece piece = graded_piece(rep, k, cap);
  std::vector<MapColumn> columns;
  std::vector<Polynomial> images;
  for (const auto& m : piece.basis) {
    Polynomial u = Polynomial::monomial(roster, m);
    Polynomial img = apply(lap, u);
    images.push_back(img);
    columns.push_back({std::move(u), std::move(img)});
  }
  return kernel(roster, columns, sorted_support(images));
}

std::string to_string(DecompositionStatus status) {
  switch (status) {
    case DecompositionStatus::Pass: return "pass";
    case DecompositionStatus::Fail: return "fail";
    case DecompositionStatus::PreconditionUnmet: return "precondition unmet";
  }
  return "?";
}

DecompositionReport assess_decomposition(const RepFamily& rep, int k, int cap, int buffer,
                                         const std::vector<std::vector<Polynomial>>& groups) {
  const VariableRoster roster = rep.roster();
  DecompositionReport report;
  report.k = k;
  report.cap = cap;
  report.buffer = buffer;

  std::vector<Polynomial> generators;
  for (const auto& g : groups) generators.insert(generators.end(), g.begin(), g.end());
  report.generator_count = generators.size();

  const GradedPiece piece = graded_piece(rep, k, cap);
  report.piece_dimension = piece.basis.size();
  std::vector<Polynomial> everything = generators;
  for (const auto& m : piece.basis) everything.push_back(Polynomial::monomial(roster, m));
  const auto index = sorted_support(everything);

  const LinearSubspace span = rref(roster, generators, index);
  report.span_rank = span.rank();
  report.direct = span.rank() == generators.size();

  report.spans = true;
  report.spans_full_window = true;
  for (const auto& m : piece.basis) {
    const bool in_window = static_cast<int>(m.degree()) <= cap - buffer;
    if (in_window) ++report.window_dimension;
    if (span.contains(Polynomial::monomial(roster, m))) continue;
    report.spans_full_window = false;
    if (in_window) {
      report.spans = false;
      report.missing.push_back(m);
    }
  }
  report.status = report.direct && report.spans ? DecompositionStatus::Pass : DecompositionStatus::Fail;
  return report;
}

DecompositionReport verify_decomposition(const RepFamily& rep, int k, int cap, int buffer) {
  if (rep.kind() != RepKind::Swapped) throw Error("not a weight family: " + to_string(rep.kind()));
  if (cap < 0 || buffer < 0) throw Error("cap and buffer must be non-negative");

  if (rep.spec().parity == Parity::Even) {
    const int bound = rep.n1() - rep.n2() + 1 - (rep.n1() == rep.n2() ? 1 : 0);
    if (k > bound) {
      DecompositionReport report;
      report.status = DecompositionStatus::PreconditionUnmet;
      report.k = k;
      report.cap = cap;
      report.buffer = buffer;
      report.precondition = "k <= " + std::to_string(bound) + " required, got k = " + std::to_string(k);
      return report;
    }
  }

  const WeylOperator eta = structural(rep, Structural::Eta);
  std::vector<std::vector<Polynomial>> groups;
  std::vector<DecompositionComponent> components;
  for (int i = 0; i <= cap; ++i) {
    const LinearSubspace h = harmonic_basis(rep, k - 2 * i, cap);
    DecompositionComponent comp{i, k - 2 * i, h.rank(), 0};
    std::vector<Polynomial> group;
    for (const auto& v : h.basis()) {
      Polynomial g = power_apply(eta, v, i);
      if (!g.is_zero() && g.degree() <= cap + buffer) group.push_back(std::move(g));
    }
    comp.generators_kept = group.size();
    components.push_back(comp);
    groups.push_back(std::move(group));
  }
  DecompositionReport report = assess_decomposition(rep, k, cap, buffer, groups);
  report.components = std::move(components);
  return report;
}

bool CommutantReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CommutantCheck& c) { return c.vanishes; });
}

CommutantReport verify_commutant(const RepFamily& rep, const std::optional<std::vector<BasisLabel>>& labels) {
  if (rep.kind() != RepKind::Swapped) throw Error("not a weight family: " + to_string(rep.kind()));
  const bool odd = rep.spec().parity == Parity::Odd;
  const std::vector<BasisLabel> xs = labels ? *labels : (odd ? subalgebra_g(rep.spec()) : subalgebra_k(rep.spec()));
  std::vector<Structural> against{Structural::Eta, Structural::Laplacian};
  if (odd) against.push_back(Structural::D);

  CommutantReport report;
  for (const auto& label : xs) {
    const WeylOperator xi = image(rep, label);
    for (auto which : against) {
      const WeylOperator comm = commutator(xi, structural(rep, which));
      report.checks.push_back({label, which, comm.is_zero(), comm.is_zero() ? "0" : comm.to_string()});
    }
  }
  return report;
}

std::string to_string(IdentityName name) {
  switch (name) {
    case IdentityName::RaisingLowering: return "eq2.34";
    case IdentityName::EvenCasimirStep: return "eq2.51";
    case IdentityName::OddCasimirStep: return "eq3.36";
    case IdentityName::Sl2: return "sl2";
  }
  return "?";
}

IdentityName parse_identity_name(const std::string& text) {
  for (auto name : {IdentityName::RaisingLowering, IdentityName::EvenCasimirStep, IdentityName::OddCasimirStep,
                    IdentityName::Sl2})
    if (to_string(name) == text) return name;
  throw Error("invalid params: unknown identity '" + text + "'");
}

namespace {

Rational factorial(int m) {
  Rational f = 1;
  for (int t = 2; t <= m; ++t) f *= t;
  return f;
}

IdentityReport raising_lowering(const IdentityParams& p) {
  if (p.k > 0) throw Error("invalid params: k must be <= 0, got " + std::to_string(p.k));
  if (p.i < 1) throw Error("invalid params: i must be >= 1, got " + std::to_string(p.i));
  const auto rep = RepFamily::swapped(LieAlgebraSpec(p.parity, p.n), Scalar::parameter(), p.n1, p.n2);
  const VariableRoster r = rep.roster();
  const WeylOperator eta = structural(rep, Structural::Eta);
  const WeylOperator lower = image(rep, BasisLabel{Family::B, 1, p.n + 1});

  Monomial start(r.size());
  start[r.x(1)] = static_cast<std::uint32_t>(-p.k + 2 * p.i);
  const Polynomial raised = power_apply(eta, Polynomial::monomial(r, start), p.i);
  const Polynomial lhs = power_apply(lower, raised, p.i);

  Rational coeff = factorial(p.i) * (p.i % 2 ? -1 : 1);
  for (int t = 1; t <= p.i; ++t) coeff *= (-p.k + p.i + t);
  Monomial end(r.size());
  end[r.x(1)] = static_cast<std::uint32_t>(-p.k + p.i);
  const Polynomial rhs = Polynomial::monomial(r, end, Scalar(coeff));

  IdentityReport report;
  report.name = IdentityName::RaisingLowering;
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  report.passed = lhs == rhs;
  return report;
}

IdentityReport casimir_step(IdentityName name, const IdentityParams& p) {
  const bool odd = name == IdentityName::OddCasimirStep;
  const auto rep =
      RepFamily::swapped(LieAlgebraSpec(odd ? Parity::Odd : Parity::Even, p.n), Scalar::parameter(), p.n1, p.n2);
  const VariableRoster r = rep.roster();
  const int n = p.n;
  auto X = [&](int i) { return WeylOperator::variable(r, r.x(i)); };
  auto Y = [&](int j) { return WeylOperator::variable(r, r.y(j)); };
  auto DX = [&](int i) { return WeylOperator::partial(r, r.x(i)); };
  auto DY = [&](int j) { return WeylOperator::partial(r, r.y(j)); };

  WeylOperator lhs(r);
  for (int i = 1; i <= n; ++i) {
    const WeylOperator a = image(rep, BasisLabel{Family::A, i, n + 1});
    lhs += a * (i <= p.n2 ? Y(i) : DY(i));
  }
  for (int s = 1; s <= n; ++s) {
    const WeylOperator cc = image(rep, BasisLabel{Family::C, n + 1, s});
    lhs -= cc * (s <= p.n1 ? DX(s) : X(s));
  }
  // The grading-raising K image enters with the sign that makes it
  // contribute the x0 part of eta(D + c~ + 1).
  if (odd) lhs += image(rep, BasisLabel{Family::K, n + 1}) * X(0);

  const WeylOperator eta = structural(rep, Structural::Eta);
  const WeylOperator D = structural(rep, Structural::D);
  const Scalar constant =
      Scalar(static_cast<long>((odd ? 1 : 0) + p.n2 + n - p.n1)) - Scalar(2) * (rep.c_tilde() + Scalar(1));
  const WeylOperator rhs = eta * (WeylOperator::scalar(r, constant) - D);

  IdentityReport report;
  report.name = name;
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  report.passed = lhs == rhs;
  return report;
}

IdentityReport sl2_shape(const IdentityParams& p) {
  const auto rep = RepFamily::swapped(LieAlgebraSpec(p.parity, p.n), Scalar::parameter(), p.n1, p.n2);
  const WeylOperator comm = commutator(structural(rep, Structural::Laplacian), structural(rep, Structural::Eta));
  const WeylOperator D = structural(rep, Structural::D);

  IdentityReport report;
  report.name = IdentityName::Sl2;
  report.lhs = comm.to_string();
  const auto& [term, lead] = *D.terms().begin();
  const Scalar ratio_num = comm.terms().count(term) ? comm.terms().at(term) : Scalar(0);
  if (!ratio_num.is_constant()) return report;
  const Rational factor = ratio_num.constant() / lead.constant();
  const auto rest = (comm - D * Scalar(factor)).as_scalar();
  if (!rest || !rest->is_constant() || factor == 0) return report;
  report.factor = factor;
  report.shift = rest->constant();
  report.rhs = (D * Scalar(factor) + WeylOperator::scalar(rep.roster(), *rest)).to_string();
  report.passed = true;
  return report;
}

}  // namespace

IdentityReport verify_identity(IdentityName name, const IdentityParams& params) {
  if (params.n < 1) throw Error("invalid params: n must be >= 1");
  validate_swap_indices(params.n, params.n1, params.n2);
  switch (name) {
    case IdentityName::RaisingLowering: return raising_lowering(params);
    case IdentityName::EvenCasimirStep:
    case IdentityName::OddCasimirStep: return casimir_step(name, params);
    case IdentityName::Sl2: return sl2_shape(params);
  }
  throw Error("invalid params: unknown identity");
}

}  // namespace oscrep
