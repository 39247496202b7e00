#include "oscrep/representation.hpp"

#include "oscrep/error.hpp"

namespace oscrep {

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::Conformal: return "conformal";
    case RepKind::Twisted: return "twisted";
    case RepKind::Swapped: return "swapped";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& text) {
  if (text == "conformal") return RepKind::Conformal;
  if (text == "twisted") return RepKind::Twisted;
  if (text == "swapped") return RepKind::Swapped;
  throw Error("bad family: '" + text + "'");
}

std::string to_string(CheckMode mode) { return mode == CheckMode::Symbolic ? "symbolic" : "applied"; }

CheckMode parse_check_mode(const std::string& text) {
  if (text == "symbolic") return CheckMode::Symbolic;
  if (text == "applied") return CheckMode::Applied;
  throw Error("bad mode: '" + text + "'");
}

RepFamily RepFamily::conformal(const LieAlgebraSpec& spec, const Scalar& c) {
  return RepFamily(RepKind::Conformal, spec, c);
}

RepFamily RepFamily::twisted(const LieAlgebraSpec& spec, const Scalar& c, std::vector<Rational> a,
                             std::vector<Rational> b) {
  const std::size_t want_a = static_cast<std::size_t>(spec.parity == Parity::Odd ? spec.n + 1 : spec.n);
  if (a.size() != want_a)
    throw Error("twist vector a needs " + std::to_string(want_a) + " entries, got " + std::to_string(a.size()));
  if (b.size() != static_cast<std::size_t>(spec.n))
    throw Error("twist vector b needs " + std::to_string(spec.n) + " entries, got " + std::to_string(b.size()));
  RepFamily rep(RepKind::Twisted, spec, c);
  rep.a_ = std::move(a);
  rep.b_ = std::move(b);
  return rep;
}

RepFamily RepFamily::swapped(const LieAlgebraSpec& spec, const Scalar& c, int n1, int n2) {
  validate_swap_indices(spec.n, n1, n2);
  RepFamily rep(RepKind::Swapped, spec, c);
  rep.n1_ = n1;
  rep.n2_ = n2;
  return rep;
}

Scalar RepFamily::c_tilde() const {
  if (kind_ != RepKind::Swapped) return c_;
  return c_ + Scalar(static_cast<long>(n2_ - n1_ - spec_.n));
}

TwistShift RepFamily::shift() const {
  TwistShift s;
  s.shifts.assign(roster().size(), Rational(0));
  if (kind_ != RepKind::Twisted) return s;
  const VariableRoster r = roster();
  const bool odd = r.has_x0();
  for (int i = odd ? 0 : 1; i <= spec_.n; ++i) s.shifts[r.x(i)] = a_[static_cast<std::size_t>(odd ? i : i - 1)];
  for (int j = 1; j <= spec_.n; ++j) s.shifts[r.y(j)] = b_[static_cast<std::size_t>(j - 1)];
  return s;
}

Variant RepFamily::variant() const {
  const bool odd = spec_.parity == Parity::Odd;
  if (kind_ == RepKind::Swapped) return odd ? Variant::SwappedOdd : Variant::SwappedEven;
  return odd ? Variant::ConformalOdd : Variant::ConformalEven;
}

RepFamily RepFamily::with_c(const Scalar& c) const {
  RepFamily copy = *this;
  copy.c_ = c;
  return copy;
}

std::string RepFamily::describe() const {
  std::string out = to_string(kind_) + " " + spec_.name() + " n=" + std::to_string(spec_.n) + " c=" + c_.to_string();
  if (kind_ == RepKind::Swapped) out += " (n1,n2)=(" + std::to_string(n1_) + "," + std::to_string(n2_) + ")";
  if (kind_ == RepKind::Twisted) {
    auto join = [](const std::vector<Rational>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + oscrep::to_string(v[i]);
      return s;
    };
    out += " a=(" + join(a_) + ") b=(" + join(b_) + ")";
  }
  return out;
}

namespace {

struct Builder {
  VariableRoster roster;
  int n;

  WeylOperator X(int i) const { return WeylOperator::variable(roster, roster.x(i)); }
  WeylOperator Y(int j) const { return WeylOperator::variable(roster, roster.y(j)); }
  WeylOperator DX(int i) const { return WeylOperator::partial(roster, roster.x(i)); }
  WeylOperator DY(int j) const { return WeylOperator::partial(roster, roster.y(j)); }
  WeylOperator S(const Scalar& s) const { return WeylOperator::scalar(roster, s); }
};

// Images of canonical labels (B, C with i < j) under the conformal family.
WeylOperator conformal_image(const RepFamily& rep, const BasisLabel& l) {
  const int n = rep.spec().n;
  const Builder b{rep.roster(), n};
  const Variant v = rep.variant();
  const WeylOperator D = structural_operator(Structural::D, v, n);
  const WeylOperator eta = structural_operator(Structural::Eta, v, n);
  const WeylOperator Dc = D + b.S(rep.c());
  const int top = n + 1;
  switch (l.family) {
    case Family::A:
      if (l.i <= n && l.j <= n) return b.X(l.i) * b.DX(l.j) - b.Y(l.j) * b.DY(l.i);
      if (l.i == top && l.j <= n) return b.DX(l.j);
      if (l.i == top && l.j == top) return -Dc;
      return eta * b.DY(l.i) - b.X(l.i) * Dc;  // A(i, n+1)
    case Family::B:
      if (l.j <= n) return b.X(l.i) * b.DY(l.j) - b.X(l.j) * b.DY(l.i);
      return -b.DY(l.i);  // B(i, n+1)
    case Family::C:
      if (l.j <= n) return b.Y(l.i) * b.DX(l.j) - b.Y(l.j) * b.DX(l.i);
      return -(b.Y(l.i) * Dc - eta * b.DX(l.i));  // C(i, n+1) = -C(n+1, i)
    case Family::K: {
      if (l.i <= n) return b.X(0) * b.DX(l.i) - b.Y(l.i) * b.DX(0);
      if (l.i == top) return eta * b.DX(0) - b.X(0) * Dc;
      if (l.i < 2 * n + 2) {
        const int r = l.i - top;
        return b.X(0) * b.DY(r) - b.X(r) * b.DX(0);
      }
      return -b.DX(0);
    }
  }
  throw Error("internal: unhandled label");
}

// Images of canonical labels under the swapped family, entered case by case.
WeylOperator swapped_image(const RepFamily& rep, const BasisLabel& l) {
  const int n = rep.spec().n;
  const int n1 = rep.n1(), n2 = rep.n2();
  const Builder b{rep.roster(), n};
  const Variant v = rep.variant();
  const WeylOperator D = structural_operator(Structural::D, v, n, n1, n2);
  const WeylOperator eta = structural_operator(Structural::Eta, v, n, n1, n2);
  const WeylOperator Dc = D + b.S(rep.c_tilde());
  const WeylOperator one = b.S(Scalar(1));
  const int top = n + 1;

  auto delta = [](int i, int j) { return i == j ? Scalar(1) : Scalar(0); };
  // image of x_i D_{x_j}
  auto ex = [&](int i, int j) -> WeylOperator {
    if (i <= n1 && j <= n1) return -(b.X(j) * b.DX(i)) - b.S(delta(i, j));
    if (i <= n1) return b.DX(i) * b.DX(j);
    if (j <= n1) return -(b.X(i) * b.X(j));
    return b.X(i) * b.DX(j);
  };
  // image of y_i D_{y_j}
  auto ey = [&](int i, int j) -> WeylOperator {
    if (i <= n2 && j <= n2) return b.Y(i) * b.DY(j);
    if (i <= n2) return -(b.Y(i) * b.Y(j));
    if (j <= n2) return b.DY(i) * b.DY(j);
    return -(b.Y(j) * b.DY(i)) - b.S(delta(i, j));
  };
  // image of E_{i, n+1+j}, i.e. x_i D_{y_j}
  auto upper = [&](int i, int j) -> WeylOperator {
    if (i <= n1 && j <= n2) return b.DX(i) * b.DY(j);
    if (i <= n1) return -(b.Y(j) * b.DX(i));
    if (j <= n2) return b.X(i) * b.DY(j);
    return -(b.X(i) * b.Y(j));
  };
  // image of E_{n+1+i, j}, i.e. y_i D_{x_j}
  auto lower = [&](int i, int j) -> WeylOperator {
    if (j <= n1 && i <= n2) return -(b.X(j) * b.Y(i));
    if (j <= n1) return -(b.X(j) * b.DY(i));
    if (i <= n2) return b.Y(i) * b.DX(j);
    return b.DX(j) * b.DY(i);
  };
  auto c_n1_i = [&](int i) -> WeylOperator {  // C(n+1, i)
    if (i <= n1) return eta * b.X(i) + b.Y(i) * Dc;
    if (i <= n2) return -(eta * b.DX(i)) + b.Y(i) * Dc;
    return -(eta * b.DX(i)) + (Dc - one) * b.DY(i);
  };

  switch (l.family) {
    case Family::A:
      if (l.i <= n && l.j <= n) return ex(l.i, l.j) - ey(l.j, l.i);
      if (l.i == top && l.j <= n) return l.j <= n1 ? -b.X(l.j) : b.DX(l.j);
      if (l.i == top && l.j == top) return -Dc;
      // A(i, n+1)
      if (l.i <= n1) return eta * b.DY(l.i) - (Dc - one) * b.DX(l.i);
      if (l.i <= n2) return eta * b.DY(l.i) - b.X(l.i) * Dc;
      return -(eta * b.Y(l.i)) - b.X(l.i) * Dc;
    case Family::B:
      if (l.j <= n) return upper(l.i, l.j) - upper(l.j, l.i);
      return l.i <= n2 ? -b.DY(l.i) : b.Y(l.i);  // B(i, n+1)
    case Family::C:
      if (l.j <= n) return lower(l.i, l.j) - lower(l.j, l.i);
      return -c_n1_i(l.i);  // C(i, n+1) = -C(n+1, i)
    case Family::K: {
      if (l.i <= n) {
        const int i = l.i;
        if (i <= n1) return -(b.X(0) * b.X(i)) - b.Y(i) * b.DX(0);
        if (i <= n2) return b.X(0) * b.DX(i) - b.Y(i) * b.DX(0);
        return b.X(0) * b.DX(i) - b.DX(0) * b.DY(i);
      }
      if (l.i == top) return eta * b.DX(0) - b.X(0) * Dc;
      if (l.i < 2 * n + 2) {
        const int i = l.i - top;
        if (i <= n1) return b.X(0) * b.DY(i) - b.DX(0) * b.DX(i);
        if (i <= n2) return b.X(0) * b.DY(i) - b.X(i) * b.DX(0);
        return -(b.X(0) * b.Y(i)) - b.X(i) * b.DX(0);
      }
      return -b.DX(0);
    }
  }
  throw Error("internal: unhandled label");
}

}  // namespace

WeylOperator image(const RepFamily& rep, const BasisLabel& label) {
  const auto [sign, canon] = canonical_label(rep.spec(), label);
  WeylOperator op(rep.roster());
  switch (rep.kind()) {
    case RepKind::Conformal: op = conformal_image(rep, canon); break;
    case RepKind::Twisted: op = twist(conformal_image(rep, canon), rep.shift()); break;
    case RepKind::Swapped: op = swapped_image(rep, canon); break;
  }
  return sign < 0 ? -op : op;
}

WeylOperator image(const RepFamily& rep, const Expansion& element) {
  WeylOperator out(rep.roster());
  for (const auto& [label, q] : element) out += image(rep, label) * Scalar(q);
  return out;
}

ImageTable image_table(const RepFamily& rep) {
  ImageTable table;
  for (const auto& label : basis(rep.spec())) table.emplace(label, image(rep, label));
  return table;
}

WeylOperator swap_transform(const WeylOperator& op, int n1, int n2) {
  const VariableRoster& r = op.roster();
  validate_swap_indices(r.n(), n1, n2);
  const int n = r.n();
  std::vector<WeylOperator> var_image, der_image;
  for (std::size_t v = 0; v < r.size(); ++v) {
    var_image.push_back(WeylOperator::variable(r, v));
    der_image.push_back(WeylOperator::partial(r, v));
  }
  for (int i = 1; i <= n1; ++i) {
    var_image[r.x(i)] = WeylOperator::partial(r, r.x(i));
    der_image[r.x(i)] = -WeylOperator::variable(r, r.x(i));
  }
  for (int s = n2 + 1; s <= n; ++s) {
    var_image[r.y(s)] = WeylOperator::partial(r, r.y(s));
    der_image[r.y(s)] = -WeylOperator::variable(r, r.y(s));
  }
  WeylOperator out(r);
  for (const auto& [term, coeff] : op.terms()) {
    WeylOperator acc = WeylOperator::scalar(r, coeff);
    for (std::size_t v = 0; v < r.size(); ++v)
      for (std::uint32_t k = 0; k < term.mult[v]; ++k) acc = acc * var_image[v];
    for (std::size_t v = 0; v < r.size(); ++v)
      for (std::uint32_t k = 0; k < term.deriv[v]; ++k) acc = acc * der_image[v];
    out += acc;
  }
  return out;
}

HomomorphismReport verify_homomorphism(const LieAlgebraSpec& spec, const ImageTable& table, CheckMode mode,
                                       int degree_bound) {
  HomomorphismReport report;
  report.mode = mode;
  report.degree_bound = mode == CheckMode::Applied ? degree_bound : 0;
  const auto labels = basis(spec);
  auto lookup = [&](const BasisLabel& l) -> const WeylOperator& {
    auto it = table.find(l);
    if (it == table.end()) throw Error("image table lacks " + to_string(l));
    return it->second;
  };
  const VariableRoster roster = spec.roster();
  auto combination = [&](const Expansion& e) {
    WeylOperator out(roster);
    for (const auto& [label, q] : e) out += lookup(label) * Scalar(q);
    return out;
  };

  std::vector<Monomial> probes;
  if (mode == CheckMode::Applied) probes = monomials_up_to(roster, static_cast<std::uint32_t>(degree_bound));
  report.monomials_checked = probes.size();

  for (std::size_t p = 0; p < labels.size(); ++p) {
    for (std::size_t q = p + 1; q < labels.size(); ++q) {
      const auto& x = labels[p];
      const auto& y = labels[q];
      ++report.pairs_checked;
      const WeylOperator lhs = combination(expand(spec, bracket(basis_matrix(spec, x), basis_matrix(spec, y))));
      const WeylOperator& ix = lookup(x);
      const WeylOperator& iy = lookup(y);
      if (mode == CheckMode::Symbolic) {
        const WeylOperator diff = lhs - commutator(ix, iy);
        if (!diff.is_zero()) report.failures.push_back({x, y, diff.to_string()});
        continue;
      }
      for (const auto& m : probes) {
        const Polynomial u = Polynomial::monomial(roster, m);
        const Polynomial diff = apply(lhs, u) - (apply(ix, apply(iy, u)) - apply(iy, apply(ix, u)));
        if (!diff.is_zero()) {
          report.failures.push_back({x, y, "on " + to_string(m, roster) + ": " + diff.to_string()});
          break;
        }
      }
    }
  }
  return report;
}

HomomorphismReport verify_homomorphism(const RepFamily& rep, CheckMode mode, int degree_bound) {
  return verify_homomorphism(rep.spec(), image_table(rep), mode, degree_bound);
}

}  // namespace oscrep
