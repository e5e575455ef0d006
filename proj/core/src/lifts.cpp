#include "algkit/lifts.hpp"

#include <sstream>

#include "exterior_engine.hpp"

namespace algkit {

namespace {

void require_skew(const Algebroid& A, const char* op) {
  if (!A.skew())
    throw std::invalid_argument(std::string(op) + " requires a skew (pre-Lie) structure");
}

// Per-monomial degree in the fiber coordinates (fiber and dual-fiber kinds).
int fiber_degree(const VarSpace& space, const Monomial& mono) {
  int d = 0;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i] > 0 && space.variable_at(static_cast<int>(i)).kind != VarKind::base)
      d += static_cast<int>(mono[i]);
  return d;
}

Polynomial demote_to_base(const Polynomial& p, const VarSpace& base) {
  return p.substitute({}, base);
}

std::string direction_name(const TotalSpace& S, int offset1) {
  const VarSpace vars = S.vars();
  return "d" + vars.name(vars.variable_at(offset1 - 1));
}

}  // namespace

TotalSpace total_space(const Algebroid& A, Side side) {
  return TotalSpace{side, A.base_dim(), A.rank(), A.base_space().base_names()};
}

SpaceMultivector::SpaceMultivector(TotalSpace space, int degree)
    : space_(std::move(space)), degree_(degree) {
  if (degree_ < 0) throw std::invalid_argument("negative degree");
}

void SpaceMultivector::add_term(IndexTuple directions, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(directions.size()) != degree_)
    throw std::invalid_argument("tuple length does not match degree");
  for (int d : directions)
    if (d < 1 || d > space_.dim()) throw std::invalid_argument("direction out of range");
  if (coeff.space() != space_.vars())
    throw std::invalid_argument("coefficient not over the total space");
  const int sign = normalize_tuple(directions);
  if (sign == 0) return;
  const Polynomial value = sign > 0 ? coeff : -coeff;
  auto [it, inserted] = comps_.emplace(std::move(directions), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Polynomial SpaceMultivector::component(IndexTuple directions) const {
  return detail::table_component(comps_, std::move(directions), space_.vars());
}

SpaceMultivector SpaceMultivector::operator+(const SpaceMultivector& o) const {
  if (space_ != o.space_ || degree_ != o.degree_)
    throw std::invalid_argument("space/degree mismatch");
  SpaceMultivector r = *this;
  for (const auto& [t, p] : o.comps_) r.add_term(t, p);
  return r;
}

SpaceMultivector SpaceMultivector::operator-(const SpaceMultivector& o) const {
  return *this + (-o);
}

SpaceMultivector SpaceMultivector::operator-() const {
  SpaceMultivector r(space_, degree_);
  for (const auto& [t, p] : comps_) r.comps_.emplace(t, -p);
  return r;
}

SpaceMultivector SpaceMultivector::scaled(const Polynomial& f) const {
  SpaceMultivector r(space_, degree_);
  for (const auto& [t, p] : comps_) r.add_term(t, f * p);
  return r;
}

SpaceMultivector SpaceMultivector::scaled(const Rational& c) const {
  return scaled(Polynomial::constant(space_.vars(), c));
}

std::string SpaceMultivector::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [tuple, p] : comps_) {
    std::string dirs;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i > 0) dirs += "^";
      dirs += direction_name(space_, tuple[i]);
    }
    std::string coeff = p.to_string();
    std::string body;
    if (tuple.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = dirs;
    } else if (coeff == "-1") {
      body = "-" + dirs;
    } else if (p.terms().size() == 1) {
      body = coeff + "*" + dirs;
    } else {
      body = "(" + coeff + ")*" + dirs;
    }
    if (first) {
      out << body;
    } else if (!body.empty() && body[0] == '-') {
      out << " - " << body.substr(1);
    } else {
      out << " + " << body;
    }
    first = false;
  }
  return out.str();
}

SpaceMultivector wedge(const SpaceMultivector& u, const SpaceMultivector& v) {
  if (u.space() != v.space()) throw std::invalid_argument("wedge across different spaces");
  SpaceMultivector r(u.space(), u.degree() + v.degree());
  if (u.degree() + v.degree() > u.space().dim()) return r;
  for (const auto& [tu, pu] : u.components())
    for (const auto& [tv, pv] : v.components()) {
      IndexTuple merged = tu;
      merged.insert(merged.end(), tv.begin(), tv.end());
      r.add_term(std::move(merged), pu * pv);
    }
  return r;
}

SpaceTensor2::SpaceTensor2(TotalSpace space) : space_(std::move(space)) {
  entries_.assign(static_cast<std::size_t>(space_.dim()) * space_.dim(),
                  Polynomial(space_.vars()));
}

const Polynomial& SpaceTensor2::at(int i, int j) const {
  if (i < 1 || j < 1 || i > space_.dim() || j > space_.dim())
    throw std::out_of_range("tensor component index");
  return entries_[(i - 1) * space_.dim() + (j - 1)];
}

void SpaceTensor2::set(int i, int j, Polynomial value) {
  if (i < 1 || j < 1 || i > space_.dim() || j > space_.dim())
    throw std::out_of_range("tensor component index");
  if (value.space() != space_.vars())
    throw std::invalid_argument("component not over the total space");
  entries_[(i - 1) * space_.dim() + (j - 1)] = std::move(value);
}

std::string SpaceTensor2::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= space_.dim(); ++i)
    for (int j = 1; j <= space_.dim(); ++j) {
      if (at(i, j).is_zero()) continue;
      if (!first) out << " + ";
      out << "(" << at(i, j).to_string() << ")*" << direction_name(space_, i) << "(x)"
          << direction_name(space_, j);
      first = false;
    }
  if (first) return "0";
  return out.str();
}

Polynomial iota_dual(const Algebroid& A, const Section& X) {
  const VarSpace vars = total_space(A, Side::E_dual).vars();
  Polynomial acc(vars);
  for (int i = 1; i <= A.rank(); ++i)
    acc += X[i].promoted_to(vars) * Polynomial::variable(vars, dual_var(i));
  return acc;
}

Polynomial iota(const Algebroid& A, const FiberForm& mu) {
  if (mu.degree() != 1) throw std::invalid_argument("iota needs a degree-1 form");
  const VarSpace vars = total_space(A, Side::E).vars();
  Polynomial acc(vars);
  for (const auto& [tuple, p] : mu.components())
    acc += p.promoted_to(vars) * Polynomial::variable(vars, fiber_var(tuple[0]));
  return acc;
}

Polynomial base_lift(const Polynomial& f, const TotalSpace& S) {
  return f.promoted_to(S.vars());
}

SpaceTensor2 to_linear_tensor(const Algebroid& A) {
  const Side side = A.carrier() == Carrier::on_E ? Side::E_dual : Side::E;
  const TotalSpace S = total_space(A, side);
  const VarSpace vars = S.vars();
  const int m = A.base_dim();
  SpaceTensor2 T(S);
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j) {
      Polynomial comp(vars);
      for (int k = 1; k <= A.rank(); ++k) {
        const Polynomial& c = A.c(k, i, j);
        if (!c.is_zero())
          comp += c.promoted_to(vars) * Polynomial::variable(vars, S.fiber_coord(k));
      }
      if (!comp.is_zero()) T.set(m + i, m + j, std::move(comp));
    }
  for (int i = 1; i <= A.rank(); ++i)
    for (int a = 1; a <= m; ++a) {
      if (!A.anchor_left(a, i).is_zero())
        T.set(m + i, a, A.anchor_left(a, i).promoted_to(vars));
      if (!A.anchor_right(a, i).is_zero())
        T.set(a, m + i, -A.anchor_right(a, i).promoted_to(vars));
    }
  return T;
}

SpaceMultivector to_linear_bivector(const Algebroid& A) {
  require_skew(A, "linear bivector");
  const Side side = A.carrier() == Carrier::on_E ? Side::E_dual : Side::E;
  const TotalSpace S = total_space(A, side);
  const VarSpace vars = S.vars();
  const int m = A.base_dim();
  SpaceMultivector B(S, 2);
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = i + 1; j <= A.rank(); ++j) {
      Polynomial comp(vars);
      for (int k = 1; k <= A.rank(); ++k) {
        const Polynomial& c = A.c(k, i, j);
        if (!c.is_zero())
          comp += c.promoted_to(vars) * Polynomial::variable(vars, S.fiber_coord(k));
      }
      B.add_term({m + i, m + j}, comp);
    }
  for (int i = 1; i <= A.rank(); ++i)
    for (int a = 1; a <= m; ++a)
      B.add_term({m + i, a}, A.anchor_left(a, i).promoted_to(vars));
  return B;
}

SpaceTensor2 tensor_of(const SpaceMultivector& bivector) {
  if (bivector.degree() != 2) throw std::invalid_argument("tensor_of needs a bivector");
  SpaceTensor2 T(bivector.space());
  for (const auto& [tuple, p] : bivector.components()) {
    T.set(tuple[0], tuple[1], p);
    T.set(tuple[1], tuple[0], -p);
  }
  return T;
}

SpaceMultivector bivector_of(const SpaceTensor2& T) {
  SpaceMultivector B(T.space(), 2);
  const int dim = T.space().dim();
  for (int i = 1; i <= dim; ++i) {
    if (!T.at(i, i).is_zero())
      throw std::invalid_argument("tensor is not skew-symmetric (diagonal component)");
    for (int j = i + 1; j <= dim; ++j) {
      if (!(T.at(i, j) + T.at(j, i)).is_zero())
        throw std::invalid_argument("tensor is not skew-symmetric");
      B.add_term({i, j}, T.at(i, j));
    }
  }
  return B;
}

bool is_linear_tensor(const SpaceTensor2& T, std::string* offending) {
  const TotalSpace& S = T.space();
  const VarSpace vars = S.vars();
  const int m = S.m;
  auto name = [&](int i, int j) {
    return "(" + direction_name(S, i) + "," + direction_name(S, j) + ")";
  };
  for (int i = 1; i <= S.dim(); ++i)
    for (int j = 1; j <= S.dim(); ++j) {
      const Polynomial& p = T.at(i, j);
      if (p.is_zero()) continue;
      const bool fi = i > m, fj = j > m;
      int want = -1;
      if (fi && fj) want = 1;        // fiber-fiber: homogeneous linear
      else if (fi || fj) want = 0;   // mixed: fiber-free
      if (!fi && !fj) {
        if (offending) *offending = "component " + name(i, j) + " must vanish";
        return false;
      }
      for (const auto& [mono, coeff] : p.terms()) {
        if (fiber_degree(vars, mono) != want) {
          if (offending)
            *offending = "component " + name(i, j) + " is not linear: " + p.to_string();
          return false;
        }
      }
    }
  return true;
}

bool fiber_degree_at_most(const SpaceMultivector& u, int bound) {
  const VarSpace vars = u.space().vars();
  for (const auto& [tuple, p] : u.components())
    for (const auto& [mono, coeff] : p.terms())
      if (fiber_degree(vars, mono) > bound) return false;
  return true;
}

Algebroid from_linear_tensor(const SpaceTensor2& T) {
  std::string offending;
  if (!is_linear_tensor(T, &offending))
    throw std::invalid_argument("tensor is not linear: " + offending);
  const TotalSpace& S = T.space();
  const VarSpace vars = S.vars();
  const VarSpace base = VarSpace::base_only(S.base_names);
  const int m = S.m, n = S.n;

  // Structure functions and anchors read off per the Fp5 correspondence.
  std::vector<Polynomial> c(static_cast<std::size_t>(n) * n * n, Polynomial(base));
  std::vector<Polynomial> dl(static_cast<std::size_t>(m) * n, Polynomial(base));
  std::vector<Polynomial> dr = dl;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Polynomial& comp = T.at(m + i, m + j);
      for (const auto& [mono, coeff] : comp.terms()) {
        // Exactly one fiber variable with exponent 1; the rest is base.
        int k = 0;
        Monomial base_mono(base.dim(), 0u);
        for (std::size_t pos = 0; pos < mono.size(); ++pos) {
          if (mono[pos] == 0) continue;
          Variable v = vars.variable_at(static_cast<int>(pos));
          if (v.kind == VarKind::base)
            base_mono[base.offset(v)] = mono[pos];
          else
            k = v.index;
        }
        Polynomial term(base);
        term.add_term(base_mono, coeff);
        c[((static_cast<std::size_t>(k) - 1) * n + (i - 1)) * n + (j - 1)] += term;
      }
    }
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= m; ++a) {
      dl[(a - 1) * n + (i - 1)] = demote_to_base(T.at(m + i, a), base);
      dr[(a - 1) * n + (i - 1)] = demote_to_base(-T.at(a, m + i), base);
    }

  bool skew = true;
  for (int k = 1; k <= n && skew; ++k)
    for (int i = 1; i <= n && skew; ++i)
      for (int j = 1; j <= n && skew; ++j)
        if (!(c[((static_cast<std::size_t>(k) - 1) * n + (i - 1)) * n + (j - 1)] +
              c[((static_cast<std::size_t>(k) - 1) * n + (j - 1)) * n + (i - 1)])
                 .is_zero())
          skew = false;
  if (skew && dl != dr) skew = false;

  Algebroid A(S.base_names, n, skew,
              S.side == Side::E_dual ? Carrier::on_E : Carrier::on_E_dual);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        A.set_c(k, i, j, c[((static_cast<std::size_t>(k) - 1) * n + (i - 1)) * n + (j - 1)]);
  for (int a = 1; a <= m; ++a)
    for (int i = 1; i <= n; ++i) {
      A.set_anchor_left(a, i, dl[(a - 1) * n + (i - 1)]);
      A.set_anchor_right(a, i, dr[(a - 1) * n + (i - 1)]);
    }
  return A;
}

SpaceMultivector vertical_lift(const Algebroid& A, const FiberMultivector& u) {
  const TotalSpace S = total_space(A, Side::E);
  SpaceMultivector out(S, u.degree());
  const int m = A.base_dim();
  for (const auto& [tuple, p] : u.components()) {
    IndexTuple dirs;
    dirs.reserve(tuple.size());
    for (int i : tuple) dirs.push_back(m + i);
    out.add_term(std::move(dirs), base_lift(p, S));
  }
  return out;
}

namespace {

// Fp12 for a single section written over the E coordinates.
SpaceMultivector lift_section(const Algebroid& A, const Section& X) {
  const TotalSpace S = total_space(A, Side::E);
  const VarSpace vars = S.vars();
  const int m = A.base_dim();
  SpaceMultivector out(S, 1);
  for (int a = 1; a <= m; ++a) {
    Polynomial coeff(A.base_space());
    for (int i = 1; i <= A.rank(); ++i)
      if (!A.anchor_left(a, i).is_zero()) coeff += X[i] * A.anchor_left(a, i);
    out.add_term({a}, coeff.promoted_to(vars));
  }
  for (int k = 1; k <= A.rank(); ++k) {
    Polynomial coeff(vars);
    for (int j = 1; j <= A.rank(); ++j) {
      Polynomial inner(A.base_space());
      for (int i = 1; i <= A.rank(); ++i)
        if (!A.c(k, j, i).is_zero()) inner += X[i] * A.c(k, j, i);
      for (int a = 1; a <= m; ++a)
        if (!A.anchor_left(a, j).is_zero())
          inner += X[k].partial(base_var(a)) * A.anchor_left(a, j);
      if (!inner.is_zero())
        coeff += inner.promoted_to(vars) * Polynomial::variable(vars, fiber_var(j));
    }
    out.add_term({m + k}, coeff);
  }
  return out;
}

// d_T of a single skew term f·e_{I} by the v-derivation rule.
SpaceMultivector lift_term(const Algebroid& A, const Polynomial& f, const IndexTuple& I) {
  if (I.empty()) {
    // Fp11: d_T(f) = ι_E(d^Λ f).
    const TotalSpace S = total_space(A, Side::E);
    const VarSpace vars = S.vars();
    Polynomial acc(vars);
    for (int j = 1; j <= A.rank(); ++j) {
      Polynomial inner(A.base_space());
      for (int a = 1; a <= A.base_dim(); ++a)
        if (!A.anchor_left(a, j).is_zero())
          inner += f.partial(base_var(a)) * A.anchor_left(a, j);
      if (!inner.is_zero())
        acc += inner.promoted_to(vars) * Polynomial::variable(vars, fiber_var(j));
    }
    SpaceMultivector out(S, 0);
    out.add_term({}, acc);
    return out;
  }
  if (I.size() == 1) {
    Section X = Section::basis(A, I[0]).scaled(f);
    return lift_section(A, X);
  }
  // d_T(u∧v) = d_T(u)∧v_τ(v) + v_τ(u)∧d_T(v) with u = f·e_{I0}, v = e_{rest}.
  IndexTuple rest(I.begin() + 1, I.end());
  FiberMultivector head(A.base_space(), A.rank(), 1);
  head.add_term({I[0]}, f);
  FiberMultivector tail(A.base_space(), A.rank(), static_cast<int>(rest.size()));
  tail.add_term(rest, Polynomial::constant(A.base_space(), Rational(1)));
  const Polynomial one = Polynomial::constant(A.base_space(), Rational(1));
  return wedge(lift_term(A, f, {I[0]}), vertical_lift(A, tail)) +
         wedge(vertical_lift(A, head), lift_term(A, one, rest));
}

}  // namespace

SpaceMultivector complete_lift(const Algebroid& A, const FiberMultivector& u) {
  require_skew(A, "complete lift");
  SpaceMultivector out(total_space(A, Side::E), u.degree());
  for (const auto& [tuple, p] : u.components()) {
    SpaceMultivector lifted = lift_term(A, p, tuple);
    out = out + lifted;
  }
  return out;
}

SpaceMultivector space_schouten(const SpaceMultivector& u, const SpaceMultivector& v) {
  if (u.space() != v.space()) throw std::invalid_argument("space mismatch");
  const int degree = std::max(u.degree() + v.degree() - 1, 0);
  SpaceMultivector out(u.space(), degree);
  detail::Table t = detail::schouten(detail::coordinate_context(u.space().vars()),
                                     u.components(), u.degree(), v.components(), v.degree());
  for (auto& [tuple, p] : t) out.add_term(tuple, p);
  return out;
}

Polynomial apply_field(const SpaceMultivector& v, const Polynomial& f) {
  if (v.degree() != 1) throw std::invalid_argument("apply_field needs a vector field");
  const VarSpace vars = v.space().vars();
  if (f.space() != vars) throw std::invalid_argument("function not over the field's space");
  Polynomial acc(vars);
  for (const auto& [tuple, p] : v.components())
    acc += p * f.partial(vars.variable_at(tuple[0] - 1));
  return acc;
}

Polynomial poisson_bracket(const SpaceTensor2& T, const Polynomial& f, const Polynomial& g) {
  const VarSpace vars = T.space().vars();
  Polynomial acc(vars);
  for (int i = 1; i <= T.space().dim(); ++i)
    for (int j = 1; j <= T.space().dim(); ++j) {
      const Polynomial& comp = T.at(i, j);
      if (comp.is_zero()) continue;
      acc += comp * f.partial(vars.variable_at(i - 1)) * g.partial(vars.variable_at(j - 1));
    }
  return acc;
}

Polynomial poisson_bracket(const SpaceMultivector& T, const Polynomial& f, const Polynomial& g) {
  if (T.degree() != 2) throw std::invalid_argument("poisson_bracket needs a bivector");
  const VarSpace vars = T.space().vars();
  Polynomial acc(vars);
  for (const auto& [tuple, p] : T.components()) {
    Variable vi = vars.variable_at(tuple[0] - 1);
    Variable vj = vars.variable_at(tuple[1] - 1);
    acc += p * (f.partial(vi) * g.partial(vj) - f.partial(vj) * g.partial(vi));
  }
  return acc;
}

SpaceMultivector hamiltonian_lift(const Algebroid& A, const Section& X) {
  require_skew(A, "hamiltonian lift");
  SpaceMultivector lambda = to_linear_bivector(A);
  SpaceMultivector fn(lambda.space(), 0);
  fn.add_term({}, iota_dual(A, X));
  return -space_schouten(lambda, fn);
}

SpaceMultivector j_field(const Algebroid& A, const EndoTensor& N, Side side) {
  const TotalSpace S = total_space(A, side);
  const VarSpace vars = S.vars();
  const int m = A.base_dim();
  SpaceMultivector out(S, 1);
  if (side == Side::E) {
    // J_E(N) = −N^i_j y^j ∂y^i
    for (int i = 1; i <= A.rank(); ++i) {
      Polynomial coeff(vars);
      for (int j = 1; j <= A.rank(); ++j)
        if (!N.at(i, j).is_zero())
          coeff -= N.at(i, j).promoted_to(vars) * Polynomial::variable(vars, fiber_var(j));
      out.add_term({m + i}, coeff);
    }
  } else {
    // J_{E*}(N) = −N^i_j ξ_i ∂ξ_j
    for (int j = 1; j <= A.rank(); ++j) {
      Polynomial coeff(vars);
      for (int i = 1; i <= A.rank(); ++i)
        if (!N.at(i, j).is_zero())
          coeff -= N.at(i, j).promoted_to(vars) * Polynomial::variable(vars, dual_var(i));
      out.add_term({m + j}, coeff);
    }
  }
  return out;
}

SpaceMultivector lambda_n_lie(const Algebroid& A, const EndoTensor& N) {
  require_skew(A, "lambda_N");
  return space_schouten(j_field(A, N, Side::E_dual), to_linear_bivector(A));
}

SpaceMultivector lambda_n_local(const Algebroid& A, const EndoTensor& N) {
  require_skew(A, "lambda_N");
  const TotalSpace S = total_space(A, Side::E_dual);
  const VarSpace vars = S.vars();
  const VarSpace& B = A.base_space();
  const int m = A.base_dim(), n = A.rank();
  SpaceTensor2 T(S);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Polynomial comp(vars);
      for (int k = 1; k <= n; ++k) {
        Polynomial coeff(B);
        for (int l = 1; l <= n; ++l) {
          coeff += A.c(k, l, j) * N.at(l, i);
          coeff += A.c(k, i, l) * N.at(l, j);
          coeff -= A.c(l, i, j) * N.at(k, l);
        }
        for (int a = 1; a <= m; ++a) {
          coeff += A.anchor_left(a, i) * N.at(k, j).partial(base_var(a));
          coeff -= A.anchor_right(a, j) * N.at(k, i).partial(base_var(a));
        }
        if (!coeff.is_zero())
          comp += coeff.promoted_to(vars) * Polynomial::variable(vars, dual_var(k));
      }
      if (!comp.is_zero()) T.set(m + i, m + j, std::move(comp));
    }
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= m; ++a) {
      Polynomial left(B), right(B);
      for (int l = 1; l <= n; ++l) {
        left += N.at(l, i) * A.anchor_left(a, l);
        right += N.at(l, i) * A.anchor_right(a, l);
      }
      if (!left.is_zero()) T.set(m + i, a, left.promoted_to(vars));
      if (!right.is_zero()) T.set(a, m + i, -right.promoted_to(vars));
    }
  return bivector_of(T);
}

Algebroid deformed_algebroid(const Algebroid& A, const EndoTensor& N) {
  return from_linear_tensor(tensor_of(lambda_n_lie(A, N)));
}

SpaceMultivector complete_lift_deformed_rebuilt(const Algebroid& A, const EndoTensor& N,
                                                const FiberMultivector& u) {
  return complete_lift(deformed_algebroid(A, N), u);
}

SpaceMultivector complete_lift_deformed_cp7(const Algebroid& A, const EndoTensor& N,
                                            const FiberMultivector& u) {
  require_skew(A, "deformed complete lift");
  SpaceMultivector lifted = complete_lift(A, u);
  return complete_lift(A, apply_iN(N, u)) -
         space_schouten(j_field(A, N, Side::E), lifted);
}

FiberForm lifted_form_bracket_fp14(const Algebroid& A, const FiberMultivector& P,
                                   const FiberForm& mu, const FiberForm& nu) {
  require_skew(A, "lifted form bracket");
  if (P.degree() != 2 || mu.degree() != 1 || nu.degree() != 1)
    throw std::invalid_argument("Fp14 bracket needs a bivector and two 1-forms");
  Section P_mu = section_of(A, interior_form(A, mu, P));
  Section P_nu = section_of(A, interior_form(A, nu, P));
  FiberForm term1 = lie_derivative(A, P_mu, nu);
  FiberForm term2 = lie_derivative(A, P_nu, mu);
  FiberForm term3 = exterior_derivative_function(A, pair(A, P, {mu, nu}));
  return term1 - term2 - term3;
}

Algebroid dual_algebroid_from_lift(const Algebroid& A, const FiberMultivector& P) {
  if (P.degree() != 2) throw std::invalid_argument("expected a bivector");
  return from_linear_tensor(tensor_of(complete_lift(A, P)));
}

FiberForm lifted_form_bracket_via_lift(const Algebroid& A, const FiberMultivector& P,
                                       const FiberForm& mu, const FiberForm& nu) {
  Algebroid dual = dual_algebroid_from_lift(A, P);
  auto as_section = [&dual](const FiberForm& f) {
    Section s = Section::zero(dual);
    for (const auto& [tuple, p] : f.components()) s[tuple[0]] = p;
    return s;
  };
  Section result = bracket_sections(dual, as_section(mu), as_section(nu));
  FiberForm out(A.base_space(), A.rank(), 1);
  for (int i = 1; i <= A.rank(); ++i) out.add_term({i}, result[i]);
  return out;
}

FiberLinearMap::FiberLinearMap(TotalSpace source, TotalSpace target,
                               std::vector<Polynomial> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.m != target_.m || source_.base_names != target_.base_names)
    throw std::invalid_argument("fiber-linear maps must share the base");
  if (static_cast<int>(matrix_.size()) != target_.n * source_.n)
    throw std::invalid_argument("matrix shape mismatch");
  const VarSpace base = VarSpace::base_only(source_.base_names);
  for (const auto& p : matrix_)
    if (p.space() != base)
      throw std::invalid_argument("matrix entries must be base polynomials");
}

const Polynomial& FiberLinearMap::at(int i, int j) const {
  if (i < 1 || i > target_.n || j < 1 || j > source_.n)
    throw std::out_of_range("matrix index");
  return matrix_[(i - 1) * source_.n + (j - 1)];
}

FiberLinearMap compose(const FiberLinearMap& phi1, const FiberLinearMap& phi2) {
  if (phi1.target() != phi2.source())
    throw std::invalid_argument("compose: intermediate spaces do not match");
  const VarSpace base = VarSpace::base_only(phi1.source().base_names);
  std::vector<Polynomial> m(static_cast<std::size_t>(phi2.target().n) * phi1.source().n,
                            Polynomial(base));
  for (int i = 1; i <= phi2.target().n; ++i)
    for (int j = 1; j <= phi1.source().n; ++j) {
      Polynomial acc(base);
      for (int l = 1; l <= phi1.target().n; ++l) acc += phi2.at(i, l) * phi1.at(l, j);
      m[(i - 1) * phi1.source().n + (j - 1)] = std::move(acc);
    }
  return FiberLinearMap(phi1.source(), phi2.target(), std::move(m));
}

FiberLinearMap identity_map(const TotalSpace& S) {
  const VarSpace base = VarSpace::base_only(S.base_names);
  std::vector<Polynomial> m(static_cast<std::size_t>(S.n) * S.n, Polynomial(base));
  for (int i = 0; i < S.n; ++i) m[i * S.n + i] = Polynomial::constant(base, Rational(1));
  return FiberLinearMap(S, S, std::move(m));
}

FiberLinearMap endo_map(const Algebroid& A, const EndoTensor& N) {
  const TotalSpace S = total_space(A, Side::E);
  std::vector<Polynomial> m;
  m.reserve(static_cast<std::size_t>(A.rank()) * A.rank());
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j) m.push_back(N.at(i, j));
  return FiberLinearMap(S, S, std::move(m));
}

FiberLinearMap endo_dual_map(const Algebroid& A, const EndoTensor& N) {
  const TotalSpace S = total_space(A, Side::E_dual);
  std::vector<Polynomial> m;
  m.reserve(static_cast<std::size_t>(A.rank()) * A.rank());
  // (Ñ*ξ)_j = N^i_j ξ_i: row j of the map is column j of N.
  for (int j = 1; j <= A.rank(); ++j)
    for (int i = 1; i <= A.rank(); ++i) m.push_back(N.at(i, j));
  return FiberLinearMap(S, S, std::move(m));
}

FiberLinearMap minus_p_tilde(const Algebroid& A, const FiberMultivector& P) {
  if (P.degree() != 2) throw std::invalid_argument("expected a bivector");
  const TotalSpace Sd = total_space(A, Side::E_dual);
  const TotalSpace Se = total_space(A, Side::E);
  std::vector<Polynomial> m;
  m.reserve(static_cast<std::size_t>(A.rank()) * A.rank());
  // y^k = −(P̃ξ)^k = −Σ_i P^{ik} ξ_i, so M[k][i] = −P^{ik} = P^{ki}.
  for (int k = 1; k <= A.rank(); ++k)
    for (int i = 1; i <= A.rank(); ++i) m.push_back(P.component({k, i}));
  return FiberLinearMap(Sd, Se, std::move(m));
}

RelatednessReport are_related(const FiberLinearMap& phi, const SpaceTensor2& T1,
                              const SpaceTensor2& T2) {
  if (T1.space() != phi.source() || T2.space() != phi.target())
    throw std::invalid_argument("tensors do not live on the map's spaces");
  const TotalSpace& src = phi.source();
  const TotalSpace& tgt = phi.target();
  const VarSpace sv = src.vars();
  const VarSpace tv = tgt.vars();
  const int sm = src.m;

  // Pullbacks of the target coordinates along Φ.
  std::map<Variable, Polynomial> bindings;
  for (int i = 1; i <= tgt.n; ++i) {
    Polynomial image(sv);
    for (int j = 1; j <= src.n; ++j)
      image += phi.at(i, j).promoted_to(sv) * Polynomial::variable(sv, src.fiber_coord(j));
    bindings.emplace(tgt.fiber_coord(i), std::move(image));
  }

  // Jacobian of Φ: rows = target directions, cols = source directions.
  auto jac = [&](int row, int col) -> Polynomial {
    if (row <= sm) {
      if (col == row) return Polynomial::constant(sv, Rational(1));
      return Polynomial(sv);
    }
    const int i = row - sm;  // target fiber index
    if (col <= sm) {
      Polynomial acc(sv);
      for (int j = 1; j <= src.n; ++j) {
        Polynomial d = phi.at(i, j).partial(base_var(col));
        if (!d.is_zero())
          acc += d.promoted_to(sv) * Polynomial::variable(sv, src.fiber_coord(j));
      }
      return acc;
    }
    return phi.at(i, col - sm).promoted_to(sv);
  };

  for (int C = 1; C <= tgt.dim(); ++C) {
    for (int D = 1; D <= tgt.dim(); ++D) {
      Polynomial lhs(sv);
      for (int a = 1; a <= src.dim(); ++a) {
        for (int b = 1; b <= src.dim(); ++b) {
          const Polynomial& t1 = T1.at(a, b);
          if (t1.is_zero()) continue;
          Polynomial ja = jac(C, a);
          if (ja.is_zero()) continue;
          Polynomial jb = jac(D, b);
          if (jb.is_zero()) continue;
          lhs += ja * jb * t1;
        }
      }
      Polynomial rhs = T2.at(C, D).substitute(bindings, sv);
      if (lhs != rhs) {
        RelatednessReport r;
        r.related = false;
        r.witness = "component (" + direction_name(tgt, C) + "," + direction_name(tgt, D) +
                    "): pushforward " + lhs.to_string() + " vs " + rhs.to_string();
        return r;
      }
    }
  }
  return {true, ""};
}

RelatednessReport are_related(const FiberLinearMap& phi, const SpaceMultivector& T1,
                              const SpaceMultivector& T2) {
  return are_related(phi, tensor_of(T1), tensor_of(T2));
}

}  // namespace algkit
