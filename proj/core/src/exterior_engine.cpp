#include "exterior_engine.hpp"

namespace algkit::detail {

BracketContext fiber_context(const Algebroid& A) {
  BracketContext ctx;
  ctx.generators = A.rank();
  ctx.space = A.base_space();
  ctx.basis_bracket = [&A](int i, int j) {
    std::vector<Polynomial> out(A.rank(), Polynomial(A.base_space()));
    for (int k = 1; k <= A.rank(); ++k) out[k - 1] = A.c(k, i, j);
    return out;
  };
  ctx.act = [&A](int i, const Polynomial& f) {
    Polynomial acc(A.base_space());
    for (int a = 1; a <= A.base_dim(); ++a) {
      const Polynomial& d = A.anchor_left(a, i);
      if (!d.is_zero()) acc += d * f.partial(base_var(a));
    }
    return acc;
  };
  return ctx;
}

BracketContext coordinate_context(const VarSpace& total) {
  BracketContext ctx;
  ctx.generators = total.dim();
  ctx.space = total;
  ctx.basis_bracket = nullptr;  // coordinate fields commute
  ctx.act = [total](int i, const Polynomial& f) {
    return f.partial(total.variable_at(i - 1));
  };
  return ctx;
}

void table_add(Table& t, IndexTuple tuple, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  const int sign = normalize_tuple(tuple);
  if (sign == 0) return;
  const Polynomial value = sign > 0 ? coeff : -coeff;
  auto [it, inserted] = t.emplace(std::move(tuple), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) t.erase(it);
  }
}

Polynomial table_component(const Table& t, IndexTuple tuple, const VarSpace& space) {
  const int sign = normalize_tuple(tuple);
  if (sign == 0) return Polynomial(space);
  auto it = t.find(tuple);
  if (it == t.end()) return Polynomial(space);
  return sign > 0 ? it->second : -it->second;
}

namespace {

// [f g_i, h g_j] over the context, as a dense generator vector.
std::vector<Polynomial> pair_bracket(const BracketContext& ctx, int i, const Polynomial& f,
                                     int j, const Polynomial& h) {
  std::vector<Polynomial> out(ctx.generators, Polynomial(ctx.space));
  if (ctx.basis_bracket) {
    std::vector<Polynomial> c = ctx.basis_bracket(i, j);
    for (int k = 0; k < ctx.generators; ++k)
      if (!c[k].is_zero()) out[k] += f * h * c[k];
  }
  Polynomial fi = ctx.act(i, h);
  if (!fi.is_zero()) out[j - 1] += f * fi;
  Polynomial hj = ctx.act(j, f);
  if (!hj.is_zero()) out[i - 1] -= h * hj;
  return out;
}

Table schouten_with_function(const BracketContext& ctx, const Table& u, const Polynomial& f,
                             int extra_sign) {
  // extra_sign * [f, u] with [f, u] = sum_b (-1)^b act(u_b)(f) u_{~b}.
  Table out;
  for (const auto& [tuple, g] : u) {
    for (std::size_t b = 0; b < tuple.size(); ++b) {
      Polynomial derived = ctx.act(tuple[b], f);
      if (derived.is_zero()) continue;
      int sign = ((b + 1) % 2 == 0) ? 1 : -1;
      sign *= extra_sign;
      IndexTuple rest;
      rest.reserve(tuple.size() - 1);
      for (std::size_t r = 0; r < tuple.size(); ++r)
        if (r != b) rest.push_back(tuple[r]);
      table_add(out, std::move(rest), sign > 0 ? g * derived : -(g * derived));
    }
  }
  return out;
}

}  // namespace

Table schouten(const BracketContext& ctx, const Table& u, int pu, const Table& v, int pv) {
  if (pu == 0 && pv == 0) return {};
  if (pu == 0) {
    Polynomial f = table_component(u, {}, ctx.space);
    return schouten_with_function(ctx, v, f, 1);
  }
  if (pv == 0) {
    Polynomial f = table_component(v, {}, ctx.space);
    return schouten_with_function(ctx, u, f, pu % 2 == 0 ? 1 : -1);
  }
  Table out;
  const Polynomial one = Polynomial::constant(ctx.space, Rational(1));
  for (const auto& [I, f] : u) {
    for (const auto& [J, g] : v) {
      for (int a = 1; a <= pu; ++a) {
        for (int b = 1; b <= pv; ++b) {
          // Coefficients ride on the first factor of each decomposable term:
          // the bracket sees them only when it consumes that factor, otherwise
          // they stay on the wedge remainder as plain multipliers.
          const Polynomial& fa = (a == 1) ? f : one;
          const Polynomial& gb = (b == 1) ? g : one;
          std::vector<Polynomial> w = pair_bracket(ctx, I[a - 1], fa, J[b - 1], gb);
          Polynomial outer = one;
          if (a > 1) outer = outer * f;
          if (b > 1) outer = outer * g;
          const int sign = ((a + b) % 2 == 0) ? 1 : -1;
          IndexTuple rest;
          rest.reserve(pu + pv - 2);
          for (int r = 0; r < pu; ++r)
            if (r != a - 1) rest.push_back(I[r]);
          for (int r = 0; r < pv; ++r)
            if (r != b - 1) rest.push_back(J[r]);
          for (int k = 0; k < ctx.generators; ++k) {
            if (w[k].is_zero()) continue;
            IndexTuple tuple;
            tuple.reserve(rest.size() + 1);
            tuple.push_back(k + 1);
            tuple.insert(tuple.end(), rest.begin(), rest.end());
            Polynomial value = outer * w[k];
            table_add(out, std::move(tuple), sign > 0 ? value : -value);
          }
        }
      }
    }
  }
  return out;
}

void for_each_increasing_tuple(int limit, int size,
                               const std::function<void(const IndexTuple&)>& fn) {
  if (size == 0) {
    IndexTuple empty;
    fn(empty);
    return;
  }
  if (size > limit) return;
  IndexTuple tuple(size);
  for (int i = 0; i < size; ++i) tuple[i] = i + 1;
  while (true) {
    fn(tuple);
    int pos = size - 1;
    while (pos >= 0 && tuple[pos] == limit - (size - 1 - pos)) --pos;
    if (pos < 0) return;
    ++tuple[pos];
    for (int i = pos + 1; i < size; ++i) tuple[i] = tuple[i - 1] + 1;
  }
}

Table exterior_derivative(const BracketContext& ctx, const Table& omega, int k) {
  Table out;
  for_each_increasing_tuple(ctx.generators, k + 1, [&](const IndexTuple& I) {
    Polynomial value(ctx.space);
    for (int r = 0; r <= k; ++r) {
      IndexTuple rest;
      rest.reserve(k);
      for (int q = 0; q <= k; ++q)
        if (q != r) rest.push_back(I[q]);
      Polynomial inner = table_component(omega, rest, ctx.space);
      if (!inner.is_zero()) {
        Polynomial acted = ctx.act(I[r], inner);
        if (!acted.is_zero()) value += (r % 2 == 0) ? acted : -acted;
      }
      if (!ctx.basis_bracket) continue;
      for (int s = r + 1; s <= k; ++s) {
        std::vector<Polynomial> w = ctx.basis_bracket(I[r], I[s]);
        IndexTuple rest2;
        rest2.reserve(k - 1);
        for (int q = 0; q <= k; ++q)
          if (q != r && q != s) rest2.push_back(I[q]);
        Polynomial pairing(ctx.space);
        for (int l = 0; l < ctx.generators; ++l) {
          if (w[l].is_zero()) continue;
          IndexTuple slot;
          slot.reserve(k);
          slot.push_back(l + 1);
          slot.insert(slot.end(), rest2.begin(), rest2.end());
          Polynomial comp = table_component(omega, std::move(slot), ctx.space);
          if (!comp.is_zero()) pairing += w[l] * comp;
        }
        if (!pairing.is_zero()) value += ((r + s) % 2 == 0) ? pairing : -pairing;
      }
    }
    if (!value.is_zero()) out.emplace(I, std::move(value));
  });
  return out;
}

}  // namespace algkit::detail
