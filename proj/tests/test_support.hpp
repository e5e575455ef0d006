// Shared fixtures: the worked structures (EX4, TM2, SL2, NONJAC) and small
// deterministic generators for property-style tests.
#pragma once

#include <functional>
#include <random>

#include "algkit/calculus.hpp"
#include "algkit/lifts.hpp"

namespace testkit {

using namespace algkit;

// Four-dimensional Lie algebra over a point: [e1,e2] = e3.
inline Algebroid make_ex4() {
  Algebroid A({}, 4, true);
  A.add_bracket_term(1, 2, 3, Polynomial::constant(A.base_space(), Rational(1)));
  return A;
}

inline FiberMultivector ex4_P(const Algebroid& A) { return basis_multivector(A, {2, 4}); }

inline EndoTensor ex4_N(const Algebroid& A) {
  EndoTensor N = EndoTensor::identity(A);
  N.set(1, 1, Polynomial::constant(A.base_space(), Rational(-1)));
  return N;
}

// Canonical tangent algebroid of a 2-dimensional base: c = 0, identity anchor.
inline Algebroid make_tm2() {
  Algebroid A({"x1", "x2"}, 2, true);
  for (int i = 1; i <= 2; ++i)
    A.set_anchor(i, i, Polynomial::constant(A.base_space(), Rational(1)));
  return A;
}

// sl(2): [e1,e2] = 2e2, [e1,e3] = −2e3, [e2,e3] = e1.
inline Algebroid make_sl2() {
  Algebroid A({}, 3, true);
  A.add_bracket_term(1, 2, 2, Polynomial::constant(A.base_space(), Rational(2)));
  A.add_bracket_term(1, 3, 3, Polynomial::constant(A.base_space(), Rational(-2)));
  A.add_bracket_term(2, 3, 1, Polynomial::constant(A.base_space(), Rational(1)));
  return A;
}

// Fails Jacobi: [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1.
inline Algebroid make_nonjac() {
  Algebroid A({}, 3, true);
  A.add_bracket_term(1, 2, 2, Polynomial::constant(A.base_space(), Rational(1)));
  A.add_bracket_term(1, 3, 3, Polynomial::constant(A.base_space(), Rational(1)));
  A.add_bracket_term(2, 3, 1, Polynomial::constant(A.base_space(), Rational(1)));
  return A;
}

inline Polynomial random_poly(const VarSpace& space, std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, space.dim() == 0 ? 0 : space.dim() - 1);
  Polynomial p = Polynomial::constant(space, Rational(coeff(rng)));
  if (space.dim() == 0) return p;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Polynomial mono = Polynomial::constant(space, Rational(coeff(rng)));
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    for (int d = 0; d < deg; ++d)
      mono = mono * Polynomial::variable(space, space.variable_at(pick(rng)));
    p += mono;
  }
  return p;
}

inline Section random_section(const Algebroid& A, std::mt19937& rng, int max_degree = 2) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < A.rank(); ++i)
    comps.push_back(random_poly(A.base_space(), rng, max_degree));
  return Section(A, std::move(comps));
}

// Fills every increasing tuple with a random base polynomial.
template <class Tag>
void random_fill(FiberElement<Tag>& u, const Algebroid& A, std::mt19937& rng, int max_degree) {
  IndexTuple tuple(u.degree());
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == u.degree()) {
      u.add_term(tuple, random_poly(A.base_space(), rng, max_degree));
      return;
    }
    for (int i = lo; i <= A.rank(); ++i) {
      tuple[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 1);
}

inline FiberMultivector random_multivector(const Algebroid& A, int degree, std::mt19937& rng,
                                           int max_degree = 2) {
  FiberMultivector u(A.base_space(), A.rank(), degree);
  random_fill(u, A, rng, max_degree);
  return u;
}

inline FiberForm random_form(const Algebroid& A, int degree, std::mt19937& rng,
                             int max_degree = 2) {
  FiberForm u(A.base_space(), A.rank(), degree);
  random_fill(u, A, rng, max_degree);
  return u;
}

inline EndoTensor random_endo(const Algebroid& A, std::mt19937& rng, int max_degree = 1) {
  EndoTensor N(A.base_space(), A.rank());
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j)
      N.set(i, j, random_poly(A.base_space(), rng, max_degree));
  return N;
}

inline Polynomial C(const Algebroid& A, long num, long den = 1) {
  return Polynomial::constant(A.base_space(), Rational(num, den));
}

}  // namespace testkit
