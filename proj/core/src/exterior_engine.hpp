// Internal engine for the graded bracket calculus. Works on raw skew tables
// (increasing index tuple -> polynomial) over an abstract anchored bracket
// context, so the same code drives both the fiber-level Schouten-Nijenhuis
// bracket of an algebroid and the standard multivector-field bracket on a
// total space (generators = coordinate directions, identity anchor).
//
// Conventions (pinned by the acceptance suite):
//   [X1^...^Xp, Y1^...^Yq] = sum_{a,b} (-1)^{a+b} [Xa,Yb]^X_{~a}^Y_{~b}
//   [f, u] = sum_b (-1)^b act(u_b)(f) u_{~b},   [u, f] = (-1)^p [f, u]
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "algkit/algebroid.hpp"

namespace algkit::detail {

using Table = std::map<IndexTuple, Polynomial>;

struct BracketContext {
  int generators = 0;
  VarSpace space;
  // [g_i, g_j] expanded over generators (length `generators`); null means zero.
  std::function<std::vector<Polynomial>(int i, int j)> basis_bracket;
  // Action of generator i on coefficients (the anchor / coordinate derivative).
  std::function<Polynomial(int i, const Polynomial& f)> act;
};

BracketContext fiber_context(const Algebroid& A);
BracketContext coordinate_context(const VarSpace& total);

void table_add(Table& t, IndexTuple tuple, const Polynomial& coeff);
Polynomial table_component(const Table& t, IndexTuple tuple, const VarSpace& space);

// Graded Schouten-Nijenhuis bracket of homogeneous tables of degrees pu, pv.
Table schouten(const BracketContext& ctx, const Table& u, int pu, const Table& v, int pv);

// Koszul exterior derivative of a degree-k form table (dual tuples).
Table exterior_derivative(const BracketContext& ctx, const Table& omega, int k);

// Calls fn on every strictly increasing tuple of the given size from 1..limit.
void for_each_increasing_tuple(int limit, int size,
                               const std::function<void(const IndexTuple&)>& fn);

}  // namespace algkit::detail
