// Tensor fields on the total spaces E and E*: the algebroid <-> linear-tensor
// correspondence, vertical and complete lifts, hamiltonian lifts, J-fields,
// the deformed tensor Λ_N (two routes), the bracket on E*-sections induced by
// d_T^Λ(P) (two routes), and relatedness under fiber-linear bundle maps.
#pragma once

#include "algkit/calculus.hpp"

namespace algkit {

enum class Side { E, E_dual };

struct TotalSpace {
  Side side = Side::E;
  int m = 0;
  int n = 0;
  std::vector<std::string> base_names;

  VarSpace vars() const {
    return side == Side::E ? VarSpace::on_E(base_names, n) : VarSpace::on_E_dual(base_names, n);
  }
  // The fiber coordinate (y^i on E, xi_i on E*).
  Variable fiber_coord(int i) const {
    return side == Side::E ? fiber_var(i) : dual_var(i);
  }
  int dim() const { return m + n; }

  friend bool operator==(const TotalSpace& a, const TotalSpace& b) {
    return a.side == b.side && a.m == b.m && a.n == b.n && a.base_names == b.base_names;
  }
  friend bool operator!=(const TotalSpace& a, const TotalSpace& b) { return !(a == b); }
};

TotalSpace total_space(const Algebroid& A, Side side);

// Skew multivector field on a total space; direction indices are 1-based
// canonical variable offsets (x's first, then the fiber coordinates).
class SpaceMultivector {
public:
  SpaceMultivector(TotalSpace space, int degree);

  const TotalSpace& space() const { return space_; }
  int degree() const { return degree_; }
  const std::map<IndexTuple, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add_term(IndexTuple directions, const Polynomial& coeff);
  Polynomial component(IndexTuple directions) const;

  SpaceMultivector operator+(const SpaceMultivector& o) const;
  SpaceMultivector operator-(const SpaceMultivector& o) const;
  SpaceMultivector operator-() const;
  SpaceMultivector scaled(const Polynomial& f) const;
  SpaceMultivector scaled(const Rational& c) const;

  friend bool operator==(const SpaceMultivector& a, const SpaceMultivector& b) {
    return a.space_ == b.space_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const SpaceMultivector& a, const SpaceMultivector& b) {
    return !(a == b);
  }

  // Canonical rendering, e.g. "y1*dy3^dy4".
  std::string to_string() const;

private:
  TotalSpace space_;
  int degree_;
  std::map<IndexTuple, Polynomial> comps_;
};

SpaceMultivector wedge(const SpaceMultivector& u, const SpaceMultivector& v);

// General 2-contravariant tensor field on a total space (dense components).
class SpaceTensor2 {
public:
  explicit SpaceTensor2(TotalSpace space);

  const TotalSpace& space() const { return space_; }
  const Polynomial& at(int i, int j) const;  // 1-based direction offsets
  void set(int i, int j, Polynomial value);

  friend bool operator==(const SpaceTensor2& a, const SpaceTensor2& b) {
    return a.space_ == b.space_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

private:
  TotalSpace space_;
  std::vector<Polynomial> entries_;
};

// ι_{E*}X = X^i(x)·xi_i, a function on E*.
Polynomial iota_dual(const Algebroid& A, const Section& X);
// ι_E μ = μ_i(x)·y^i, a function on E.
Polynomial iota(const Algebroid& A, const FiberForm& mu);

// Lift of a base polynomial to a total space (pullback along the projection).
Polynomial base_lift(const Polynomial& f, const TotalSpace& S);

// Λ = c^k_ij ξ_k ∂ξi⊗∂ξj + d^a_i ∂ξi⊗∂x^a − s^a_i ∂x^a⊗∂ξi (Fp4 shape);
// lives on E* for carrier on_E and on E for carrier on_E_dual.
SpaceTensor2 to_linear_tensor(const Algebroid& A);
// The skew (bivector) form; requires a skew structure.
SpaceMultivector to_linear_bivector(const Algebroid& A);

SpaceTensor2 tensor_of(const SpaceMultivector& bivector);
// Fails if T is not antisymmetric.
SpaceMultivector bivector_of(const SpaceTensor2& T);

// Reads the algebroid back off a linear tensor; rejects nonlinear input
// naming the offending component.
Algebroid from_linear_tensor(const SpaceTensor2& T);

// Predicate behind from_linear_tensor; offending receives a component name.
bool is_linear_tensor(const SpaceTensor2& T, std::string* offending = nullptr);

// Components all of fiber-degree <= bound (linearity of lifted fields).
bool fiber_degree_at_most(const SpaceMultivector& u, int bound);

// v_τ: replace e_i by ∂y^i, keep base coefficients.
SpaceMultivector vertical_lift(const Algebroid& A, const FiberMultivector& u);

// d_T^Λ: Fp11 on functions, Fp12 on sections, v-derivation rule above.
SpaceMultivector complete_lift(const Algebroid& A, const FiberMultivector& u);

// Standard Schouten bracket of multivector fields on a coordinate space.
SpaceMultivector space_schouten(const SpaceMultivector& u, const SpaceMultivector& v);

// Action of a degree-1 field on a function.
Polynomial apply_field(const SpaceMultivector& v, const Polynomial& f);

// {f,g} = T(df, dg) for a 2-contravariant tensor or bivector.
Polynomial poisson_bracket(const SpaceTensor2& T, const Polynomial& f, const Polynomial& g);
Polynomial poisson_bracket(const SpaceMultivector& T, const Polynomial& f, const Polynomial& g);

// G(X) = −[Λ, ι_{E*}X], the hamiltonian lift on E*.
SpaceMultivector hamiltonian_lift(const Algebroid& A, const Section& X);

// J_E(N) = −N^i_j y^j ∂y^i on E; J_{E*}(N) = −N^i_j ξ_i ∂ξ_j on E*.
SpaceMultivector j_field(const Algebroid& A, const EndoTensor& N, Side side);

// Λ_N two ways: Lie derivative £_{J_{E*}(N)}Λ, and the local formula.
SpaceMultivector lambda_n_lie(const Algebroid& A, const EndoTensor& N);
SpaceMultivector lambda_n_local(const Algebroid& A, const EndoTensor& N);

// The algebroid carried by Λ_N.
Algebroid deformed_algebroid(const Algebroid& A, const EndoTensor& N);

// d_T^{Λ_N} two ways: under the rebuilt algebroid, and via Thm-style
// d_T^Λ(i_N u) − £_{J_E(N)} d_T^Λ(u).
SpaceMultivector complete_lift_deformed_rebuilt(const Algebroid& A, const EndoTensor& N,
                                                const FiberMultivector& u);
SpaceMultivector complete_lift_deformed_cp7(const Algebroid& A, const EndoTensor& N,
                                            const FiberMultivector& u);

// Bracket on 1-forms induced by d_T^Λ(P): literal Fp14, and via the linear
// tensor d_T^Λ(P) read back as an algebroid structure on E*.
FiberForm lifted_form_bracket_fp14(const Algebroid& A, const FiberMultivector& P,
                                   const FiberForm& mu, const FiberForm& nu);
FiberForm lifted_form_bracket_via_lift(const Algebroid& A, const FiberMultivector& P,
                                       const FiberForm& mu, const FiberForm& nu);

// from_linear_tensor(tensor_of(d_T^Λ(P))): the pre-Lie structure on E*.
Algebroid dual_algebroid_from_lift(const Algebroid& A, const FiberMultivector& P);

// Vector bundle morphism over the identity on the base: target fiber
// coordinates = M(x) · source fiber coordinates.
class FiberLinearMap {
public:
  FiberLinearMap(TotalSpace source, TotalSpace target, std::vector<Polynomial> matrix);

  const TotalSpace& source() const { return source_; }
  const TotalSpace& target() const { return target_; }
  const Polynomial& at(int i, int j) const;  // i: target fiber idx, j: source fiber idx

  friend bool operator==(const FiberLinearMap& a, const FiberLinearMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

private:
  TotalSpace source_, target_;
  std::vector<Polynomial> matrix_;  // n_target × n_source, base polynomials
};

// compose(Φ1, Φ2) = Φ2 ∘ Φ1 (Φ1 applied first; Φ1.target must equal Φ2.source).
FiberLinearMap compose(const FiberLinearMap& phi1, const FiberLinearMap& phi2);

FiberLinearMap identity_map(const TotalSpace& S);
// Ñ: E → E, y ↦ N·y.
FiberLinearMap endo_map(const Algebroid& A, const EndoTensor& N);
// Ñ*: E* → E*, ξ ↦ ξ·N (transpose action).
FiberLinearMap endo_dual_map(const Algebroid& A, const EndoTensor& N);
// −P̃: E* → E, ξ ↦ −P̃(ξ) with P̃(μ) = i_μ P.
FiberLinearMap minus_p_tilde(const Algebroid& A, const FiberMultivector& P);

struct RelatednessReport {
  bool related = false;
  std::string witness;  // offending component and difference, empty when related
};

// Checks (dΦ⊗dΦ)(T1(z)) = T2(Φ(z)) as polynomial identities; no
// invertibility needed.
RelatednessReport are_related(const FiberLinearMap& phi, const SpaceTensor2& T1,
                              const SpaceTensor2& T2);
RelatednessReport are_related(const FiberLinearMap& phi, const SpaceMultivector& T1,
                              const SpaceMultivector& T2);

}  // namespace algkit
