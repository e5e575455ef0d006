#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace algkit;
using namespace testkit;

namespace {

SpaceMultivector field(const TotalSpace& S, int dir, const Polynomial& coeff) {
  SpaceMultivector v(S, 1);
  v.add_term({dir}, coeff);
  return v;
}

Polynomial var(const VarSpace& s, Variable v) { return Polynomial::variable(s, v); }

}  // namespace

TEST_CASE("iota oracles") {
  Algebroid A = make_ex4();
  const VarSpace dual = total_space(A, Side::E_dual).vars();
  CHECK(iota_dual(A, Section::basis(A, 3)) == var(dual, dual_var(3)));
  CHECK(iota_dual(A, Section::zero(A)).is_zero());

  Algebroid T = make_tm2();
  const VarSpace tdual = total_space(T, Side::E_dual).vars();
  Section X = Section::basis(T, 2).scaled(var(T.base_space(), base_var(1)));
  CHECK(iota_dual(T, X) == var(tdual, base_var(1)) * var(tdual, dual_var(2)));

  const VarSpace e = total_space(T, Side::E).vars();
  CHECK(iota(T, basis_form(T, {1})) == var(e, fiber_var(1)));
  CHECK(iota(T, basis_form(T, {3 - 1}).scaled(var(T.base_space(), base_var(2)))) ==
        var(e, base_var(2)) * var(e, fiber_var(2)));
}

TEST_CASE("to_linear_bivector oracles") {
  Algebroid A = make_ex4();
  SpaceMultivector lambda = to_linear_bivector(A);
  const TotalSpace S = total_space(A, Side::E_dual);
  SpaceMultivector expected(S, 2);
  expected.add_term({1, 2}, var(S.vars(), dual_var(3)));
  CHECK(lambda == expected);
  CHECK(lambda.to_string() == "xi3*dxi1^dxi2");

  Algebroid T = make_tm2();
  const TotalSpace Sd = total_space(T, Side::E_dual);
  SpaceMultivector canonical(Sd, 2);
  // ∂ξ1∧∂x1 + ∂ξ2∧∂x2 with offsets x=(1,2), ξ=(3,4)
  canonical.add_term({3, 1}, Polynomial::constant(Sd.vars(), Rational(1)));
  canonical.add_term({4, 2}, Polynomial::constant(Sd.vars(), Rational(1)));
  CHECK(to_linear_bivector(T) == canonical);

  // SL2 with the KKS normalization: components c^k_ij ξ_k on i<j.
  Algebroid sl2 = make_sl2();
  SpaceMultivector kks = to_linear_bivector(sl2);
  const VarSpace sv = total_space(sl2, Side::E_dual).vars();
  CHECK(kks.component({1, 2}) == Rational(2) * var(sv, dual_var(2)));
  CHECK(kks.component({1, 3}) == Rational(-2) * var(sv, dual_var(3)));
  CHECK(kks.component({2, 3}) == var(sv, dual_var(1)));
}

TEST_CASE("from_linear_tensor round-trips and rejects nonlinearity") {
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    Algebroid back = from_linear_tensor(to_linear_tensor(A));
    CHECK(back == A);
  }

  // quadratic ξ dependence is rejected naming the component
  Algebroid A = make_ex4();
  const TotalSpace S = total_space(A, Side::E_dual);
  SpaceTensor2 bad(S);
  bad.set(1, 2, var(S.vars(), dual_var(1)) * var(S.vars(), dual_var(1)));
  CHECK_THROWS_WITH_AS(from_linear_tensor(bad),
                       doctest::Contains("(dxi1,dxi2)"), std::invalid_argument);

  // Fp4 shape with distinct anchors comes back pseudo-Lie.
  Algebroid T = make_tm2();
  SpaceTensor2 twoAnchors(total_space(T, Side::E_dual));
  const VarSpace tv = twoAnchors.space().vars();
  twoAnchors.set(3, 1, Polynomial::constant(tv, Rational(1)));   // d^1_1 = 1
  twoAnchors.set(1, 3, Polynomial::constant(tv, Rational(-2)));  // s^1_1 = 2
  Algebroid pseudo = from_linear_tensor(twoAnchors);
  CHECK_FALSE(pseudo.skew());
  CHECK(pseudo.anchor_left(1, 1) == C(pseudo, 1));
  CHECK(pseudo.anchor_right(1, 1) == C(pseudo, 2));
}

TEST_CASE("non-skew to_linear_tensor matches Fp4") {
  Algebroid pseudo({"x1"}, 2, false);
  pseudo.set_c(1, 1, 2, C(pseudo, 3));
  pseudo.set_anchor_left(1, 1, C(pseudo, 1));
  pseudo.set_anchor_right(1, 2, var(pseudo.base_space(), base_var(1)));
  SpaceTensor2 T = to_linear_tensor(pseudo);
  const VarSpace v = T.space().vars();
  CHECK(T.at(2, 3) == Rational(3) * var(v, dual_var(1)));  // c^1_12 ξ1 ∂ξ1⊗∂ξ2
  CHECK(T.at(2, 1) == Polynomial::constant(v, Rational(1)));
  CHECK(T.at(1, 3) == -var(v, base_var(1)));
  CHECK(from_linear_tensor(T) == pseudo);
}

TEST_CASE("vertical lift oracles") {
  Algebroid A = make_ex4();
  SpaceMultivector vP = vertical_lift(A, ex4_P(A));
  CHECK(vP.to_string() == "dy2^dy4");

  Algebroid T = make_tm2();
  Polynomial x1 = var(T.base_space(), base_var(1));
  SpaceMultivector v1 = vertical_lift(T, multivector_of(T, Section::basis(T, 1).scaled(x1)));
  CHECK(v1 == field(total_space(T, Side::E), 3, var(total_space(T, Side::E).vars(), base_var(1))));

  SpaceMultivector v0 = vertical_lift(T, scalar_multivector(T, x1));
  CHECK(v0.component({}) == var(total_space(T, Side::E).vars(), base_var(1)));
}

TEST_CASE("complete lift oracles") {
  Algebroid A = make_ex4();
  // d_T(P) = y1·∂y3∧∂y4
  SpaceMultivector lifted = complete_lift(A, ex4_P(A));
  CHECK(lifted.to_string() == "y1*dy3^dy4");

  // d_T(e1) = −y2·∂y3 (from c^3_21 = −1)
  SpaceMultivector l1 = complete_lift(A, basis_multivector(A, {1}));
  const TotalSpace S = total_space(A, Side::E);
  CHECK(l1 == field(S, 3, -var(S.vars(), fiber_var(2))));

  // TM2: d_T(x1·e2) = x1·∂x2 + y1·∂y2
  Algebroid T = make_tm2();
  const TotalSpace Se = total_space(T, Side::E);
  Polynomial x1 = var(T.base_space(), base_var(1));
  SpaceMultivector lt = complete_lift(T, multivector_of(T, Section::basis(T, 2).scaled(x1)));
  SpaceMultivector expected(Se, 1);
  expected.add_term({2}, var(Se.vars(), base_var(1)));
  expected.add_term({4}, var(Se.vars(), fiber_var(1)));
  CHECK(lt == expected);

  // degree 0, Fp11
  Polynomial f = x1 * x1;
  SpaceMultivector l0 = complete_lift(T, scalar_multivector(T, f));
  CHECK(l0.component({}) ==
        Rational(2) * var(Se.vars(), base_var(1)) * var(Se.vars(), fiber_var(1)));
}

TEST_CASE("complete lift agrees with Fp13 for bivectors") {
  std::mt19937 rng(83);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    const TotalSpace S = total_space(A, Side::E);
    const VarSpace sv = S.vars();
    const int m = A.base_dim();
    for (int trial = 0; trial < 10; ++trial) {
      FiberMultivector P = random_multivector(A, 2, rng);
      SpaceMultivector direct = complete_lift(A, P);
      // Fp13: P^{ij} δ^a_j ∂y^i∧∂x^a + (P^{kj}c^i_{lk} + ½ ∂P^{ij}/∂x^a δ^a_l) y^l ∂y^i∧∂y^j
      SpaceMultivector byFormula(S, 2);
      for (int i = 1; i <= A.rank(); ++i)
        for (int j = 1; j <= A.rank(); ++j)
          for (int a = 1; a <= m; ++a) {
            Polynomial c = P.component({i, j}) * A.anchor_left(a, j);
            byFormula.add_term({m + i, a}, c.promoted_to(sv));
          }
      for (int i = 1; i <= A.rank(); ++i)
        for (int j = 1; j <= A.rank(); ++j)
          for (int l = 1; l <= A.rank(); ++l) {
            Polynomial coeff(A.base_space());
            for (int k = 1; k <= A.rank(); ++k) coeff += P.component({k, j}) * A.c(i, l, k);
            for (int a = 1; a <= m; ++a)
              coeff += Rational(1, 2) * P.component({i, j}).partial(base_var(a)) *
                       A.anchor_left(a, l);
            byFormula.add_term({m + i, m + j},
                               coeff.promoted_to(sv) * var(sv, fiber_var(l)));
          }
      CHECK(direct == byFormula);
    }
  }
}

TEST_CASE("space_schouten basics") {
  Algebroid T = make_tm2();
  const TotalSpace S = total_space(T, Side::E);
  const VarSpace sv = S.vars();
  // [∂x1, x1·∂x2] = ∂x2
  SpaceMultivector a = field(S, 1, Polynomial::constant(sv, Rational(1)));
  SpaceMultivector b = field(S, 2, var(sv, base_var(1)));
  CHECK(space_schouten(a, b) == field(S, 2, Polynomial::constant(sv, Rational(1))));

  // Λ Poisson iff Lie (Thm's last clause, positive and negative)
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    SpaceMultivector lambda = to_linear_bivector(A);
    CHECK(space_schouten(lambda, lambda).is_zero());
  }
  Algebroid nj = make_nonjac();
  SpaceMultivector bad = to_linear_bivector(nj);
  CHECK_FALSE(space_schouten(bad, bad).is_zero());
}

TEST_CASE("Fp2/Fp3: iota intertwines brackets and anchors") {
  std::mt19937 rng(89);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    SpaceMultivector lambda = to_linear_bivector(A);
    const VarSpace dv = total_space(A, Side::E_dual).vars();
    for (int trial = 0; trial < 10; ++trial) {
      Section X = random_section(A, rng);
      Section Y = random_section(A, rng);
      // Fp2
      CHECK(iota_dual(A, bracket_sections(A, X, Y)) ==
            poisson_bracket(lambda, iota_dual(A, X), iota_dual(A, Y)));
      // Fp3 (skew: both anchors coincide)
      Polynomial f = random_poly(A.base_space(), rng);
      CHECK(anchor_apply(A, X, f).promoted_to(dv) ==
            poisson_bracket(lambda, iota_dual(A, X), f.promoted_to(dv)));
      CHECK(anchor_apply(A, X, f, AnchorSide::right).promoted_to(dv) ==
            -poisson_bracket(lambda, f.promoted_to(dv), iota_dual(A, X)));
    }
  }
}

TEST_CASE("hamiltonian lift") {
  Algebroid T = make_tm2();
  const TotalSpace Sd = total_space(T, Side::E_dual);
  // G(e1) = ∂x1 under the canonical Λ
  CHECK(hamiltonian_lift(T, Section::basis(T, 1)) ==
        field(Sd, 1, Polynomial::constant(Sd.vars(), Rational(1))));
  CHECK(hamiltonian_lift(T, Section::zero(T)).is_zero());

  // G implements the bracket: G(X)(ιY) = ι[X,Y]; and is linear over Tτ.
  std::mt19937 rng(97);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 8; ++trial) {
      Section X = random_section(A, rng);
      Section Y = random_section(A, rng);
      SpaceMultivector g = hamiltonian_lift(A, X);
      CHECK(apply_field(g, iota_dual(A, Y)) == iota_dual(A, bracket_sections(A, X, Y)));
      CHECK(fiber_degree_at_most(g, 1));
    }
  }
}

TEST_CASE("j_field oracles") {
  Algebroid A = make_ex4();
  EndoTensor N = ex4_N(A);
  const TotalSpace Se = total_space(A, Side::E);
  const VarSpace ev = Se.vars();
  SpaceMultivector j = j_field(A, N, Side::E);
  SpaceMultivector expected(Se, 1);
  expected.add_term({1}, var(ev, fiber_var(1)));
  expected.add_term({2}, -var(ev, fiber_var(2)));
  expected.add_term({3}, -var(ev, fiber_var(3)));
  expected.add_term({4}, -var(ev, fiber_var(4)));
  CHECK(j == expected);

  // N = Id on E gives the negative Euler field.
  SpaceMultivector euler = j_field(A, EndoTensor::identity(A), Side::E);
  for (int i = 1; i <= 4; ++i)
    CHECK(euler.component({i}) == -var(ev, fiber_var(i)));
  CHECK(j_field(A, EndoTensor::zero(A), Side::E_dual).is_zero());
}

TEST_CASE("Fp19/Fp20 lemma identities") {
  std::mt19937 rng(101);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 8; ++trial) {
      EndoTensor N = random_endo(A, rng);
      Section X = random_section(A, rng);
      SpaceMultivector j = j_field(A, N, Side::E_dual);
      // Fp19: ι(NX) = −£_J(ιX) = −J(ιX)
      CHECK(iota_dual(A, apply_iN(N, X)) == -apply_field(j, iota_dual(A, X)));
      // Fp20: £_J v_π(μ) = v_π(i_N μ) — verticals on E* are the duals' lifts.
      FiberForm mu = random_form(A, 1, rng);
      const TotalSpace Sd = total_space(A, Side::E_dual);
      auto vertical_dual = [&](const FiberForm& f) {
        SpaceMultivector out(Sd, 1);
        for (const auto& [tuple, p] : f.components())
          out.add_term({A.base_dim() + tuple[0]}, p.promoted_to(Sd.vars()));
        return out;
      };
      CHECK(space_schouten(j, vertical_dual(mu)) == vertical_dual(apply_iN(N, mu)));
    }
  }
}

TEST_CASE("lambda_N oracles and route agreement") {
  Algebroid A = make_ex4();
  EndoTensor N = ex4_N(A);
  CHECK(lambda_n_lie(A, N) == -to_linear_bivector(A));
  CHECK(lambda_n_local(A, N) == -to_linear_bivector(A));

  std::mt19937 rng(103);
  for (Algebroid B : {make_ex4(), make_tm2(), make_sl2()}) {
    CHECK(lambda_n_lie(B, EndoTensor::identity(B)) == to_linear_bivector(B));
    for (int trial = 0; trial < 8; ++trial) {
      EndoTensor M = random_endo(B, rng);
      CHECK(lambda_n_lie(B, M) == lambda_n_local(B, M));
    }
  }

  // TM2 with constant diagonal N: mixed components scale as N^l_i d^a_l.
  Algebroid T = make_tm2();
  EndoTensor K = EndoTensor::zero(T);
  K.set(1, 1, C(T, 3));
  K.set(2, 2, C(T, 5));
  SpaceMultivector ln = lambda_n_local(T, K);
  CHECK(ln.component({3, 1}) == Polynomial::constant(ln.space().vars(), Rational(3)));
  CHECK(ln.component({4, 2}) == Polynomial::constant(ln.space().vars(), Rational(5)));
}

TEST_CASE("deformed complete lift: EX4 values and route agreement") {
  Algebroid A = make_ex4();
  EndoTensor N = ex4_N(A);
  FiberMultivector P = ex4_P(A);
  SpaceMultivector lift_p = complete_lift(A, P);

  // £_{J_E(N)} d_T(P) = 3·y1·∂y3∧∂y4
  SpaceMultivector lie = space_schouten(j_field(A, N, Side::E), lift_p);
  CHECK(lie == lift_p.scaled(Rational(3)));

  // d_T^{Λ_N}(P) = −d_T(P), via both routes
  CHECK(complete_lift_deformed_rebuilt(A, N, P) == -lift_p);
  CHECK(complete_lift_deformed_cp7(A, N, P) == -lift_p);

  std::mt19937 rng(107);
  for (Algebroid B : {make_ex4(), make_tm2(), make_sl2()}) {
    FiberMultivector Q = random_multivector(B, 2, rng, 1);
    CHECK(complete_lift_deformed_rebuilt(B, EndoTensor::identity(B), Q) == complete_lift(B, Q));
    for (int trial = 0; trial < 6; ++trial) {
      EndoTensor M = random_endo(B, rng);
      FiberMultivector R = random_multivector(B, 2, rng, 1);
      CHECK(complete_lift_deformed_rebuilt(B, M, R) == complete_lift_deformed_cp7(B, M, R));
      Section X = random_section(B, rng, 1);
      CHECK(complete_lift_deformed_rebuilt(B, M, multivector_of(B, X)) ==
            complete_lift_deformed_cp7(B, M, multivector_of(B, X)));
    }
  }
}

TEST_CASE("Fp18 consistency: deformed differential vs rebuilt algebroid") {
  std::mt19937 rng(109);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 6; ++trial) {
      EndoTensor N = random_endo(A, rng);
      Algebroid rebuilt = deformed_algebroid(A, N);
      for (int deg = 0; deg <= 2 && deg <= A.rank(); ++deg) {
        FiberForm omega = deg == 0 ? scalar_form(A, random_poly(A.base_space(), rng))
                                   : random_form(A, deg, rng, 1);
        CHECK(deformed_differential(A, N, omega) == exterior_derivative(rebuilt, omega));
      }
    }
  }
}

TEST_CASE("Cp4 identities and the anchor action of lifts") {
  std::mt19937 rng(113);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    const TotalSpace Se = total_space(A, Side::E);
    for (int trial = 0; trial < 10; ++trial) {
      Section X = random_section(A, rng);
      FiberForm mu = random_form(A, 1, rng);
      SpaceMultivector vX = vertical_lift(A, multivector_of(A, X));
      SpaceMultivector dX = complete_lift(A, multivector_of(A, X));
      // Cp4(a): v(X)(ι_E μ) = τ*⟨X,μ⟩
      CHECK(apply_field(vX, iota(A, mu)) == base_lift(pair_section_form(X, mu), Se));
      // Cp4(b): d_T(X)(ι_E μ) = ι_E(£_X μ)
      CHECK(apply_field(dX, iota(A, mu)) == iota(A, lie_derivative(A, X, mu)));
      // anchor action: d_T(X)(τ*f) = τ*(α(X)f)
      Polynomial f = random_poly(A.base_space(), rng);
      CHECK(apply_field(dX, base_lift(f, Se)) == base_lift(anchor_apply(A, X, f), Se));
      // linearity of the lift
      CHECK(fiber_degree_at_most(dX, 1));
    }
  }
}

TEST_CASE("Fp9: lift is a bracket homomorphism iff Lie") {
  std::mt19937 rng(127);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 8; ++trial) {
      Section X = random_section(A, rng, 1);
      Section Y = random_section(A, rng, 1);
      CHECK(complete_lift(A, multivector_of(A, bracket_sections(A, X, Y))) ==
            space_schouten(complete_lift(A, multivector_of(A, X)),
                           complete_lift(A, multivector_of(A, Y))));
      FiberMultivector u = random_multivector(A, 1, rng, 1);
      FiberMultivector v = random_multivector(A, 2, rng, 1);
      CHECK(complete_lift(A, schouten(A, u, v)) ==
            space_schouten(complete_lift(A, u), complete_lift(A, v)));
    }
  }
  // NONJAC: a concrete section pair violates Fp9.
  Algebroid nj = make_nonjac();
  Section e2 = Section::basis(nj, 2);
  Section e3 = Section::basis(nj, 3);
  CHECK_FALSE(complete_lift(nj, multivector_of(nj, bracket_sections(nj, e2, e3))) ==
              space_schouten(complete_lift(nj, multivector_of(nj, e2)),
                             complete_lift(nj, multivector_of(nj, e3))));
}

TEST_CASE("lifted form bracket: oracles and route agreement") {
  // TM2, P = x1·e1∧e2: [e*1, e*2] = e*1 (Koszul bracket  [dx1,dx2] = d{x1,x2}).
  Algebroid T = make_tm2();
  Polynomial x1 = var(T.base_space(), base_var(1));
  FiberMultivector P = basis_multivector(T, {1, 2}).scaled(x1);
  CHECK(lifted_form_bracket_fp14(T, P, basis_form(T, {1}), basis_form(T, {2})) ==
        basis_form(T, {1}));
  CHECK(lifted_form_bracket_via_lift(T, P, basis_form(T, {1}), basis_form(T, {2})) ==
        basis_form(T, {1}));

  // EX4: all ingredients vanish for P = e2∧e4.
  Algebroid A = make_ex4();
  CHECK(lifted_form_bracket_fp14(A, ex4_P(A), basis_form(A, {2}), basis_form(A, {4}))
            .is_zero());

  std::mt19937 rng(131);
  for (Algebroid B : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 6; ++trial) {
      FiberMultivector Q = random_multivector(B, 2, rng, 1);
      FiberForm mu = random_form(B, 1, rng, 1);
      FiberForm nu = random_form(B, 1, rng, 1);
      CHECK(lifted_form_bracket_fp14(B, Q, mu, nu) ==
            lifted_form_bracket_via_lift(B, Q, mu, nu));
      // zero bivector gives the zero bracket
      FiberMultivector Z(B.base_space(), B.rank(), 2);
      CHECK(lifted_form_bracket_fp14(B, Z, mu, nu).is_zero());
    }
  }

  // The induced anchor is α∘P̃ (Cp5's last clause).
  for (Algebroid B : {make_tm2(), make_sl2()}) {
    std::mt19937 rng2(137);
    FiberMultivector Q = random_multivector(B, 2, rng2, 1);
    Algebroid dual = dual_algebroid_from_lift(B, Q);
    for (int i = 1; i <= B.rank(); ++i)
      for (int a = 1; a <= B.base_dim(); ++a) {
        Section p_mu = section_of(B, interior_form(B, basis_form(B, {i}), Q));
        Polynomial expected(B.base_space());
        for (int l = 1; l <= B.rank(); ++l) expected += p_mu[l] * B.anchor_left(a, l);
        CHECK(dual.anchor_left(a, i) == expected);
      }
  }
}

TEST_CASE("relatedness") {
  Algebroid A = make_ex4();
  EndoTensor N = ex4_N(A);
  FiberMultivector P = ex4_P(A);
  SpaceMultivector lambda = to_linear_bivector(A);

  // Thm Cp9(a): Λ and Λ_N are Ñ*-related for the Nijenhuis N.
  CHECK(are_related(endo_dual_map(A, N), lambda, lambda_n_lie(A, N)).related);
  // Thm Cp10(a): Λ and d_T(P) are −P̃-related for Poisson P.
  CHECK(are_related(minus_p_tilde(A, P), lambda, complete_lift(A, P)).related);

  // inequality detection with a witness
  const TotalSpace Sd = total_space(A, Side::E_dual);
  SpaceMultivector tweaked = lambda;
  SpaceMultivector extra(Sd, 2);
  extra.add_term({1, 2}, Polynomial::constant(Sd.vars(), Rational(1)));
  tweaked = tweaked + extra;
  RelatednessReport r = are_related(identity_map(Sd), lambda, tweaked);
  CHECK_FALSE(r.related);
  CHECK(r.witness.find("dxi1") != std::string::npos);

  // Cp10(a) negative direction: SL2 with P = e2∧e3 is not related.
  Algebroid sl2 = make_sl2();
  FiberMultivector r23 = basis_multivector(sl2, {2, 3});
  CHECK_FALSE(are_related(minus_p_tilde(sl2, r23), to_linear_bivector(sl2),
                          complete_lift(sl2, r23))
                  .related);
}

TEST_CASE("compose") {
  Algebroid A = make_ex4();
  EndoTensor N = ex4_N(A);
  FiberMultivector P = ex4_P(A);
  FiberLinearMap mp = minus_p_tilde(A, P);
  // NP = PN* makes the diagram commute.
  CHECK(compose(mp, endo_map(A, N)) == compose(endo_dual_map(A, N), mp));

  const TotalSpace Sd = total_space(A, Side::E_dual);
  CHECK(compose(identity_map(Sd), endo_dual_map(A, N)) == endo_dual_map(A, N));
  CHECK(compose(endo_dual_map(A, N), identity_map(Sd)) == endo_dual_map(A, N));

  // composition of diagonal maps multiplies entrywise
  EndoTensor D1 = EndoTensor::zero(A), D2 = EndoTensor::zero(A);
  for (int i = 1; i <= 4; ++i) {
    D1.set(i, i, C(A, i));
    D2.set(i, i, C(A, 7 - i));
  }
  FiberLinearMap lhs = compose(endo_map(A, D1), endo_map(A, D2));
  for (int i = 1; i <= 4; ++i) CHECK(lhs.at(i, i) == C(A, i * (7 - i)));

  CHECK_THROWS_AS(compose(endo_map(A, N), endo_dual_map(A, N)), std::invalid_argument);
}
