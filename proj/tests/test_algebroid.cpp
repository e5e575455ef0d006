#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace algkit;
using namespace testkit;

TEST_CASE("validate the worked structures") {
  Algebroid ex4 = make_ex4();
  ValidationReport v = validate(ex4);
  CHECK(v.all_pass);
  CHECK(v.is_pre_lie);

  // Same c but declared non-skew with distinct anchors: valid pseudo-Lie.
  Algebroid pseudo({"x1"}, 2, false);
  pseudo.set_c(1, 1, 2, C(pseudo, 1));
  pseudo.set_anchor_left(1, 1, C(pseudo, 1));
  pseudo.set_anchor_right(1, 1, Polynomial::variable(pseudo.base_space(), base_var(1)));
  ValidationReport vp = validate(pseudo);
  CHECK(vp.all_pass);
  CHECK_FALSE(vp.is_pre_lie);

  // Antisymmetry breach under a skew flag is reported.
  Algebroid broken({}, 3, true);
  broken.set_c(3, 1, 2, C(broken, 1));
  broken.set_c(3, 2, 1, C(broken, 1));
  ValidationReport vb = validate(broken);
  CHECK_FALSE(vb.all_pass);
  CHECK(vb.checks[0].witness.has_value());
}

TEST_CASE("bracket_sections on EX4: [e1,e2] = e3") {
  Algebroid A = make_ex4();
  Section out = bracket_sections(A, Section::basis(A, 1), Section::basis(A, 2));
  CHECK(out == Section::basis(A, 3));
  CHECK(bracket_sections(A, Section::basis(A, 2), Section::basis(A, 1)) ==
        -Section::basis(A, 3));
}

TEST_CASE("bracket_sections on TM2 matches the vector-field commutator") {
  Algebroid A = make_tm2();
  // [x2·e1, e2] = −e1  (classical [x2∂1, ∂2] = −∂1)
  Section X = Section::basis(A, 1).scaled(Polynomial::variable(A.base_space(), base_var(2)));
  Section out = bracket_sections(A, X, Section::basis(A, 2));
  CHECK(out == -Section::basis(A, 1));
}

TEST_CASE("bracket of a section with itself vanishes for skew structures") {
  std::mt19937 rng(3);
  for (Algebroid A : {make_ex4(), make_sl2(), make_tm2()}) {
    Section X = random_section(A, rng);
    CHECK(bracket_sections(A, X, X).is_zero());
  }
}

TEST_CASE("anchor_apply oracles") {
  Algebroid A = make_tm2();
  const VarSpace& B = A.base_space();
  Polynomial x1 = Polynomial::variable(B, base_var(1));
  Polynomial x2 = Polynomial::variable(B, base_var(2));
  // anchor(x1·e2)(x1·x2) = x1²
  Section X = Section::basis(A, 2).scaled(x1);
  CHECK(anchor_apply(A, X, x1 * x2) == x1 * x1);
  // identity anchor: anchor(e1)(x1²) = 2x1
  CHECK(anchor_apply(A, Section::basis(A, 1), x1 * x1) == C(A, 2) * x1);

  Algebroid E = make_ex4();
  CHECK(anchor_apply(E, Section::basis(E, 1), C(E, 5)).is_zero());

  // f outside the base space is rejected
  const VarSpace eSpace = VarSpace::on_E({"x1", "x2"}, 2);
  CHECK_THROWS_AS(anchor_apply(A, X, Polynomial::variable(eSpace, fiber_var(1))),
                  std::invalid_argument);
}

TEST_CASE("jacobiator: SL2 passes, NONJAC gives 2*e1") {
  Algebroid sl2 = make_sl2();
  CHECK(jacobiator(sl2, Section::basis(sl2, 1), Section::basis(sl2, 2), Section::basis(sl2, 3))
            .is_zero());

  Algebroid nj = make_nonjac();
  Section J = jacobiator(nj, Section::basis(nj, 1), Section::basis(nj, 2),
                         Section::basis(nj, 3));
  CHECK(J == Section::basis(nj, 1).scaled(C(nj, 2)));
  CHECK(J.to_string() == "2*e1");

  // equal arguments vanish
  std::mt19937 rng(5);
  Section X = random_section(nj, rng);
  Section Y = random_section(nj, rng);
  CHECK(jacobiator(nj, X, X, Y).is_zero());

  Algebroid pseudo({}, 2, false);
  CHECK_THROWS_AS(jacobiator(pseudo, Section::basis(pseudo, 1), Section::basis(pseudo, 1),
                             Section::basis(pseudo, 2)),
                  std::invalid_argument);
}

TEST_CASE("is_lie") {
  CHECK(is_lie(make_ex4()).is_lie);
  CHECK(is_lie(make_sl2()).is_lie);
  CHECK(is_lie(make_tm2()).is_lie);

  LieCheck c = is_lie(make_nonjac());
  CHECK_FALSE(c.is_lie);
  REQUIRE(c.witness_triple.has_value());
  CHECK((*c.witness_triple)[0] == 1);
  CHECK((*c.witness_triple)[1] == 2);
  CHECK((*c.witness_triple)[2] == 3);
  CHECK(c.witness_value->to_string() == "2*e1");
}

TEST_CASE("wedge") {
  Algebroid A = make_ex4();
  // e2 ∧ e4 = P
  CHECK(wedge(basis_multivector(A, {2}), basis_multivector(A, {4})) == ex4_P(A));
  CHECK(wedge(basis_multivector(A, {1}), basis_multivector(A, {1})).is_zero());

  Algebroid T = make_tm2();
  Polynomial x1 = Polynomial::variable(T.base_space(), base_var(1));
  FiberMultivector left = basis_multivector(T, {1}).scaled(x1);
  CHECK(wedge(left, basis_multivector(T, {2})) == basis_multivector(T, {1, 2}).scaled(x1));

  // degree beyond the rank collapses to zero
  CHECK(wedge(basis_multivector(T, {1, 2}), basis_multivector(T, {1})).is_zero());
}

TEST_CASE("wedge is associative and graded-commutative") {
  std::mt19937 rng(17);
  Algebroid A = make_ex4();
  for (int trial = 0; trial < 20; ++trial) {
    for (int du = 1; du <= 2; ++du)
      for (int dv = 1; dv <= 2; ++dv) {
        FiberMultivector u = random_multivector(A, du, rng, 1);
        FiberMultivector v = random_multivector(A, dv, rng, 1);
        FiberMultivector w = random_multivector(A, 1, rng, 1);
        CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
        FiberMultivector vu = wedge(v, u);
        if ((du * dv) % 2 == 1) vu = -vu;
        CHECK(wedge(u, v) == vu);
      }
  }
}

TEST_CASE("Fp1 Leibniz rule holds literally") {
  std::mt19937 rng(23);
  for (Algebroid A : {make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial f = random_poly(A.base_space(), rng);
      Polynomial g = random_poly(A.base_space(), rng);
      for (int i = 1; i <= A.rank(); ++i)
        for (int j = 1; j <= A.rank(); ++j) {
          Section X = Section::basis(A, i);
          Section Y = Section::basis(A, j);
          Section lhs = bracket_sections(A, X.scaled(f), Y.scaled(g));
          Section rhs = Y.scaled(f * anchor_apply(A, X, g)) -
                        X.scaled(g * anchor_apply(A, Y, f, AnchorSide::right)) +
                        bracket_sections(A, X, Y).scaled(f * g);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("skew antisymmetry for random sections") {
  std::mt19937 rng(29);
  for (Algebroid A : {make_ex4(), make_tm2(), make_sl2()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Section X = random_section(A, rng);
      Section Y = random_section(A, rng);
      CHECK(bracket_sections(A, X, Y) == -bracket_sections(A, Y, X));
    }
  }
}
