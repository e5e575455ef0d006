// Cartan/Schouten calculus of a pre-Lie algebroid: pairings, interior
// products, the Schouten-Nijenhuis bracket on ∧E, the Koszul differential d^Λ
// and Lie derivative on ∧E*, the i_N derivation, deformed bracket and
// differential, the Frölicher-Nijenhuis bracket on Φ^1_1 and the Nijenhuis
// torsion.
#pragma once

#include "algkit/algebroid.hpp"

namespace algkit {

// ⟨X, μ⟩ for a section and a degree-1 form.
Polynomial pair_section_form(const Section& X, const FiberForm& mu);

// Full evaluation u(μ1,...,μk) by determinant expansion; degrees must match.
Polynomial pair(const Algebroid& A, const FiberMultivector& u,
                const std::vector<FiberForm>& forms);

// ω(X1,...,Xk), the dual evaluation.
Polynomial evaluate_form(const Algebroid& A, const FiberForm& omega,
                         const std::vector<Section>& args);

// i_μ u: contraction of a multivector in its first slot by a 1-form.
FiberMultivector interior_form(const Algebroid& A, const FiberForm& mu,
                               const FiberMultivector& u);

// i_X ω: contraction of a form in its first slot by a section.
FiberForm interior_section(const Algebroid& A, const Section& X, const FiberForm& omega);

// Schouten-Nijenhuis bracket on ∧E (requires skew A; degree |u|+|v|-1).
FiberMultivector schouten(const Algebroid& A, const FiberMultivector& u,
                          const FiberMultivector& v);

// Koszul differential on ∧E*; (d^Λ)² = 0 iff A is Lie.
FiberForm exterior_derivative(const Algebroid& A, const FiberForm& omega);

// d^Λ f of a base function, as a degree-1 form: (d f)_i = α(e_i)(f).
FiberForm exterior_derivative_function(const Algebroid& A, const Polynomial& f);

// £_X on forms via Cartan's formula, on multivectors via the Schouten bracket.
FiberForm lie_derivative(const Algebroid& A, const Section& X, const FiberForm& omega);
FiberMultivector lie_derivative(const Algebroid& A, const Section& X,
                                const FiberMultivector& u);

// i_N as a degree-0 derivation: matrix action on sections, transpose on
// 1-forms, extended by the Leibniz rule; zero on degree 0.
Section apply_iN(const EndoTensor& N, const Section& X);
FiberForm apply_iN(const EndoTensor& N, const FiberForm& omega);
FiberMultivector apply_iN(const EndoTensor& N, const FiberMultivector& u);

// [X,Y]_N = [NX,Y] + [X,NY] − N[X,Y].
Section deformed_bracket(const Algebroid& A, const EndoTensor& N, const Section& X,
                         const Section& Y);

// d_N = i_N ∘ d^Λ − d^Λ ∘ i_N.
FiberForm deformed_differential(const Algebroid& A, const EndoTensor& N, const FiberForm& omega);

// Section-valued skew 2-form, stored on increasing basis pairs.
class VectorTwoForm {
public:
  explicit VectorTwoForm(const Algebroid& A);

  int rank() const { return n_; }
  // Signed access for any i != j.
  Section at(const Algebroid& A, int i, int j) const;
  void add(int i, int j, const Section& value);

  bool is_zero() const;
  VectorTwoForm operator-(const VectorTwoForm& o) const;
  VectorTwoForm scaled(const Rational& c) const;

  // T(X,Y) by bilinear expansion over the basis values.
  Section evaluate(const Algebroid& A, const Section& X, const Section& Y) const;

  friend bool operator==(const VectorTwoForm& a, const VectorTwoForm& b) {
    return a.values_ == b.values_;
  }

  const std::map<std::pair<int, int>, Section>& entries() const { return values_; }
  std::string to_string() const;

private:
  int n_;
  std::map<std::pair<int, int>, Section> values_;  // keys i<j, zero values dropped
};

// Frölicher-Nijenhuis bracket of two Φ^1_1 tensors, term by term over the
// decompositions K = Σ μ^i ⊗ X_i.
VectorTwoForm fn_bracket_11(const Algebroid& A, const EndoTensor& K, const EndoTensor& L);

// T^Λ_N(X,Y) = N[X,Y]_N − [NX,NY], on all basis pairs.
VectorTwoForm nijenhuis_torsion(const Algebroid& A, const EndoTensor& N);

}  // namespace algkit
