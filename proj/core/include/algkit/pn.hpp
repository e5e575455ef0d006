// Top-level verifiers: Poisson tensors, classical/modified Yang-Baxter,
// Nijenhuis tensors (three routes), Poisson-Nijenhuis compatibility, the Lie
// bialgebroid derivation identity, and the diagram report.
#pragma once

#include "algkit/lifts.hpp"

namespace algkit {

// NP as a bivector: skew part of the matrix product N·P_full; condition (1)
// of the PN definition is exactly the skewness of that product.
FiberMultivector np_product(const Algebroid& A, const EndoTensor& N,
                            const FiberMultivector& P);

// pass iff [P,P]^Λ = 0; witness = the nonzero Schouten square.
CheckReport is_poisson_for(const Algebroid& A, const FiberMultivector& P);

// pass iff d_T^Λ([P,P]^Λ) = 0.
CheckReport modified_yb(const Algebroid& A, const FiberMultivector& P);

// pass iff the torsion vanishes; cross-checks ½[N,N]_FN = torsion and the
// Ñ*-relatedness of (Λ, Λ_N). Route disagreement is reported as an
// internal-consistency failure, never silently resolved.
CheckReport is_nijenhuis(const Algebroid& A, const EndoTensor& N);

// Rows: (i) P Poisson, (ii) N Nijenhuis, (iii) NP = PN*, (iv) condition 2,
// (v) condition 2' (informational), and an overall row requiring (i)-(iv).
std::vector<CheckReport> check_pn(const Algebroid& A, const FiberMultivector& P,
                                  const EndoTensor& N);

// Fp22/Fp23/Fp24 rows for the pair (Λ, d_T^Λ(P)).
std::vector<CheckReport> bialgebroid_suite(const Algebroid& A, const FiberMultivector& P);
// The rows above folded into one report.
CheckReport check_bialgebroid(const Algebroid& A, const FiberMultivector& P);

// ½[P,P](μ,ν,γ) − ⟨P̃([μ,ν]^{d_T P}) − [P_μ,P_ν]^Λ, γ⟩; identically zero.
Polynomial fp23_defect(const Algebroid& A, const FiberMultivector& P, const FiberForm& mu,
                       const FiberForm& nu, const FiberForm& gamma);

// Poisson property of all four corners, relatedness along the four arrows,
// commutativity of the square, the bottom node equality
// (d_T^Λ P)_N = d_T^Λ(NP), and the four bialgebroid pairings.
std::vector<CheckReport> diagram_report(const Algebroid& A, const FiberMultivector& P,
                                        const EndoTensor& N);

// Fp24 derivation identity for the pair (structure on E from `a_side`,
// structure on E* read off `dual_side`), on a generator set.
bool fp24_pair_holds(const Algebroid& a_side, const Algebroid& dual_side, std::string* witness);

}  // namespace algkit
