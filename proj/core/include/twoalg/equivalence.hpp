#pragma once

/// The equivalence between crossed modules and 2-algebras.
///
/// gamma sends a 2-algebra to (Ker s, A0, t|_K) with A0 acting on the kernel
/// by x > q = e(x) * q. psi sends a crossed module to the semidirect product:
/// A1 = C x R on the basis (C-basis, then R-basis) with
///     (g,r)(g',r') = (r > g' + r' > g + g'g, rr'),
///     s(g,r) = r,  t(g,r) = bd(g) + r,  e(r) = (0,r).
/// Round trips are certified by explicit witness morphisms: on the crossed
/// module side the identification g -> (g,0) is coordinate-exact, on the
/// 2-algebra side the isomorphism is phi(q + e(x)) = (q,x) with inverse
/// (q,x) -> q + e(x).

#include "twoalg/two_cat.hpp"
#include "twoalg/xmod.hpp"

namespace twoalg {

struct RoundTripWitness {
    enum class Direction { xmod_to_xmod, two_alg_to_two_alg };
    Direction direction = Direction::xmod_to_xmod;
    LinearMap forward1, forward0;    // level-1 and level-0 components
    LinearMap backward1, backward0;
    Report report;

    bool ok() const { return report.ok(); }
};

/// Ker s must be a free direct summand (unit Howell pivots), which holds for
/// every semidirect-product 2-algebra and over any field.
CrossedModule gamma(const TwoAlgebra& a);

/// The semidirect-product 2-algebra. Accepts pre-crossed input (the
/// construction is the same data; only the interchange guarantee is lost).
TwoAlgebra psi(const CrossedModule& x);

/// Restriction (F1|_Ker s, F0); asserts F1 maps Ker s into Ker s'.
XModMorphism gamma_mor(const TwoAlgMorphism& f);

/// Block-diagonal extension (f1 + f0, f0) on the semidirect bases.
TwoAlgMorphism psi_mor(const XModMorphism& f);

/// Witness for psi(gamma(a)) ~ a via phi.
RoundTripWitness phi_iso(const TwoAlgebra& a);

/// Witness for gamma(psi(x)) = x, coordinate-exact under g -> (g,0).
RoundTripWitness roundtrip_xmod(const CrossedModule& x);

}  // namespace twoalg
