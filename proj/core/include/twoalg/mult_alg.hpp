#pragma once

/// Multipliers and bimultipliers of a finite algebra C. A multiplier is a
/// linear map lambda: C -> C with lambda(c c') = lambda(c) c'; under the
/// standing hypothesis Ann(C) = 0 or C^2 = C they commute pairwise and form
/// the commutative unital algebra M(C) under composition, the replacement for
/// an automorphism group in this setting. The multiplication 2-algebra has
/// M(C) as 1-cells and the semidirect product C x M(C) as 2-cells.

#include "twoalg/algebra.hpp"
#include "twoalg/howell.hpp"
#include "twoalg/linear_map.hpp"
#include "twoalg/two_cat.hpp"

namespace twoalg {

struct BimultiplierPair {
    LinearMap gamma, delta;

    bool operator==(const BimultiplierPair&) const = default;
};

struct MultiplierAlgebra {
    FiniteAlgebra base;                  // C
    std::vector<LinearMap> basis_maps;   // a free Z/m-basis of M(C)
    FiniteAlgebra as_algebra;            // composition in that basis; unit = identity map
};

/// Howell form of {a : a * e_j = 0 for all j}.
Submodule annihilator(const FiniteAlgebra& c);

/// Howell span of all basis products; is_full() decides C^2 = C.
Submodule square_span(const FiniteAlgebra& c);

/// Solves the multiplier equations. Requires Ann(C) = 0 or C^2 = C, and the
/// solution space to be free (unit Howell pivots). Commutation of the basis
/// maps is a consequence of the hypothesis and is asserted, not imposed.
MultiplierAlgebra multipliers(const FiniteAlgebra& c);

/// Basis of the solution space of the three bimultiplier equations. The
/// product (g, d)(g', d') = (g g', d' d) is asserted closed on the span.
std::vector<BimultiplierPair> bimultipliers(const FiniteAlgebra& c);

/// mu: C -> M(C), c -> multiplication-by-c, in multiplier-basis coordinates.
LinearMap mu(const MultiplierAlgebra& mc);
LinearMap mu(const FiniteAlgebra& c);

/// The 2-algebra with A0 = M(C), A1 = C x M(C),
///   (x,f)(x',f') = (f(x') + f'(x) + x'x, f'f),
///   s(x,f) = f,  t(x,f) = mu(x) + f,  e(f) = (0,f).
TwoAlgebra multiplication_two_algebra(const FiniteAlgebra& c);

}  // namespace twoalg
