#pragma once

/// Homotopies on both sides of the equivalence and the transports between
/// them. On the crossed module side a homotopy out of f = (f1, f0) is an
/// f0-derivation d: R -> C' obeying
///     d(r r') = f0(r) > d(r') + f0(r') > d(r) + d(r) d(r'),
/// with target morphism g0 = f0 + bd' d and g1 = f1 + d bd. On the 2-algebra
/// side a homotopy F -> G is a unital algebra morphism delta: A0 -> A1' with
/// s' delta = F0, t' delta = G0 and the naturality condition
///     F1(a) o' delta(t(a)) = delta(s(a)) o' G1(a)
/// read pointwise through the forced vertical composition. Composition of
/// homotopies is pointwise addition of derivations, respectively
///     (delta * delta')(x) = delta(x) + delta'(x) - e'(t' delta)(x).

#include "twoalg/equivalence.hpp"
#include "twoalg/two_cat.hpp"
#include "twoalg/xmod.hpp"

namespace twoalg {

struct Derivation {
    CrossedModule source, target;
    LinearMap f0;   // R -> R', the base of the derivation
    LinearMap map;  // R -> C'

    bool operator==(const Derivation&) const = default;
};

struct XModHomotopy {
    XModMorphism f;  // source morphism
    Derivation d;
    XModMorphism g;  // computed target morphism
};

struct TwoAlgHomotopy {
    TwoAlgMorphism f, g;
    LinearMap delta;  // A0 -> A1'

    bool operator==(const TwoAlgHomotopy&) const = default;
};

/// The derivation law on all basis pairs of R.
Report check_derivation(const Derivation& d);

/// Builds g from the displays and asserts it is a crossed module morphism;
/// a failure here would be a counterexample to the unconditional claim that
/// g always is one, and surfaces as an integrity error.
XModHomotopy homotopy_target(const XModMorphism& f, const Derivation& d);

/// (f0, d + d'): pointwise sum, valid when h ends where h2 starts.
XModHomotopy add_derivations(const XModHomotopy& h, const XModHomotopy& h2);

/// Multiplicativity and unitality of delta plus HTPY1-HTPY3.
Report check_two_alg_homotopy(const TwoAlgHomotopy& h);

/// delta(x) = e'(F0(x)): the identity homotopy F -> F.
TwoAlgHomotopy identity_two_alg_homotopy(const TwoAlgMorphism& f);

/// delta * delta', valid when h ends where h2 starts.
TwoAlgHomotopy star(const TwoAlgHomotopy& h, const TwoAlgHomotopy& h2);

/// Transport to the crossed module side: derivation x -> delta(x) - e'(F0(x))
/// in Ker s' coordinates, connecting gamma_mor(F) to gamma_mor(G).
XModHomotopy gamma_htpy(const TwoAlgHomotopy& h);

/// Transport to the 2-algebra side: delta(x) = (d(x), f0(x)) into C' x R',
/// connecting psi_mor(f) to psi_mor(g).
TwoAlgHomotopy psi_htpy(const XModHomotopy& h);

}  // namespace twoalg
