#pragma once

/// Crossed modules of commutative algebras: a boundary morphism
/// bd: C -> R with a commutative action of R on C satisfying
///   CM1:  bd(r > c) = r * bd(c)
///   CM2:  bd(c) > c' = c * c'   (the Peiffer identity)
/// A candidate satisfying everything except CM2 is a first-class value here
/// ("pre-crossed"); the interchange experiments need such specimens.

#include "twoalg/action.hpp"
#include "twoalg/algebra.hpp"
#include "twoalg/report.hpp"

namespace twoalg {

struct CrossedModule {
    FiniteAlgebra c;       // the top algebra, usually non-unital
    FiniteAlgebra r;       // the base algebra, unital
    LinearMap boundary;    // C -> R
    ActionTensor action;   // R acting on C

    Coeff modulus() const { return r.modulus(); }
    bool operator==(const CrossedModule&) const = default;
};

struct XModMorphism {
    CrossedModule source, target;
    LinearMap f1;  // C -> C'
    LinearMap f0;  // R -> R'

    bool operator==(const XModMorphism&) const = default;
};

enum class XModClass { invalid, precrossed, crossed };

/// Full axiom report: component validity, boundary multiplicativity, action
/// axioms, CM1 and CM2, each with basis witnesses.
Report check_crossed_module(const CrossedModule& x);

/// Crossed iff everything passes; pre-crossed iff only CM2 fails.
XModClass classify_crossed_module(const Report& rep);
XModClass classify_crossed_module(const CrossedModule& x);

/// Element-level cross-check of CM1 and CM2: the basis checks extend by
/// bilinearity, this mode re-verifies on all |R| x |C| and |C| x |C| pairs
/// under the cap.
Report check_crossed_module_exhaustive(const CrossedModule& x, std::uint64_t cap = 4096);

/// Both squares of a crossed module morphism: bd' f1 = f0 bd and
/// f1(r > c) = f0(r) > f1(c), plus f1, f0 being algebra morphisms (f0 unital).
Report check_xmod_morphism(const XModMorphism& f);

XModMorphism identity_xmod_morphism(const CrossedModule& x);
/// g after f.
XModMorphism compose(const XModMorphism& g, const XModMorphism& f);

/// The inclusion of the ideal generated by gens, with R acting by ring
/// multiplication. The ideal must be free as a Z/m-module (unit Howell
/// pivots); the ideal (2) in Z/4 is the classic non-representable case.
CrossedModule from_ideal(const FiniteAlgebra& r, const std::vector<Vec>& gens);

/// Zero boundary on a module (an algebra with zero multiplication).
CrossedModule from_module(const FiniteAlgebra& mod, const FiniteAlgebra& r,
                          const ActionTensor& act);

/// (C, M(C), mu) with the evaluation action; requires Ann(C) = 0 or C^2 = C.
CrossedModule from_multiplication(const FiniteAlgebra& c);

/// Whether the image of the boundary is an ideal of R (it always is for a
/// crossed module; computed honestly by Howell closure).
bool image_is_ideal(const CrossedModule& x);

}  // namespace twoalg
