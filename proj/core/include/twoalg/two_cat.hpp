#pragma once

/// 2-modules and strict commutative 2-algebras. A 2-module is a pair of free
/// Z/m-modules with source, target and identity-assigning maps satisfying
/// s e = t e = id; its composition is never stored because it is forced:
///     a o b = a + b - e(s(b))   for t(a) = s(b).
/// A 2-algebra puts unital commutative algebra structures on both levels,
/// makes s, t, e unital algebra morphisms, and demands the interchange law.
/// Interchange is checked algebraically on Ker s: writing every cell as
/// q + e(x), it reduces to q * q' = e(t(q)) * q' for kernel generators, with
/// an optional exhaustive cross-check over composable quadruples.

#include "twoalg/algebra.hpp"
#include "twoalg/howell.hpp"
#include "twoalg/report.hpp"

#include <cstdint>
#include <stdexcept>

namespace twoalg {

class ComposabilityError : public std::invalid_argument {
public:
    ComposabilityError(Vec target_of_a, Vec source_of_b)
        : std::invalid_argument("cells are not composable: t(a) = " +
                                vec_to_string(target_of_a) + " differs from s(b) = " +
                                vec_to_string(source_of_b)),
          t_of_a(std::move(target_of_a)),
          s_of_b(std::move(source_of_b)) {}

    Vec t_of_a, s_of_b;
};

struct TwoModule {
    Coeff modulus = 2;
    std::size_t d0 = 0, d1 = 0;
    LinearMap s, t;  // M1 -> M0
    LinearMap e;     // M0 -> M1
};

struct TwoAlgebra {
    FiniteAlgebra a0, a1;  // both unital
    LinearMap s, t;        // A1 -> A0
    LinearMap e;           // A0 -> A1

    Coeff modulus() const { return a0.modulus(); }
    TwoModule two_module() const { return TwoModule{modulus(), a0.rank, a1.rank, s, t, e}; }
    bool operator==(const TwoAlgebra&) const = default;
};

struct TwoAlgMorphism {
    TwoAlgebra source, target;
    LinearMap f1;  // A1 -> A1'
    LinearMap f0;  // A0 -> A0'

    bool operator==(const TwoAlgMorphism&) const = default;
};

/// Forced composition a o b = a + b - e(s(b)); throws ComposabilityError when
/// t(a) != s(b).
Vec compose_cells(const TwoModule& t, const Vec& a, const Vec& b);
Vec compose_cells(const TwoAlgebra& t, const Vec& a, const Vec& b);

/// Section laws on the basis, plus unit and associativity laws of the forced
/// composition over enumerated composable tuples (skipped above elem_cap).
Report check_two_module(const TwoModule& t, std::uint64_t elem_cap = 4096);

struct TwoAlgebraCheckOptions {
    bool exhaustive = false;       // also enumerate composable quadruples
    std::uint64_t elem_cap = 4096; // refuse enumeration above this many cells
};

Report check_two_algebra(const TwoAlgebra& a, TwoAlgebraCheckOptions opts = {});

/// The three commuting squares plus multiplicativity and unitality of both
/// levels; composition preservation is re-derived as the matrix identity
/// F1 e s = e' s' F1 and cross-checked on enumerated composable pairs.
Report check_two_alg_morphism(const TwoAlgMorphism& f);

TwoAlgMorphism identity_two_alg_morphism(const TwoAlgebra& a);
/// g after f.
TwoAlgMorphism compose(const TwoAlgMorphism& g, const TwoAlgMorphism& f);

/// (f1 * g1) o (f2 * g2) - (f1 o f2) * (g1 o g2); zero iff interchange holds
/// on this quadruple. Preconditions: t(f1) = s(f2) and t(g1) = s(g2).
Vec interchange_defect(const TwoAlgebra& a, const Vec& f1, const Vec& f2, const Vec& g1,
                       const Vec& g2);

/// Canonical generators of Ker s.
Submodule cell_kernel(const TwoAlgebra& a);

}  // namespace twoalg
