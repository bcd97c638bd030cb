#pragma once

/// Finite-rank commutative algebras over Z/m, presented by structure
/// constants on a free module: e_i * e_j = sum_l c[i][j][l] e_l. Nothing here
/// assumes a unit; algebras that have one carry it as an explicit vector.
/// All axiom checks run on basis tuples, which suffices by multilinearity;
/// check_algebra_exhaustive is the optional element-level cross-check.

#include "twoalg/howell.hpp"
#include "twoalg/linear_map.hpp"
#include "twoalg/report.hpp"
#include "twoalg/zmod.hpp"

#include <optional>
#include <string>

namespace twoalg {

struct FiniteAlgebra {
    CoefficientRing coeffs;
    std::size_t rank = 0;
    std::vector<Coeff> mul;  // rank^3 structure constants, index (i, j, l)
    std::optional<Vec> unit;
    std::vector<std::string> labels;  // optional, size rank when present

    FiniteAlgebra() = default;
    FiniteAlgebra(CoefficientRing k, std::size_t d)
        : coeffs(k), rank(d), mul(d * d * d, 0) {}

    Coeff modulus() const { return coeffs.modulus; }

    Coeff& c(std::size_t i, std::size_t j, std::size_t l) {
        return mul[(i * rank + j) * rank + l];
    }
    Coeff c(std::size_t i, std::size_t j, std::size_t l) const {
        return mul[(i * rank + j) * rank + l];
    }

    /// e_i * e_j as a coefficient vector.
    Vec basis_product(std::size_t i, std::size_t j) const;
    /// Bilinear extension of the structure constants.
    Vec multiply(const Vec& x, const Vec& y) const;
    /// Multiplication-by-x as a linear map.
    LinearMap multiplication_by(const Vec& x) const;

    bool is_unital() const { return unit.has_value(); }

    bool operator==(const FiniteAlgebra&) const = default;

    /// Z/m itself: rank 1, e_0 * e_0 = e_0, unit e_0.
    static FiniteAlgebra ground(Coeff m);
    /// k[x]/(x^2): basis (1, x), unit (1, 0).
    static FiniteAlgebra dual_numbers(Coeff m);
    /// Free module of the given rank with the zero multiplication.
    static FiniteAlgebra zero_multiplication(Coeff m, std::size_t rank);
};

struct Element {
    const FiniteAlgebra* parent = nullptr;
    Vec coords;
};

Element make_element(const FiniteAlgebra& a, Vec coords);

/// Product of two elements of A. Parent mismatch is a domain error.
Element mul(const FiniteAlgebra& a, const Element& x, const Element& y);

/// Commutativity, associativity and (when a unit is present) unitality on all
/// basis tuples. Failures carry the offending basis indices.
Report check_algebra(const FiniteAlgebra& a);

/// Element-level cross-check of the same axioms, enumerating all m^rank
/// elements. Refuses when the element count exceeds cap.
Report check_algebra_exhaustive(const FiniteAlgebra& a, std::uint64_t cap = 4096);

/// Multiplicativity of f on basis pairs: f(e_i e_j) = f(e_i) f(e_j). With
/// unital set and units on both sides, also f(1_A) = 1_B.
Report check_morphism(const LinearMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b,
                      bool unital);

/// All m^rank coefficient vectors in lexicographic order (most significant
/// coordinate first). Refuses when the count exceeds cap.
std::vector<Vec> all_vectors(Coeff m, std::size_t rank, std::uint64_t cap);

/// Unique two-sided unit of the algebra if one exists.
std::optional<Vec> find_unit(const FiniteAlgebra& a);

}  // namespace twoalg
