#pragma once

/// Commutative actions of an algebra R on an algebra C, stored as a dense
/// tensor a[i][j][l]: r_i acting on c_j = sum_l a[i][j][l] c_l. The three
/// axioms are the ones the semidirect product and the crossed module proofs
/// consume: associativity over R, multiplicativity over C, and unitality
/// whenever R has a unit.

#include "twoalg/algebra.hpp"
#include "twoalg/report.hpp"

namespace twoalg {

struct ActionTensor {
    FiniteAlgebra acting;  // R
    FiniteAlgebra acted;   // C
    std::vector<Coeff> a;  // rank(R) * rank(C) * rank(C), index (i, j, l)

    ActionTensor() = default;
    ActionTensor(FiniteAlgebra r, FiniteAlgebra c)
        : acting(std::move(r)), acted(std::move(c)),
          a(acting.rank * acted.rank * acted.rank, 0) {}

    Coeff modulus() const { return acting.modulus(); }

    Coeff& at(std::size_t i, std::size_t j, std::size_t l) {
        return a[(i * acted.rank + j) * acted.rank + l];
    }
    Coeff at(std::size_t i, std::size_t j, std::size_t l) const {
        return a[(i * acted.rank + j) * acted.rank + l];
    }

    /// r_i acting on c_j.
    Vec basis_act(std::size_t i, std::size_t j) const;
    /// Bilinear extension: r acting on c, both given by coordinates.
    Vec act(const Vec& r, const Vec& c) const;

    /// R acting on itself (or on an ideal presented in its own coordinates)
    /// by ring multiplication.
    static ActionTensor by_multiplication(const FiniteAlgebra& r);

    bool operator==(const ActionTensor&) const = default;
};

/// ACT1 (associativity over R), ACT2 (multiplicativity over C) and, with the
/// unital flag and a unital R, ACT3 (1 acting as the identity).
Report check_action(const ActionTensor& act, bool unital);

}  // namespace twoalg
