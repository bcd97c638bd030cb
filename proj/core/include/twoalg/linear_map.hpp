#pragma once

/// Dense k-linear maps between free Z/m-modules. Column j holds the image of
/// the j-th domain basis vector, so apply() is the usual matrix-vector
/// product and compose(f, g) is "f after g".

#include "twoalg/zmod.hpp"

#include <cstddef>

namespace twoalg {

struct LinearMap {
    Coeff modulus = 2;
    std::size_t rows = 0;  // codomain rank
    std::size_t cols = 0;  // domain rank
    std::vector<Coeff> entries;  // row-major, reduced to [0, m)

    LinearMap() = default;
    LinearMap(Coeff m, std::size_t r, std::size_t c)
        : modulus(m), rows(r), cols(c), entries(r * c, 0) {}

    static LinearMap identity(Coeff m, std::size_t n);
    static LinearMap from_rows(Coeff m, std::size_t rows, std::size_t cols,
                               const std::vector<Coeff>& row_major);
    /// Map assembled from images of the domain basis (columns[j] = image of e_j).
    static LinearMap from_columns(Coeff m, std::size_t rows, const std::vector<Vec>& columns);

    Coeff& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    Vec apply(const Vec& v) const;
    Vec column(std::size_t j) const;
    bool is_zero() const;

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    bool operator==(const LinearMap&) const = default;
};

/// f after g (domain of f = codomain of g).
LinearMap compose(const LinearMap& f, const LinearMap& g);

/// [f | g] acting on the direct sum of the two domains.
LinearMap hstack(const LinearMap& f, const LinearMap& g);

/// f on top of g (same domain, stacked codomains).
LinearMap vstack(const LinearMap& f, const LinearMap& g);

/// Block diagonal map diag(f, g).
LinearMap block_diag(const LinearMap& f, const LinearMap& g);

}  // namespace twoalg
