#pragma once

/// Howell canonical forms for submodules of (Z/m)^n.
///
/// Over Z/m with m composite, row echelon forms are not canonical and row
/// reduction does not decide membership: the span of (2,1) over Z/4 contains
/// (0,2), which no multiple of the single echelon row reaches by leading-entry
/// reduction. The Howell form fixes this by closing the row set under
/// annihilator multiples. It is the unique generating set with
///   * strictly increasing pivot columns,
///   * each pivot a divisor of m,
///   * entries above a pivot reduced modulo that pivot,
///   * (m/pivot) times each row reducible to zero against the later rows.
/// Membership then reduces greedily: at each pivot column the entry must be a
/// multiple of the pivot. Two row sets span the same submodule iff their
/// Howell forms are identical, and |span| is the product of m/pivot.

#include "twoalg/linear_map.hpp"
#include "twoalg/zmod.hpp"

#include <cstdint>
#include <optional>

namespace twoalg {

/// Howell canonical form of the row span. Idempotent; zero rows dropped.
std::vector<Vec> howell_form(std::vector<Vec> rows, Coeff m, std::size_t n);

/// A submodule of (Z/m)^ambient held by its Howell-canonical generators.
struct Submodule {
    Coeff modulus = 2;
    std::size_t ambient = 0;
    std::vector<Vec> rows;  // Howell form

    static Submodule from_generators(Coeff m, std::size_t ambient, std::vector<Vec> gens);
    static Submodule zero(Coeff m, std::size_t ambient);
    static Submodule full(Coeff m, std::size_t ambient);

    bool contains(const Vec& v) const;
    bool is_zero() const { return rows.empty(); }
    bool is_full() const;
    /// Number of elements of the span (product of m/pivot over the rows).
    std::uint64_t size() const;
    /// All span elements, in lexicographic order of Howell coordinates.
    std::vector<Vec> elements(std::uint64_t cap) const;

    bool operator==(const Submodule&) const = default;
};

/// Canonical generators of {v : f(v) = 0}.
Submodule kernel(const LinearMap& f);

/// Coefficients x with sum x_i * rows_i = v, or nullopt when v is outside the
/// span. Coordinates are unique when all pivots are units.
std::optional<Vec> express_in_span(const std::vector<Vec>& rows, const Vec& v, Coeff m);

/// Factored form of a generating set, for answering many express() queries
/// against the same rows. Holds the Howell form of [rows | I]; reducing
/// (v | 0) against it yields coefficients in terms of the original rows.
class SpanSolver {
public:
    SpanSolver(std::vector<Vec> rows, Coeff m, std::size_t ambient);

    std::optional<Vec> express(const Vec& v) const;
    const std::vector<Vec>& generators() const { return rows_; }

private:
    Coeff modulus_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<Vec> howell_aug_;  // pivot rows within the structural block
};

/// True when every pivot of the Howell rows is 1, i.e. the rows are a free
/// basis of the span and express_in_span gives unique coordinates.
bool has_unit_pivots(const std::vector<Vec>& howell_rows);

}  // namespace twoalg
