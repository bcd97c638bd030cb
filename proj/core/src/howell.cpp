#include "twoalg/howell.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoalg {

namespace {

std::size_t leading_col(const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return j;
    return v.size();
}

/// Echelon form with distinct increasing pivot columns, pivots dividing m and
/// entries above each pivot reduced modulo the pivot. One left-to-right pass:
/// combining two rows on a column only produces rows leading further right.
std::vector<Vec> echelonize(std::vector<Vec> work, Coeff m, std::size_t n) {
    std::vector<Vec> echelon;
    std::vector<std::vector<Vec>> bucket(n + 1);
    for (auto& r : work) {
        std::size_t j = leading_col(r);
        if (j < n) bucket[j].push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
        auto& rows = bucket[j];
        if (rows.empty()) continue;
        std::sort(rows.begin(), rows.end());
        Vec pivot_row = rows.front();
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const Vec& other = rows[k];
            Coeff a = pivot_row[j], b = other[j];
            auto [g, s, t] = xgcd(a, b);
            Vec combined = vec_add(vec_scale(s, pivot_row, m), vec_scale(t, other, m), m);
            Vec cleared = vec_sub(vec_scale(b / g, pivot_row, m), vec_scale(a / g, other, m), m);
            pivot_row = std::move(combined);
            std::size_t lc = leading_col(cleared);
            if (lc < n) bucket[lc].push_back(std::move(cleared));
        }
        Coeff u = stabilizing_unit(pivot_row[j], m);
        pivot_row = vec_scale(u, pivot_row, m);
        echelon.push_back(std::move(pivot_row));
    }
    // Reduce entries above each pivot modulo the pivot.
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        std::size_t j = leading_col(echelon[i]);
        Coeff d = echelon[i][j];
        for (std::size_t k = 0; k < i; ++k) {
            Coeff q = echelon[k][j] / d;
            if (q != 0) echelon[k] = vec_sub(echelon[k], vec_scale(q, echelon[i], m), m);
        }
    }
    return echelon;
}

bool reduces_to_zero(Vec v, const std::vector<Vec>& echelon, Coeff m) {
    for (const Vec& r : echelon) {
        std::size_t j = leading_col(r);
        if (v[j] == 0) continue;
        Coeff d = r[j];
        if (v[j] % d != 0) return false;
        v = vec_sub(v, vec_scale(v[j] / d, r, m), m);
    }
    return vec_is_zero(v);
}

}  // namespace

std::vector<Vec> howell_form(std::vector<Vec> rows, Coeff m, std::size_t n) {
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("howell_form: row length mismatch");
        for (auto& x : r) x = residue(x, m);
    }
    std::vector<Vec> echelon = echelonize(std::move(rows), m, n);
    for (int guard = 0; guard < 4096; ++guard) {
        std::vector<Vec> extras;
        for (const Vec& r : echelon) {
            Coeff d = r[leading_col(r)];
            if (d == 1) continue;  // m/d == m annihilates the row
            Vec extra = vec_scale(m / d, r, m);
            if (!vec_is_zero(extra) && !reduces_to_zero(extra, echelon, m))
                extras.push_back(std::move(extra));
        }
        if (extras.empty()) return echelon;
        for (auto& r : echelon) extras.push_back(std::move(r));
        echelon = echelonize(std::move(extras), m, n);
    }
    throw std::logic_error("howell_form: annihilator closure did not stabilize");
}

Submodule Submodule::from_generators(Coeff m, std::size_t ambient, std::vector<Vec> gens) {
    Submodule s;
    s.modulus = m;
    s.ambient = ambient;
    s.rows = howell_form(std::move(gens), m, ambient);
    return s;
}

Submodule Submodule::zero(Coeff m, std::size_t ambient) {
    return from_generators(m, ambient, {});
}

Submodule Submodule::full(Coeff m, std::size_t ambient) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < ambient; ++i) gens.push_back(vec_unit(ambient, i));
    return from_generators(m, ambient, std::move(gens));
}

bool Submodule::contains(const Vec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("Submodule::contains: length mismatch");
    Vec w(v);
    for (auto& x : w) x = residue(x, modulus);
    return reduces_to_zero(std::move(w), rows, modulus);
}

bool Submodule::is_full() const {
    if (rows.size() != ambient) return false;
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < ambient; ++j)
            if (rows[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

std::uint64_t Submodule::size() const {
    std::uint64_t total = 1;
    for (const Vec& r : rows) total *= static_cast<std::uint64_t>(modulus / r[leading_col(r)]);
    return total;
}

std::vector<Vec> Submodule::elements(std::uint64_t cap) const {
    if (size() > cap)
        throw std::length_error("Submodule::elements: span size " + std::to_string(size()) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<Coeff> orders;
    for (const Vec& r : rows) orders.push_back(modulus / r[leading_col(r)]);
    std::vector<Vec> out;
    Vec coeffs(rows.size(), 0);
    while (true) {
        Vec v = vec_zero(ambient);
        for (std::size_t i = 0; i < rows.size(); ++i) vec_add_scaled(v, coeffs[i], rows[i], modulus);
        out.push_back(std::move(v));
        std::size_t i = rows.size();
        while (i > 0) {
            --i;
            if (++coeffs[i] < orders[i]) break;
            coeffs[i] = 0;
            if (i == 0) return out;
        }
        if (rows.empty()) return out;
    }
}

Submodule kernel(const LinearMap& f) {
    // Row span of [f(e_i) | e_i]: Howell rows supported on the bookkeeping
    // block are exactly the canonical kernel generators.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < f.cols; ++i) {
        Vec r = f.column(i);
        Vec e = vec_unit(f.cols, i);
        r.insert(r.end(), e.begin(), e.end());
        rows.push_back(std::move(r));
    }
    std::vector<Vec> h = howell_form(std::move(rows), f.modulus, f.rows + f.cols);
    std::vector<Vec> gens;
    for (const Vec& r : h) {
        bool image_zero = true;
        for (std::size_t j = 0; j < f.rows; ++j)
            if (r[j] != 0) {
                image_zero = false;
                break;
            }
        if (image_zero) gens.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(f.rows), r.end());
    }
    return Submodule::from_generators(f.modulus, f.cols, std::move(gens));
}

SpanSolver::SpanSolver(std::vector<Vec> rows, Coeff m, std::size_t ambient)
    : modulus_(m), ambient_(ambient), rows_(std::move(rows)) {
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != ambient_)
            throw std::invalid_argument("SpanSolver: row length mismatch");
        Vec r = rows_[i];
        Vec e = vec_unit(rows_.size(), i);
        r.insert(r.end(), e.begin(), e.end());
        aug.push_back(std::move(r));
    }
    std::vector<Vec> h = howell_form(std::move(aug), modulus_, ambient_ + rows_.size());
    for (Vec& r : h)
        if (leading_col(r) < ambient_) howell_aug_.push_back(std::move(r));
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SpanSolver: vector length mismatch");
    Vec w = v;
    for (auto& x : w) x = residue(x, modulus_);
    w.resize(ambient_ + rows_.size(), 0);
    for (const Vec& r : howell_aug_) {
        std::size_t j = leading_col(r);
        if (w[j] == 0) continue;
        Coeff d = r[j];
        if (w[j] % d != 0) return std::nullopt;
        w = vec_sub(w, vec_scale(w[j] / d, r, modulus_), modulus_);
    }
    for (std::size_t j = 0; j < ambient_; ++j)
        if (w[j] != 0) return std::nullopt;
    Vec coeffs(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) coeffs[i] = residue(-w[ambient_ + i], modulus_);
    return coeffs;
}

std::optional<Vec> express_in_span(const std::vector<Vec>& rows, const Vec& v, Coeff m) {
    return SpanSolver(rows, m, v.size()).express(v);
}

bool has_unit_pivots(const std::vector<Vec>& howell_rows) {
    for (const Vec& r : howell_rows)
        if (r[leading_col(r)] != 1) return false;
    return true;
}

}  // namespace twoalg
