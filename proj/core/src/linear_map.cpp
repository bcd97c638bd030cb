#include "twoalg/linear_map.hpp"

#include <stdexcept>

namespace twoalg {

LinearMap LinearMap::identity(Coeff m, std::size_t n) {
    LinearMap f(m, n, n);
    for (std::size_t i = 0; i < n; ++i) f.at(i, i) = 1;
    return f;
}

LinearMap LinearMap::from_rows(Coeff m, std::size_t rows, std::size_t cols,
                               const std::vector<Coeff>& row_major) {
    if (row_major.size() != rows * cols)
        throw std::invalid_argument("LinearMap::from_rows: entry count mismatch");
    LinearMap f(m, rows, cols);
    for (std::size_t k = 0; k < row_major.size(); ++k) f.entries[k] = residue(row_major[k], m);
    return f;
}

LinearMap LinearMap::from_columns(Coeff m, std::size_t rows, const std::vector<Vec>& columns) {
    LinearMap f(m, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("LinearMap::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) f.at(i, j) = residue(columns[j][i], m);
    }
    return f;
}

Vec LinearMap::apply(const Vec& v) const {
    if (v.size() != cols) throw std::invalid_argument("LinearMap::apply: vector length mismatch");
    Vec r(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        Coeff acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc = residue(acc + at(i, j) * v[j], modulus);
        r[i] = acc;
    }
    return r;
}

Vec LinearMap::column(std::size_t j) const {
    Vec c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

bool LinearMap::is_zero() const {
    for (Coeff x : entries)
        if (x != 0) return false;
    return true;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols || modulus != o.modulus)
        throw std::invalid_argument("LinearMap::operator+: shape or modulus mismatch");
    LinearMap f(modulus, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k)
        f.entries[k] = residue(entries[k] + o.entries[k], modulus);
    return f;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols || modulus != o.modulus)
        throw std::invalid_argument("LinearMap::operator-: shape or modulus mismatch");
    LinearMap f(modulus, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k)
        f.entries[k] = residue(entries[k] - o.entries[k], modulus);
    return f;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.cols != g.rows || f.modulus != g.modulus)
        throw std::invalid_argument("compose: domain of f must match codomain of g");
    LinearMap h(f.modulus, f.rows, g.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
            Coeff acc = 0;
            for (std::size_t k = 0; k < f.cols; ++k)
                acc = residue(acc + f.at(i, k) * g.at(k, j), f.modulus);
            h.at(i, j) = acc;
        }
    return h;
}

LinearMap hstack(const LinearMap& f, const LinearMap& g) {
    if (f.rows != g.rows || f.modulus != g.modulus)
        throw std::invalid_argument("hstack: codomain mismatch");
    LinearMap h(f.modulus, f.rows, f.cols + g.cols);
    for (std::size_t i = 0; i < f.rows; ++i) {
        for (std::size_t j = 0; j < f.cols; ++j) h.at(i, j) = f.at(i, j);
        for (std::size_t j = 0; j < g.cols; ++j) h.at(i, f.cols + j) = g.at(i, j);
    }
    return h;
}

LinearMap vstack(const LinearMap& f, const LinearMap& g) {
    if (f.cols != g.cols || f.modulus != g.modulus)
        throw std::invalid_argument("vstack: domain mismatch");
    LinearMap h(f.modulus, f.rows + g.rows, f.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) h.at(i, j) = f.at(i, j);
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) h.at(f.rows + i, j) = g.at(i, j);
    return h;
}

LinearMap block_diag(const LinearMap& f, const LinearMap& g) {
    if (f.modulus != g.modulus) throw std::invalid_argument("block_diag: modulus mismatch");
    LinearMap h(f.modulus, f.rows + g.rows, f.cols + g.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) h.at(i, j) = f.at(i, j);
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) h.at(f.rows + i, f.cols + j) = g.at(i, j);
    return h;
}

}  // namespace twoalg
