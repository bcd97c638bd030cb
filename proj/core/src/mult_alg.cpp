#include "twoalg/mult_alg.hpp"

#include <stdexcept>

namespace twoalg {

namespace {

/// Flatten a square map row-major.
Vec flatten(const LinearMap& f) {
    return f.entries;
}

LinearMap unflatten(Coeff m, std::size_t d, const Vec& v) {
    return LinearMap::from_rows(m, d, d, v);
}

void require_hypothesis(const FiniteAlgebra& c, const char* who) {
    Submodule ann = annihilator(c);
    Submodule sq = square_span(c);
    if (!ann.is_zero() && !sq.is_full())
        throw std::domain_error(std::string(who) +
                                ": hypothesis fails: Ann(C) != 0 (size " +
                                std::to_string(ann.size()) + ") and C^2 != C (span size " +
                                std::to_string(sq.size()) + ")");
}

}  // namespace

Submodule annihilator(const FiniteAlgebra& c) {
    // a * e_j stacked over all j is a linear map C -> C^rank.
    std::size_t d = c.rank;
    LinearMap f(c.modulus(), d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = c.basis_product(i, j);
            for (std::size_t l = 0; l < d; ++l) f.at(j * d + l, i) = p[l];
        }
    return kernel(f);
}

Submodule square_span(const FiniteAlgebra& c) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = i; j < c.rank; ++j) gens.push_back(c.basis_product(i, j));
    return Submodule::from_generators(c.modulus(), c.rank, std::move(gens));
}

MultiplierAlgebra multipliers(const FiniteAlgebra& c) {
    require_hypothesis(c, "multipliers");
    Coeff m = c.modulus();
    std::size_t d = c.rank;

    // lambda(e_i e_j) = lambda(e_i) e_j, linear in the d^2 entries of lambda.
    std::size_t n_unknowns = d * d;
    std::size_t n_constraints = d * d * d;
    LinearMap constraints(m, n_constraints, n_unknowns);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = c.basis_product(i, j);
            for (std::size_t l = 0; l < d; ++l, ++row) {
                // lambda(e_i e_j)_l = sum_q L[l][q] p_q
                for (std::size_t q = 0; q < d; ++q)
                    constraints.at(row, l * d + q) =
                        residue(constraints.at(row, l * d + q) + p[q], m);
                // (lambda(e_i) e_j)_l = sum_r L[r][i] c(r, j, l)
                for (std::size_t r = 0; r < d; ++r)
                    constraints.at(row, r * d + i) =
                        residue(constraints.at(row, r * d + i) - c.c(r, j, l), m);
            }
        }

    Submodule sol = kernel(constraints);
    if (!has_unit_pivots(sol.rows))
        throw std::domain_error(
            "multipliers: the multiplier module is not free over Z/m; no structure-constant "
            "presentation exists");

    MultiplierAlgebra mc;
    mc.base = c;
    for (const Vec& r : sol.rows) mc.basis_maps.push_back(unflatten(m, d, r));

    std::size_t k = mc.basis_maps.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (compose(mc.basis_maps[i], mc.basis_maps[j]) !=
                compose(mc.basis_maps[j], mc.basis_maps[i]))
                throw std::logic_error("multipliers: basis maps fail to commute");

    SpanSolver solver(sol.rows, m, d * d);
    FiniteAlgebra alg(CoefficientRing(m), k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vec prod = flatten(compose(mc.basis_maps[i], mc.basis_maps[j]));
            auto coords = solver.express(prod);
            if (!coords)
                throw std::logic_error("multipliers: composition left the solution span");
            for (std::size_t l = 0; l < k; ++l) alg.c(i, j, l) = (*coords)[l];
        }
    if (d > 0) {
        auto unit = solver.express(flatten(LinearMap::identity(m, d)));
        if (!unit) throw std::logic_error("multipliers: identity map is not in the span");
        alg.unit = *unit;
    } else {
        alg.unit = Vec{};
    }
    mc.as_algebra = std::move(alg);
    return mc;
}

std::vector<BimultiplierPair> bimultipliers(const FiniteAlgebra& c) {
    Coeff m = c.modulus();
    std::size_t d = c.rank;
    std::size_t n_unknowns = 2 * d * d;  // gamma entries then delta entries
    std::size_t n_constraints = 3 * d * d * d;
    LinearMap constraints(m, n_constraints, n_unknowns);
    std::size_t row = 0;
    auto g_idx = [d](std::size_t r, std::size_t cc) { return r * d + cc; };
    auto d_idx = [d](std::size_t r, std::size_t cc) { return d * d + r * d + cc; };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = c.basis_product(i, j);
            for (std::size_t l = 0; l < d; ++l, ++row) {
                // gamma(e_i e_j)_l - (gamma(e_i) e_j)_l = 0
                for (std::size_t q = 0; q < d; ++q)
                    constraints.at(row, g_idx(l, q)) =
                        residue(constraints.at(row, g_idx(l, q)) + p[q], m);
                for (std::size_t r = 0; r < d; ++r)
                    constraints.at(row, g_idx(r, i)) =
                        residue(constraints.at(row, g_idx(r, i)) - c.c(r, j, l), m);
            }
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec p = c.basis_product(i, j);
            for (std::size_t l = 0; l < d; ++l, ++row) {
                // delta(e_i e_j)_l - (e_i delta(e_j))_l = 0
                for (std::size_t q = 0; q < d; ++q)
                    constraints.at(row, d_idx(l, q)) =
                        residue(constraints.at(row, d_idx(l, q)) + p[q], m);
                for (std::size_t r = 0; r < d; ++r)
                    constraints.at(row, d_idx(r, j)) =
                        residue(constraints.at(row, d_idx(r, j)) - c.c(i, r, l), m);
            }
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l, ++row) {
                // (e_i gamma(e_j))_l - (delta(e_i) e_j)_l = 0
                for (std::size_t r = 0; r < d; ++r)
                    constraints.at(row, g_idx(r, j)) =
                        residue(constraints.at(row, g_idx(r, j)) + c.c(i, r, l), m);
                for (std::size_t r = 0; r < d; ++r)
                    constraints.at(row, d_idx(r, i)) =
                        residue(constraints.at(row, d_idx(r, i)) - c.c(r, j, l), m);
            }

    Submodule sol = kernel(constraints);
    std::vector<BimultiplierPair> out;
    for (const Vec& v : sol.rows) {
        Vec g(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d * d));
        Vec dd(v.begin() + static_cast<std::ptrdiff_t>(d * d), v.end());
        out.push_back(BimultiplierPair{unflatten(m, d, g), unflatten(m, d, dd)});
    }

    for (const auto& p : out)
        for (const auto& q : out) {
            Vec prod = flatten(compose(p.gamma, q.gamma));
            Vec prod_d = flatten(compose(q.delta, p.delta));
            prod.insert(prod.end(), prod_d.begin(), prod_d.end());
            if (!sol.contains(prod))
                throw std::logic_error("bimultipliers: product left the solution span");
        }
    return out;
}

LinearMap mu(const MultiplierAlgebra& mc) {
    const FiniteAlgebra& c = mc.base;
    Coeff m = c.modulus();
    std::vector<Vec> sol_rows;
    for (const auto& b : mc.basis_maps) sol_rows.push_back(flatten(b));
    SpanSolver solver(sol_rows, m, c.rank * c.rank);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < c.rank; ++i) {
        Vec target = flatten(c.multiplication_by(vec_unit(c.rank, i)));
        auto coords = solver.express(target);
        if (!coords)
            throw std::logic_error("mu: multiplication-by-c is not in the multiplier span");
        cols.push_back(*coords);
    }
    return LinearMap::from_columns(m, mc.basis_maps.size(), cols);
}

LinearMap mu(const FiniteAlgebra& c) {
    return mu(multipliers(c));
}

TwoAlgebra multiplication_two_algebra(const FiniteAlgebra& c) {
    MultiplierAlgebra mc = multipliers(c);
    Coeff m = c.modulus();
    std::size_t dc = c.rank;
    std::size_t dm = mc.basis_maps.size();

    FiniteAlgebra a1(CoefficientRing(m), dc + dm);
    for (std::size_t i = 0; i < dc; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            Vec p = c.basis_product(i, j);
            for (std::size_t l = 0; l < dc; ++l) a1.c(i, j, l) = p[l];
        }
    for (std::size_t i = 0; i < dc; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
            Vec v = mc.basis_maps[j].column(i);  // lambda_j(e_i)
            for (std::size_t l = 0; l < dc; ++l) {
                a1.c(i, dc + j, l) = v[l];
                a1.c(dc + j, i, l) = v[l];
            }
        }
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
            Vec p = mc.as_algebra.basis_product(i, j);
            for (std::size_t l = 0; l < dm; ++l) a1.c(dc + i, dc + j, dc + l) = p[l];
        }
    Vec unit1(dc + dm, 0);
    for (std::size_t l = 0; l < dm; ++l) unit1[dc + l] = (*mc.as_algebra.unit)[l];
    a1.unit = unit1;

    LinearMap s = hstack(LinearMap(m, dm, dc), LinearMap::identity(m, dm));
    LinearMap t = hstack(mu(mc), LinearMap::identity(m, dm));
    LinearMap e = vstack(LinearMap(m, dc, dm), LinearMap::identity(m, dm));

    return TwoAlgebra{mc.as_algebra, std::move(a1), std::move(s), std::move(t), std::move(e)};
}

}  // namespace twoalg
