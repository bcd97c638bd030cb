#include "twoalg/algebra.hpp"

#include <stdexcept>

namespace twoalg {

Vec FiniteAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec v(rank);
    for (std::size_t l = 0; l < rank; ++l) v[l] = c(i, j, l);
    return v;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != rank || y.size() != rank)
        throw std::invalid_argument("FiniteAlgebra::multiply: coordinate length mismatch");
    Coeff m = modulus();
    Vec r(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (y[j] == 0) continue;
            Coeff xy = residue(x[i] * y[j], m);
            for (std::size_t l = 0; l < rank; ++l)
                r[l] = residue(r[l] + xy * c(i, j, l), m);
        }
    }
    return r;
}

LinearMap FiniteAlgebra::multiplication_by(const Vec& x) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < rank; ++j) cols.push_back(multiply(x, vec_unit(rank, j)));
    return LinearMap::from_columns(modulus(), rank, cols);
}

FiniteAlgebra FiniteAlgebra::ground(Coeff m) {
    FiniteAlgebra a(CoefficientRing(m), 1);
    a.c(0, 0, 0) = 1;
    a.unit = Vec{1};
    return a;
}

FiniteAlgebra FiniteAlgebra::dual_numbers(Coeff m) {
    FiniteAlgebra a(CoefficientRing(m), 2);
    a.c(0, 0, 0) = 1;  // 1*1 = 1
    a.c(0, 1, 1) = 1;  // 1*x = x
    a.c(1, 0, 1) = 1;  // x*1 = x
    // x*x = 0
    a.unit = Vec{1, 0};
    return a;
}

FiniteAlgebra FiniteAlgebra::zero_multiplication(Coeff m, std::size_t rank) {
    return FiniteAlgebra(CoefficientRing(m), rank);
}

Element make_element(const FiniteAlgebra& a, Vec coords) {
    if (coords.size() != a.rank)
        throw std::invalid_argument("make_element: coordinate length mismatch");
    for (auto& x : coords) x = residue(x, a.modulus());
    return Element{&a, std::move(coords)};
}

Element mul(const FiniteAlgebra& a, const Element& x, const Element& y) {
    auto belongs = [&](const Element& e) {
        return e.parent == &a || (e.parent != nullptr && *e.parent == a);
    };
    if (!belongs(x) || !belongs(y))
        throw std::domain_error("mul: element does not belong to the given algebra");
    return Element{&a, a.multiply(x.coords, y.coords)};
}

Report check_algebra(const FiniteAlgebra& a) {
    Report rep;
    rep.subject = "algebra";
    Coeff m = a.modulus();
    std::size_t d = a.rank;

    bool comm_ok = true;
    for (std::size_t i = 0; i < d && comm_ok; ++i)
        for (std::size_t j = i + 1; j < d && comm_ok; ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i)) {
                rep.add_fail("COMM", {i, j},
                             "e" + std::to_string(i) + "*e" + std::to_string(j) + " = " +
                                 vec_to_string(a.basis_product(i, j)) + " but e" +
                                 std::to_string(j) + "*e" + std::to_string(i) + " = " +
                                 vec_to_string(a.basis_product(j, i)));
                comm_ok = false;
            }
    if (comm_ok) rep.add_pass("COMM");

    bool assoc_ok = true;
    for (std::size_t i = 0; i < d && assoc_ok; ++i)
        for (std::size_t j = 0; j < d && assoc_ok; ++j)
            for (std::size_t q = 0; q < d && assoc_ok; ++q) {
                Vec lhs = a.multiply(a.basis_product(i, j), vec_unit(d, q));
                Vec rhs = a.multiply(vec_unit(d, i), a.basis_product(j, q));
                if (lhs != rhs) {
                    rep.add_fail("ASSOC", {i, j, q},
                                 "(ei*ej)*eq = " + vec_to_string(lhs) + " but ei*(ej*eq) = " +
                                     vec_to_string(rhs));
                    assoc_ok = false;
                }
            }
    if (assoc_ok) rep.add_pass("ASSOC");

    if (a.unit) {
        if (a.unit->size() != d) {
            rep.add_fail("UNIT", {}, "unit vector has wrong length");
        } else {
            bool unit_ok = true;
            for (std::size_t j = 0; j < d && unit_ok; ++j) {
                Vec p = a.multiply(*a.unit, vec_unit(d, j));
                if (p != vec_unit(d, j)) {
                    rep.add_fail("UNIT", {j},
                                 "1*e" + std::to_string(j) + " = " + vec_to_string(p));
                    unit_ok = false;
                }
            }
            if (unit_ok) rep.add_pass("UNIT");
        }
    }
    (void)m;
    return rep;
}

Report check_algebra_exhaustive(const FiniteAlgebra& a, std::uint64_t cap) {
    Report rep = check_algebra(a);
    rep.subject = "algebra(exhaustive)";
    std::vector<Vec> elems = all_vectors(a.modulus(), a.rank, cap);
    bool ok = true;
    for (std::size_t xi = 0; xi < elems.size() && ok; ++xi)
        for (std::size_t yi = xi; yi < elems.size() && ok; ++yi) {
            if (a.multiply(elems[xi], elems[yi]) != a.multiply(elems[yi], elems[xi])) {
                rep.add_fail("COMM_ELEM", {xi, yi}, "element-level commutativity failure");
                ok = false;
            }
            for (std::size_t zi = 0; zi < elems.size() && ok; ++zi) {
                Vec lhs = a.multiply(a.multiply(elems[xi], elems[yi]), elems[zi]);
                Vec rhs = a.multiply(elems[xi], a.multiply(elems[yi], elems[zi]));
                if (lhs != rhs) {
                    rep.add_fail("ASSOC_ELEM", {xi, yi, zi},
                                 "element-level associativity failure");
                    ok = false;
                }
            }
        }
    if (ok) rep.add_pass("ELEM");
    return rep;
}

Report check_morphism(const LinearMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b,
                      bool unital) {
    if (f.cols != a.rank || f.rows != b.rank || f.modulus != a.modulus() ||
        f.modulus != b.modulus())
        throw std::invalid_argument("check_morphism: shape or modulus mismatch");
    Report rep;
    rep.subject = "morphism";
    bool mul_ok = true;
    for (std::size_t i = 0; i < a.rank && mul_ok; ++i)
        for (std::size_t j = i; j < a.rank && mul_ok; ++j) {
            Vec lhs = f.apply(a.basis_product(i, j));
            Vec rhs = b.multiply(f.column(i), f.column(j));
            if (lhs != rhs) {
                rep.add_fail("MORPH", {i, j},
                             "f(ei*ej) = " + vec_to_string(lhs) + " but f(ei)*f(ej) = " +
                                 vec_to_string(rhs));
                mul_ok = false;
            }
        }
    if (mul_ok) rep.add_pass("MORPH");

    if (unital && a.unit && b.unit) {
        Vec img = f.apply(*a.unit);
        if (img != *b.unit)
            rep.add_fail("UNIT", {}, "f(1) = " + vec_to_string(img) + " but 1' = " +
                                         vec_to_string(*b.unit));
        else
            rep.add_pass("UNIT");
    }
    return rep;
}

std::vector<Vec> all_vectors(Coeff m, std::size_t rank, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        count *= static_cast<std::uint64_t>(m);
        if (count > cap)
            throw std::length_error("all_vectors: " + std::to_string(m) + "^" +
                                    std::to_string(rank) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Vec> out;
    out.reserve(count);
    Vec v(rank, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = rank;
        bool done = rank == 0;
        while (i > 0) {
            --i;
            if (++v[i] < m) break;
            v[i] = 0;
            if (i == 0) done = true;
        }
        if (done) return out;
    }
}

std::optional<Vec> find_unit(const FiniteAlgebra& a) {
    if (a.rank == 0) return Vec{};
    // 1*e_j = e_j for all j is a linear system in the unit's coordinates.
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < a.rank; ++i) {
        Vec col;
        for (std::size_t j = 0; j < a.rank; ++j) {
            Vec p = a.basis_product(i, j);
            col.insert(col.end(), p.begin(), p.end());
        }
        cols.push_back(std::move(col));
    }
    Vec target;
    for (std::size_t j = 0; j < a.rank; ++j) {
        Vec e = vec_unit(a.rank, j);
        target.insert(target.end(), e.begin(), e.end());
    }
    std::vector<Vec> rows;
    for (auto& c : cols) rows.push_back(std::move(c));
    auto coeffs = express_in_span(rows, target, a.modulus());
    if (!coeffs) return std::nullopt;
    return *coeffs;
}

}  // namespace twoalg
