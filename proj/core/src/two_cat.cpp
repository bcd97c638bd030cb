#include "twoalg/two_cat.hpp"

#include <map>

namespace twoalg {

namespace {

void check_two_module_shapes(const TwoModule& t) {
    if (t.s.rows != t.d0 || t.s.cols != t.d1 || t.t.rows != t.d0 || t.t.cols != t.d1 ||
        t.e.rows != t.d1 || t.e.cols != t.d0)
        throw std::invalid_argument("TwoModule: map shapes inconsistent with ranks");
    if (t.s.modulus != t.modulus || t.t.modulus != t.modulus || t.e.modulus != t.modulus)
        throw std::invalid_argument("TwoModule: modulus mismatch");
}

void check_two_algebra_shapes(const TwoAlgebra& a) {
    if (a.a0.modulus() != a.a1.modulus())
        throw std::invalid_argument("TwoAlgebra: A0 and A1 moduli differ");
    check_two_module_shapes(a.two_module());
}

}  // namespace

Vec compose_cells(const TwoModule& t, const Vec& a, const Vec& b) {
    Vec ta = t.t.apply(a);
    Vec sb = t.s.apply(b);
    if (ta != sb) throw ComposabilityError(std::move(ta), std::move(sb));
    Coeff m = t.modulus;
    return vec_sub(vec_add(a, b, m), t.e.apply(sb), m);
}

Vec compose_cells(const TwoAlgebra& t, const Vec& a, const Vec& b) {
    return compose_cells(t.two_module(), a, b);
}

Report check_two_module(const TwoModule& t, std::uint64_t elem_cap) {
    check_two_module_shapes(t);
    Report rep;
    rep.subject = "two_module";

    LinearMap id0 = LinearMap::identity(t.modulus, t.d0);
    if (compose(t.s, t.e) == id0) {
        rep.add_pass("SRC");
    } else {
        std::size_t w = 0;
        for (std::size_t j = 0; j < t.d0; ++j)
            if (compose(t.s, t.e).column(j) != id0.column(j)) {
                w = j;
                break;
            }
        rep.add_fail("SRC", {w}, "s(e(x)) != x on basis column " + std::to_string(w));
    }
    if (compose(t.t, t.e) == id0) {
        rep.add_pass("TGT");
    } else {
        std::size_t w = 0;
        for (std::size_t j = 0; j < t.d0; ++j)
            if (compose(t.t, t.e).column(j) != id0.column(j)) {
                w = j;
                break;
            }
        rep.add_fail("TGT", {w}, "t(e(x)) != x on basis column " + std::to_string(w));
    }
    if (!rep.ok()) return rep;

    // Composition laws of the forced formula, on enumerated cells.
    std::uint64_t count = 1;
    bool enumerable = true;
    for (std::size_t i = 0; i < t.d1; ++i) {
        count *= static_cast<std::uint64_t>(t.modulus);
        if (count > elem_cap) {
            enumerable = false;
            break;
        }
    }
    if (!enumerable) {
        rep.add_pass("COMP");  // laws are linear identities; element check skipped above cap
        return rep;
    }

    std::vector<Vec> cells = all_vectors(t.modulus, t.d1, elem_cap);
    std::map<Vec, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < cells.size(); ++i) by_source[t.s.apply(cells[i])].push_back(i);

    bool comp_ok = true;
    std::vector<std::size_t> witness;
    std::string detail;
    std::uint64_t budget = 1 << 20;
    for (std::size_t ai = 0; ai < cells.size() && comp_ok && budget; ++ai) {
        const Vec& a = cells[ai];
        Vec sa = t.s.apply(a);
        Vec ta = t.t.apply(a);
        // unit laws
        if (compose_cells(t, t.e.apply(sa), a) != a) {
            comp_ok = false;
            witness = {ai};
            detail = "left unit law fails at cell " + vec_to_string(a);
            break;
        }
        if (compose_cells(t, a, t.e.apply(ta)) != a) {
            comp_ok = false;
            witness = {ai};
            detail = "right unit law fails at cell " + vec_to_string(a);
            break;
        }
        auto it = by_source.find(ta);
        if (it == by_source.end()) continue;
        for (std::size_t bi : it->second) {
            if (!budget) break;
            const Vec& b = cells[bi];
            Vec ab = compose_cells(t, a, b);
            if (t.s.apply(ab) != sa || t.t.apply(ab) != t.t.apply(b)) {
                comp_ok = false;
                witness = {ai, bi};
                detail = "source/target of composite wrong";
                break;
            }
            auto it2 = by_source.find(t.t.apply(b));
            if (it2 == by_source.end()) continue;
            for (std::size_t ci : it2->second) {
                if (!--budget) break;
                const Vec& c = cells[ci];
                if (compose_cells(t, ab, c) != compose_cells(t, a, compose_cells(t, b, c))) {
                    comp_ok = false;
                    witness = {ai, bi, ci};
                    detail = "associativity fails";
                    break;
                }
            }
            if (!comp_ok) break;
        }
    }
    if (comp_ok)
        rep.add_pass("COMP");
    else
        rep.add_fail("COMP", witness, detail);
    return rep;
}

Report check_two_algebra(const TwoAlgebra& a, TwoAlgebraCheckOptions opts) {
    check_two_algebra_shapes(a);
    Report rep;
    rep.subject = "two_algebra";

    rep.merge(check_two_module(a.two_module(), opts.elem_cap));

    {
        Report r0 = check_algebra(a.a0);
        r0.subject = "A0";
        rep.merge(r0);
        if (!a.a0.unit) rep.add_fail("A0.UNITAL", {}, "A0 carries no unit vector");
    }
    {
        Report r1 = check_algebra(a.a1);
        r1.subject = "A1";
        rep.merge(r1);
        if (!a.a1.unit) rep.add_fail("A1.UNITAL", {}, "A1 carries no unit vector");
    }
    {
        Report rs = check_morphism(a.s, a.a1, a.a0, /*unital=*/true);
        rs.subject = "s";
        rep.merge(rs);
        Report rt = check_morphism(a.t, a.a1, a.a0, /*unital=*/true);
        rt.subject = "t";
        rep.merge(rt);
        Report re = check_morphism(a.e, a.a0, a.a1, /*unital=*/true);
        re.subject = "e";
        rep.merge(re);
    }
    if (!rep.ok()) return rep;

    // Interchange via the kernel parameterization: with every cell written as
    // q + e(x), interchange is equivalent to q*q' = e(t(q))*q' on Ker s.
    Submodule k = cell_kernel(a);
    bool ichg = true;
    for (std::size_t i = 0; i < k.rows.size() && ichg; ++i)
        for (std::size_t j = 0; j < k.rows.size() && ichg; ++j) {
            Vec lhs = a.a1.multiply(k.rows[i], k.rows[j]);
            Vec rhs = a.a1.multiply(a.e.apply(a.t.apply(k.rows[i])), k.rows[j]);
            if (lhs != rhs) {
                rep.add_fail("ICHG", {i, j},
                             "q*q' = " + vec_to_string(lhs) + " but e(t(q))*q' = " +
                                 vec_to_string(rhs) + " on Ker s generators");
                ichg = false;
            }
        }
    if (ichg) rep.add_pass("ICHG");

    if (opts.exhaustive) {
        std::uint64_t count = 1;
        bool enumerable = true;
        for (std::size_t i = 0; i < a.a1.rank; ++i) {
            count *= static_cast<std::uint64_t>(a.modulus());
            if (count > opts.elem_cap) {
                enumerable = false;
                break;
            }
        }
        if (!enumerable)
            throw std::length_error("check_two_algebra: exhaustive mode exceeds cell cap");
        std::vector<Vec> cells = all_vectors(a.modulus(), a.a1.rank, opts.elem_cap);
        std::map<Vec, std::vector<std::size_t>> by_source;
        for (std::size_t i = 0; i < cells.size(); ++i)
            by_source[a.s.apply(cells[i])].push_back(i);
        bool ok = true;
        for (std::size_t i1 = 0; i1 < cells.size() && ok; ++i1) {
            auto itf = by_source.find(a.t.apply(cells[i1]));
            if (itf == by_source.end()) continue;
            for (std::size_t i2 : itf->second) {
                for (std::size_t j1 = 0; j1 < cells.size() && ok; ++j1) {
                    auto itg = by_source.find(a.t.apply(cells[j1]));
                    if (itg == by_source.end()) continue;
                    for (std::size_t j2 : itg->second) {
                        if (!vec_is_zero(interchange_defect(a, cells[i1], cells[i2], cells[j1],
                                                            cells[j2]))) {
                            rep.add_fail("ICHG_ELEM", {i1, i2, j1, j2},
                                         "interchange defect nonzero on quadruple");
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) break;
            }
        }
        if (ok) rep.add_pass("ICHG_ELEM");
    }
    return rep;
}

Report check_two_alg_morphism(const TwoAlgMorphism& f) {
    check_two_algebra_shapes(f.source);
    check_two_algebra_shapes(f.target);
    if (f.source.modulus() != f.target.modulus())
        throw std::invalid_argument("check_two_alg_morphism: modulus mismatch");
    if (f.f1.cols != f.source.a1.rank || f.f1.rows != f.target.a1.rank ||
        f.f0.cols != f.source.a0.rank || f.f0.rows != f.target.a0.rank)
        throw std::invalid_argument("check_two_alg_morphism: component shape mismatch");

    Report rep;
    rep.subject = "two_alg_morphism";
    {
        Report r1 = check_morphism(f.f1, f.source.a1, f.target.a1, /*unital=*/true);
        r1.subject = "F1";
        rep.merge(r1);
        Report r0 = check_morphism(f.f0, f.source.a0, f.target.a0, /*unital=*/true);
        r0.subject = "F0";
        rep.merge(r0);
    }

    auto square = [&rep](const char* axiom, const LinearMap& lhs, const LinearMap& rhs,
                         const char* what) {
        if (lhs == rhs) {
            rep.add_pass(axiom);
            return;
        }
        std::size_t w = 0;
        for (std::size_t j = 0; j < lhs.cols; ++j)
            if (lhs.column(j) != rhs.column(j)) {
                w = j;
                break;
            }
        rep.add_fail(axiom, {w},
                     std::string(what) + " disagree on basis column " + std::to_string(w) +
                         ": " + vec_to_string(lhs.column(w)) + " vs " +
                         vec_to_string(rhs.column(w)));
    };
    square("SRC", compose(f.target.s, f.f1), compose(f.f0, f.source.s), "s' F1 and F0 s");
    square("TGT", compose(f.target.t, f.f1), compose(f.f0, f.source.t), "t' F1 and F0 t");
    square("UNIT", compose(f.target.e, f.f0), compose(f.f1, f.source.e), "e' F0 and F1 e");

    // Composition preservation: with the forced formula it reduces to the
    // matrix identity F1 e s = e' s' F1, which the squares above imply; check
    // it directly and cross-check on enumerated composable pairs.
    bool comp = compose(compose(f.f1, f.source.e), f.source.s) ==
                compose(compose(f.target.e, f.target.s), f.f1);
    if (comp && rep.ok()) {
        std::uint64_t count = 1;
        bool enumerable = true;
        for (std::size_t i = 0; i < f.source.a1.rank; ++i) {
            count *= static_cast<std::uint64_t>(f.source.modulus());
            if (count > 256) {
                enumerable = false;
                break;
            }
        }
        if (enumerable) {
            std::vector<Vec> cells = all_vectors(f.source.modulus(), f.source.a1.rank, 256);
            for (std::size_t ai = 0; ai < cells.size() && comp; ++ai)
                for (std::size_t bi = 0; bi < cells.size() && comp; ++bi) {
                    if (f.source.t.apply(cells[ai]) != f.source.s.apply(cells[bi])) continue;
                    Vec lhs = f.f1.apply(compose_cells(f.source, cells[ai], cells[bi]));
                    Vec rhs = compose_cells(f.target, f.f1.apply(cells[ai]),
                                            f.f1.apply(cells[bi]));
                    if (lhs != rhs) comp = false;
                }
        }
    }
    if (comp)
        rep.add_pass("COMP");
    else
        rep.add_fail("COMP", {}, "composition not preserved");
    return rep;
}

TwoAlgMorphism identity_two_alg_morphism(const TwoAlgebra& a) {
    return TwoAlgMorphism{a, a, LinearMap::identity(a.modulus(), a.a1.rank),
                          LinearMap::identity(a.modulus(), a.a0.rank)};
}

TwoAlgMorphism compose(const TwoAlgMorphism& g, const TwoAlgMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose(TwoAlgMorphism): target/source mismatch");
    return TwoAlgMorphism{f.source, g.target, compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

Vec interchange_defect(const TwoAlgebra& a, const Vec& f1, const Vec& f2, const Vec& g1,
                       const Vec& g2) {
    Vec tf1 = a.t.apply(f1), sf2 = a.s.apply(f2);
    if (tf1 != sf2) throw ComposabilityError(std::move(tf1), std::move(sf2));
    Vec tg1 = a.t.apply(g1), sg2 = a.s.apply(g2);
    if (tg1 != sg2) throw ComposabilityError(std::move(tg1), std::move(sg2));
    Vec lhs = compose_cells(a, a.a1.multiply(f1, g1), a.a1.multiply(f2, g2));
    Vec rhs = a.a1.multiply(compose_cells(a, f1, f2), compose_cells(a, g1, g2));
    return vec_sub(lhs, rhs, a.modulus());
}

Submodule cell_kernel(const TwoAlgebra& a) {
    return kernel(a.s);
}

}  // namespace twoalg
