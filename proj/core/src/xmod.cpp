#include "twoalg/xmod.hpp"

#include "twoalg/mult_alg.hpp"

#include <stdexcept>

namespace twoalg {

namespace {

void check_shapes(const CrossedModule& x) {
    if (x.c.modulus() != x.r.modulus())
        throw std::invalid_argument("CrossedModule: C and R moduli differ");
    if (x.boundary.cols != x.c.rank || x.boundary.rows != x.r.rank ||
        x.boundary.modulus != x.modulus())
        throw std::invalid_argument("CrossedModule: boundary shape mismatch");
    if (x.action.acting != x.r || x.action.acted != x.c)
        throw std::invalid_argument("CrossedModule: action tensor does not match C and R");
}

}  // namespace

Report check_crossed_module(const CrossedModule& x) {
    check_shapes(x);
    Report rep;
    rep.subject = "xmod";

    {
        Report rc = check_algebra(x.c);
        rc.subject = "C";
        rep.merge(rc);
    }
    {
        Report rr = check_algebra(x.r);
        rr.subject = "R";
        rep.merge(rr);
        if (!x.r.unit) rep.add_fail("R.UNITAL", {}, "R carries no unit vector");
    }
    {
        Report rb = check_morphism(x.boundary, x.c, x.r, /*unital=*/false);
        rb.subject = "boundary";
        rep.merge(rb);
    }
    {
        Report ra = check_action(x.action, /*unital=*/true);
        rep.merge(ra);
    }

    std::size_t dc = x.c.rank, dr = x.r.rank;
    bool cm1 = true;
    for (std::size_t i = 0; i < dr && cm1; ++i)
        for (std::size_t j = 0; j < dc && cm1; ++j) {
            Vec lhs = x.boundary.apply(x.action.basis_act(i, j));
            Vec rhs = x.r.multiply(vec_unit(dr, i), x.boundary.column(j));
            if (lhs != rhs) {
                rep.add_fail("CM1", {i, j},
                             "bd(r>c) = " + vec_to_string(lhs) + " but r*bd(c) = " +
                                 vec_to_string(rhs));
                cm1 = false;
            }
        }
    if (cm1) rep.add_pass("CM1");

    bool cm2 = true;
    for (std::size_t j = 0; j < dc && cm2; ++j)
        for (std::size_t j2 = 0; j2 < dc && cm2; ++j2) {
            Vec lhs = x.action.act(x.boundary.column(j), vec_unit(dc, j2));
            Vec rhs = x.c.basis_product(j, j2);
            if (lhs != rhs) {
                rep.add_fail("CM2", {j, j2},
                             "bd(c)>c' = " + vec_to_string(lhs) + " but c*c' = " +
                                 vec_to_string(rhs));
                cm2 = false;
            }
        }
    if (cm2) rep.add_pass("CM2");

    return rep;
}

XModClass classify_crossed_module(const Report& rep) {
    if (rep.ok()) return XModClass::crossed;
    for (const auto& e : rep.entries)
        if (!e.pass && e.axiom != "CM2") return XModClass::invalid;
    return XModClass::precrossed;
}

XModClass classify_crossed_module(const CrossedModule& x) {
    return classify_crossed_module(check_crossed_module(x));
}

Report check_crossed_module_exhaustive(const CrossedModule& x, std::uint64_t cap) {
    Report rep = check_crossed_module(x);
    rep.subject = "xmod(exhaustive)";
    {
        Report rc = check_algebra_exhaustive(x.c, cap);
        rc.subject = "C";
        rep.merge(rc);
        Report rr = check_algebra_exhaustive(x.r, cap);
        rr.subject = "R";
        rep.merge(rr);
    }
    std::vector<Vec> rs = all_vectors(x.modulus(), x.r.rank, cap);
    std::vector<Vec> cs = all_vectors(x.modulus(), x.c.rank, cap);
    bool cm1 = true;
    for (std::size_t i = 0; i < rs.size() && cm1; ++i)
        for (std::size_t j = 0; j < cs.size() && cm1; ++j)
            if (x.boundary.apply(x.action.act(rs[i], cs[j])) !=
                x.r.multiply(rs[i], x.boundary.apply(cs[j]))) {
                rep.add_fail("CM1_ELEM", {i, j}, "element-level CM1 failure");
                cm1 = false;
            }
    if (cm1) rep.add_pass("CM1_ELEM");
    bool cm2 = true;
    for (std::size_t j = 0; j < cs.size() && cm2; ++j)
        for (std::size_t j2 = 0; j2 < cs.size() && cm2; ++j2)
            if (x.action.act(x.boundary.apply(cs[j]), cs[j2]) !=
                x.c.multiply(cs[j], cs[j2])) {
                rep.add_fail("CM2_ELEM", {j, j2}, "element-level CM2 failure");
                cm2 = false;
            }
    if (cm2) rep.add_pass("CM2_ELEM");
    return rep;
}

Report check_xmod_morphism(const XModMorphism& f) {
    const CrossedModule& x = f.source;
    const CrossedModule& y = f.target;
    check_shapes(x);
    check_shapes(y);
    if (x.modulus() != y.modulus())
        throw std::invalid_argument("check_xmod_morphism: modulus mismatch");
    if (f.f1.cols != x.c.rank || f.f1.rows != y.c.rank || f.f0.cols != x.r.rank ||
        f.f0.rows != y.r.rank)
        throw std::invalid_argument("check_xmod_morphism: component shape mismatch");

    Report rep;
    rep.subject = "xmod_morphism";
    {
        Report r1 = check_morphism(f.f1, x.c, y.c, /*unital=*/false);
        r1.subject = "f1";
        rep.merge(r1);
    }
    {
        Report r0 = check_morphism(f.f0, x.r, y.r, /*unital=*/true);
        r0.subject = "f0";
        rep.merge(r0);
    }

    // bd' f1 = f0 bd
    if (compose(y.boundary, f.f1) == compose(f.f0, x.boundary)) {
        rep.add_pass("BDRY");
    } else {
        LinearMap lhs = compose(y.boundary, f.f1);
        LinearMap rhs = compose(f.f0, x.boundary);
        std::size_t w = 0;
        for (std::size_t j = 0; j < x.c.rank; ++j)
            if (lhs.column(j) != rhs.column(j)) {
                w = j;
                break;
            }
        rep.add_fail("BDRY", {w},
                     "bd'(f1(c)) = " + vec_to_string(lhs.column(w)) + " but f0(bd(c)) = " +
                         vec_to_string(rhs.column(w)));
    }

    // f1(r > c) = f0(r) > f1(c)
    bool eqv = true;
    for (std::size_t i = 0; i < x.r.rank && eqv; ++i)
        for (std::size_t j = 0; j < x.c.rank && eqv; ++j) {
            Vec lhs = f.f1.apply(x.action.basis_act(i, j));
            Vec rhs = y.action.act(f.f0.column(i), f.f1.column(j));
            if (lhs != rhs) {
                rep.add_fail("EQVR", {i, j},
                             "f1(r>c) = " + vec_to_string(lhs) + " but f0(r)>f1(c) = " +
                                 vec_to_string(rhs));
                eqv = false;
            }
        }
    if (eqv) rep.add_pass("EQVR");

    return rep;
}

XModMorphism identity_xmod_morphism(const CrossedModule& x) {
    return XModMorphism{x, x, LinearMap::identity(x.modulus(), x.c.rank),
                        LinearMap::identity(x.modulus(), x.r.rank)};
}

XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose(XModMorphism): target/source mismatch");
    return XModMorphism{f.source, g.target, compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

CrossedModule from_ideal(const FiniteAlgebra& r, const std::vector<Vec>& gens) {
    if (!r.unit) throw std::domain_error("from_ideal: R must be unital");
    Coeff m = r.modulus();
    std::size_t d = r.rank;
    for (const Vec& g : gens)
        if (g.size() != d) throw std::invalid_argument("from_ideal: generator length mismatch");

    std::vector<Vec> span = howell_form(gens, m, d);
    for (;;) {
        std::vector<Vec> next = span;
        for (const Vec& v : span)
            for (std::size_t i = 0; i < d; ++i)
                next.push_back(r.multiply(vec_unit(d, i), v));
        next = howell_form(std::move(next), m, d);
        if (next == span) break;
        span = std::move(next);
    }

    if (!has_unit_pivots(span))
        throw std::domain_error(
            "from_ideal: the ideal is not free as a Z/m-module (non-unit Howell pivot); "
            "it cannot be presented by structure constants on a free module");

    std::size_t dc = span.size();
    SpanSolver solver(span, m, d);
    FiniteAlgebra c(CoefficientRing(m), dc);
    for (std::size_t i = 0; i < dc; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            auto coords = solver.express(r.multiply(span[i], span[j]));
            if (!coords) throw std::logic_error("from_ideal: ideal not closed under products");
            for (std::size_t l = 0; l < dc; ++l) c.c(i, j, l) = (*coords)[l];
        }

    LinearMap inc = LinearMap::from_columns(m, d, span);

    ActionTensor act(r, c);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            auto coords = solver.express(r.multiply(vec_unit(d, i), span[j]));
            if (!coords)
                throw std::logic_error("from_ideal: ideal not closed under R-multiplication");
            for (std::size_t l = 0; l < dc; ++l) act.at(i, j, l) = (*coords)[l];
        }

    return CrossedModule{std::move(c), r, std::move(inc), std::move(act)};
}

CrossedModule from_module(const FiniteAlgebra& mod, const FiniteAlgebra& r,
                          const ActionTensor& act) {
    for (Coeff x : mod.mul)
        if (x != 0)
            throw std::domain_error("from_module: M must carry the zero multiplication");
    if (act.acting != r || act.acted != mod)
        throw std::invalid_argument("from_module: action tensor does not match M and R");
    LinearMap zero(mod.modulus(), r.rank, mod.rank);
    return CrossedModule{mod, r, std::move(zero), act};
}

CrossedModule from_multiplication(const FiniteAlgebra& c) {
    MultiplierAlgebra mc = multipliers(c);
    LinearMap bd = mu(mc);

    ActionTensor act(mc.as_algebra, c);
    for (std::size_t i = 0; i < mc.basis_maps.size(); ++i)
        for (std::size_t j = 0; j < c.rank; ++j) {
            Vec v = mc.basis_maps[i].column(j);  // lambda_i applied to e_j
            for (std::size_t l = 0; l < c.rank; ++l) act.at(i, j, l) = v[l];
        }

    return CrossedModule{c, mc.as_algebra, std::move(bd), std::move(act)};
}

bool image_is_ideal(const CrossedModule& x) {
    check_shapes(x);
    Coeff m = x.modulus();
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < x.c.rank; ++j) gens.push_back(x.boundary.column(j));
    Submodule image = Submodule::from_generators(m, x.r.rank, std::move(gens));
    for (const Vec& v : image.rows)
        for (std::size_t i = 0; i < x.r.rank; ++i)
            if (!image.contains(x.r.multiply(vec_unit(x.r.rank, i), v))) return false;
    return true;
}

}  // namespace twoalg
