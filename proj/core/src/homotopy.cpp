#include "twoalg/homotopy.hpp"

#include <stdexcept>

namespace twoalg {

namespace {

void check_derivation_shapes(const Derivation& d) {
    if (d.f0.cols != d.source.r.rank || d.f0.rows != d.target.r.rank)
        throw std::invalid_argument("Derivation: f0 shape mismatch");
    if (d.map.cols != d.source.r.rank || d.map.rows != d.target.c.rank)
        throw std::invalid_argument("Derivation: map shape mismatch");
    if (d.map.modulus != d.source.modulus() || d.f0.modulus != d.source.modulus() ||
        d.source.modulus() != d.target.modulus())
        throw std::invalid_argument("Derivation: modulus mismatch");
}

}  // namespace

Report check_derivation(const Derivation& d) {
    check_derivation_shapes(d);
    Report rep;
    rep.subject = "derivation";
    const FiniteAlgebra& r = d.source.r;
    const CrossedModule& y = d.target;
    bool ok = true;
    for (std::size_t i = 0; i < r.rank && ok; ++i)
        for (std::size_t j = i; j < r.rank && ok; ++j) {
            Vec lhs = d.map.apply(r.basis_product(i, j));
            Vec rhs = y.action.act(d.f0.column(i), d.map.column(j));
            rhs = vec_add(rhs, y.action.act(d.f0.column(j), d.map.column(i)), y.modulus());
            rhs = vec_add(rhs, y.c.multiply(d.map.column(i), d.map.column(j)), y.modulus());
            if (lhs != rhs) {
                rep.add_fail("DERIV", {i, j},
                             "d(r r') = " + vec_to_string(lhs) +
                                 " but f0(r)>d(r') + f0(r')>d(r) + d(r)d(r') = " +
                                 vec_to_string(rhs));
                ok = false;
            }
        }
    if (ok) rep.add_pass("DERIV");

    // Unit compatibility: morphisms here preserve units, so the target
    // g0 = f0 + bd' d is unital exactly when d kills the unit. This is the
    // crossed-module shadow of requiring homotopy deltas to be unital
    // algebra morphisms: delta(1) = (d(1), f0(1)) is the unit iff d(1) = 0.
    if (r.unit) {
        Vec val = d.map.apply(*r.unit);
        if (vec_is_zero(val))
            rep.add_pass("UNIT");
        else
            rep.add_fail("UNIT", {}, "d(1) = " + vec_to_string(val) + " must vanish");
    }
    return rep;
}

XModHomotopy homotopy_target(const XModMorphism& f, const Derivation& d) {
    if (!(f.source == d.source) || !(f.target == d.target))
        throw std::invalid_argument("homotopy_target: morphism and derivation disagree on ends");
    if (f.f0 != d.f0)
        throw std::invalid_argument("homotopy_target: derivation base differs from f0");
    Report dr = check_derivation(d);
    if (!dr.ok())
        throw std::invalid_argument("homotopy_target: derivation law fails:\n" + dr.to_string());

    LinearMap g0 = f.f0 + compose(d.target.boundary, d.map);
    LinearMap g1 = f.f1 + compose(d.map, f.source.boundary);
    XModMorphism g{f.source, f.target, std::move(g1), std::move(g0)};
    Report gr = check_xmod_morphism(g);
    if (!gr.ok())
        throw std::logic_error(
            "homotopy_target: computed target is not a crossed module morphism:\n" +
            gr.to_string());
    return XModHomotopy{f, d, std::move(g)};
}

XModHomotopy add_derivations(const XModHomotopy& h, const XModHomotopy& h2) {
    if (!(h.g == h2.f))
        throw std::invalid_argument("add_derivations: h must end where h2 starts");
    Derivation sum{h.d.source, h.d.target, h.d.f0, h.d.map + h2.d.map};
    XModHomotopy out = homotopy_target(h.f, sum);
    if (!(out.g == h2.g))
        throw std::logic_error("add_derivations: composite target differs from u");
    return out;
}

Report check_two_alg_homotopy(const TwoAlgHomotopy& h) {
    const TwoAlgMorphism& f = h.f;
    const TwoAlgMorphism& g = h.g;
    if (!(f.source == g.source) || !(f.target == g.target))
        throw std::invalid_argument("check_two_alg_homotopy: F and G must share source/target");
    const TwoAlgebra& a = f.source;
    const TwoAlgebra& b = f.target;
    if (h.delta.cols != a.a0.rank || h.delta.rows != b.a1.rank ||
        h.delta.modulus != a.modulus())
        throw std::invalid_argument("check_two_alg_homotopy: delta shape mismatch");

    Report rep;
    rep.subject = "two_alg_homotopy";
    {
        Report rm = check_morphism(h.delta, a.a0, b.a1, /*unital=*/true);
        rm.subject = "delta";
        rep.merge(rm);
    }

    auto condition = [&rep](const char* axiom, const LinearMap& lhs, const LinearMap& rhs,
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
    condition("HTPY1", compose(b.s, h.delta), f.f0, "s' delta and F0");
    condition("HTPY2", compose(b.t, h.delta), g.f0, "t' delta and G0");

    // HTPY3 pointwise on the basis cells of A1, through the forced formula.
    bool nat = true;
    for (std::size_t j = 0; j < a.a1.rank && nat; ++j) {
        Vec cell = vec_unit(a.a1.rank, j);
        Vec lhs_left = f.f1.apply(cell);
        Vec lhs_right = h.delta.apply(a.t.apply(cell));
        Vec rhs_left = h.delta.apply(a.s.apply(cell));
        Vec rhs_right = g.f1.apply(cell);
        if (b.t.apply(lhs_left) != b.s.apply(lhs_right) ||
            b.t.apply(rhs_left) != b.s.apply(rhs_right)) {
            rep.add_fail("HTPY3", {j}, "naturality sides are not composable at basis cell " +
                                           std::to_string(j));
            nat = false;
            break;
        }
        Vec lhs = compose_cells(b, lhs_left, lhs_right);
        Vec rhs = compose_cells(b, rhs_left, rhs_right);
        if (lhs != rhs) {
            rep.add_fail("HTPY3", {j},
                         "F1(a) o' delta(t(a)) = " + vec_to_string(lhs) +
                             " but delta(s(a)) o' G1(a) = " + vec_to_string(rhs));
            nat = false;
        }
    }
    if (nat) rep.add_pass("HTPY3");
    return rep;
}

TwoAlgHomotopy identity_two_alg_homotopy(const TwoAlgMorphism& f) {
    return TwoAlgHomotopy{f, f, compose(f.target.e, f.f0)};
}

TwoAlgHomotopy star(const TwoAlgHomotopy& h, const TwoAlgHomotopy& h2) {
    if (!(h.g == h2.f))
        throw std::invalid_argument("star: h must end where h2 starts");
    const TwoAlgebra& b = h.f.target;
    LinearMap delta = (h.delta + h2.delta) - compose(b.e, compose(b.t, h.delta));
    return TwoAlgHomotopy{h.f, h2.g, std::move(delta)};
}

XModHomotopy gamma_htpy(const TwoAlgHomotopy& h) {
    const TwoAlgebra& a = h.f.source;
    const TwoAlgebra& b = h.f.target;
    Coeff m = a.modulus();

    XModMorphism f = gamma_mor(h.f);
    XModMorphism g = gamma_mor(h.g);

    Submodule k = cell_kernel(b);
    SpanSolver solver(k.rows, m, b.a1.rank);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.a0.rank; ++j) {
        Vec v = vec_sub(h.delta.column(j), b.e.apply(h.f.f0.column(j)), m);
        if (!vec_is_zero(b.s.apply(v)))
            throw std::logic_error("gamma_htpy: delta - e' F0 does not land in Ker s'");
        auto coords = solver.express(v);
        if (!coords) throw std::logic_error("gamma_htpy: value not expressible in Ker s' basis");
        cols.push_back(*coords);
    }
    LinearMap map = LinearMap::from_columns(m, k.rows.size(), cols);
    Derivation d{f.source, f.target, f.f0, std::move(map)};
    XModHomotopy out = homotopy_target(f, d);
    if (!(out.g == g))
        throw std::logic_error("gamma_htpy: transported target differs from gamma_mor(G)");
    return out;
}

TwoAlgHomotopy psi_htpy(const XModHomotopy& h) {
    TwoAlgMorphism f = psi_mor(h.f);
    TwoAlgMorphism g = psi_mor(h.g);
    // delta(x) = (d(x), f0(x)) into the semidirect basis of C' x R'.
    LinearMap delta = vstack(h.d.map, h.f.f0);
    return TwoAlgHomotopy{std::move(f), std::move(g), std::move(delta)};
}

}  // namespace twoalg
