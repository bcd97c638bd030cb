#include "twoalg/oracle.hpp"

#include <limits>

namespace twoalg {

std::uint64_t candidate_count(Coeff m, std::size_t exponent) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 2;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (count > limit / static_cast<std::uint64_t>(m)) return limit;
        count *= static_cast<std::uint64_t>(m);
    }
    return count;
}

void require_within_cap(Coeff m, std::size_t exponent, std::uint64_t cap) {
    std::uint64_t count = candidate_count(m, exponent);
    if (count > cap) throw CapExceeded(count, cap);
}

std::uint64_t estimate_candidates(const EnumerationSpec& spec) {
    std::size_t c = spec.rank_c, r = spec.rank_r;
    switch (spec.what) {
        case EnumerationSpec::What::algebras:
            return candidate_count(spec.modulus, c * (c + 1) / 2 * c);
        case EnumerationSpec::What::actions:
            return candidate_count(spec.modulus, r * c * c);
        case EnumerationSpec::What::crossed_modules:
            return candidate_count(spec.modulus, r * c + r * c * c);
        case EnumerationSpec::What::derivations:
        case EnumerationSpec::What::two_alg_homotopies:
        case EnumerationSpec::What::linear_maps:
            return candidate_count(spec.modulus, r * c);
    }
    return 0;
}

void validate(const EnumerationSpec& spec) {
    std::uint64_t count = estimate_candidates(spec);
    if (count > spec.cap) throw CapExceeded(count, spec.cap);
}

namespace {

/// Lexicographic odometer over `slots` coefficients in [0, m).
struct Odometer {
    Vec digits;
    Coeff m;
    bool done;

    Odometer(std::size_t slots, Coeff m) : digits(slots, 0), m(m), done(false) {}

    bool next() {
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (++digits[i] < m) return true;
            digits[i] = 0;
        }
        done = true;
        return false;
    }
};

}  // namespace

std::vector<LinearMap> enumerate_linear_maps(Coeff m, std::size_t rows, std::size_t cols,
                                             std::uint64_t cap) {
    require_within_cap(m, rows * cols, cap);
    std::vector<LinearMap> out;
    Odometer od(rows * cols, m);
    do {
        out.push_back(LinearMap::from_rows(m, rows, cols, od.digits));
    } while (od.next());
    return out;
}

std::vector<FiniteAlgebra> enumerate_algebras(Coeff m, std::size_t rank, bool require_unit,
                                              std::uint64_t cap) {
    std::size_t free_params = rank * (rank + 1) / 2 * rank;
    require_within_cap(m, free_params, cap);
    std::vector<FiniteAlgebra> out;
    Odometer od(free_params, m);
    do {
        FiniteAlgebra a(CoefficientRing(m), rank);
        std::size_t slot = 0;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < rank; ++j)
                for (std::size_t l = 0; l < rank; ++l, ++slot) {
                    a.c(i, j, l) = od.digits[slot];
                    a.c(j, i, l) = od.digits[slot];
                }
        if (!check_algebra(a).ok()) continue;
        if (require_unit) {
            auto u = find_unit(a);
            if (!u) continue;
            a.unit = *u;
        }
        out.push_back(std::move(a));
    } while (od.next());
    return out;
}

std::vector<ActionTensor> enumerate_actions(const FiniteAlgebra& r, const FiniteAlgebra& c,
                                            std::uint64_t cap) {
    Coeff m = r.modulus();
    std::size_t slots = r.rank * c.rank * c.rank;
    require_within_cap(m, slots, cap);
    std::vector<ActionTensor> out;
    Odometer od(slots, m);
    do {
        ActionTensor act(r, c);
        act.a = od.digits;
        if (check_action(act, /*unital=*/true).ok()) out.push_back(std::move(act));
    } while (od.next());
    return out;
}

XModCensus enumerate_crossed_modules(const FiniteAlgebra& r, const FiniteAlgebra& c,
                                     std::uint64_t cap) {
    Coeff m = r.modulus();
    std::size_t bd_slots = r.rank * c.rank;
    std::size_t act_slots = r.rank * c.rank * c.rank;
    std::uint64_t combined = candidate_count(m, bd_slots + act_slots);
    if (combined > cap) throw CapExceeded(combined, cap);

    std::vector<ActionTensor> actions = enumerate_actions(r, c, cap);

    XModCensus census;
    Odometer od(bd_slots, m);
    do {
        LinearMap bd = LinearMap::from_rows(m, r.rank, c.rank, od.digits);
        if (!check_morphism(bd, c, r, /*unital=*/false).ok()) continue;
        for (const ActionTensor& act : actions) {
            CrossedModule x{c, r, bd, act};
            bool cm1 = true;
            for (std::size_t i = 0; i < r.rank && cm1; ++i)
                for (std::size_t j = 0; j < c.rank && cm1; ++j)
                    if (bd.apply(act.basis_act(i, j)) !=
                        r.multiply(vec_unit(r.rank, i), bd.column(j)))
                        cm1 = false;
            if (!cm1) continue;
            bool cm2 = true;
            for (std::size_t j = 0; j < c.rank && cm2; ++j)
                for (std::size_t j2 = 0; j2 < c.rank && cm2; ++j2)
                    if (act.act(bd.column(j), vec_unit(c.rank, j2)) != c.basis_product(j, j2))
                        cm2 = false;
            if (cm2)
                census.crossed.push_back(std::move(x));
            else
                census.precrossed_only.push_back(std::move(x));
        }
    } while (od.next());
    return census;
}

void for_each_xmod_morphism(const CrossedModule& x, const CrossedModule& y, std::uint64_t cap,
                            const std::function<void(const LinearMap&, const LinearMap&)>& sink) {
    Coeff m = x.modulus();
    require_within_cap(m, x.c.rank * y.c.rank + x.r.rank * y.r.rank, cap);

    std::vector<LinearMap> f1s, f0s;
    {
        Odometer od(y.c.rank * x.c.rank, m);
        do {
            LinearMap f1 = LinearMap::from_rows(m, y.c.rank, x.c.rank, od.digits);
            if (check_morphism(f1, x.c, y.c, /*unital=*/false).ok()) f1s.push_back(std::move(f1));
        } while (od.next());
    }
    {
        Odometer od(y.r.rank * x.r.rank, m);
        do {
            LinearMap f0 = LinearMap::from_rows(m, y.r.rank, x.r.rank, od.digits);
            if (check_morphism(f0, x.r, y.r, /*unital=*/true).ok()) f0s.push_back(std::move(f0));
        } while (od.next());
    }

    for (const LinearMap& f1 : f1s) {
        LinearMap bd_f1 = compose(y.boundary, f1);
        for (const LinearMap& f0 : f0s) {
            if (bd_f1 != compose(f0, x.boundary)) continue;
            bool eqv = true;
            for (std::size_t i = 0; i < x.r.rank && eqv; ++i)
                for (std::size_t j = 0; j < x.c.rank && eqv; ++j)
                    if (f1.apply(x.action.basis_act(i, j)) !=
                        y.action.act(f0.column(i), f1.column(j)))
                        eqv = false;
            if (eqv) sink(f1, f0);
        }
    }
}

std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& x,
                                                   const CrossedModule& y, std::uint64_t cap) {
    std::vector<XModMorphism> out;
    for_each_xmod_morphism(x, y, cap, [&](const LinearMap& f1, const LinearMap& f0) {
        out.push_back(XModMorphism{x, y, f1, f0});
    });
    return out;
}

std::vector<Derivation> enumerate_derivations(const XModMorphism& f, std::uint64_t cap) {
    Coeff m = f.source.modulus();
    std::size_t slots = f.target.c.rank * f.source.r.rank;
    require_within_cap(m, slots, cap);
    std::vector<Derivation> out;
    Derivation d{f.source, f.target, f.f0, LinearMap(m, f.target.c.rank, f.source.r.rank)};
    Odometer od(slots, m);
    do {
        d.map = LinearMap::from_rows(m, f.target.c.rank, f.source.r.rank, od.digits);
        if (check_derivation(d).ok()) out.push_back(d);
    } while (od.next());
    return out;
}

std::vector<TwoAlgHomotopy> enumerate_two_alg_homotopies(const TwoAlgMorphism& f,
                                                         const TwoAlgMorphism& g,
                                                         std::uint64_t cap) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw std::invalid_argument("enumerate_two_alg_homotopies: endpoint mismatch");
    Coeff m = f.source.modulus();
    std::size_t slots = f.target.a1.rank * f.source.a0.rank;
    require_within_cap(m, slots, cap);
    std::vector<TwoAlgHomotopy> out;
    TwoAlgHomotopy h{f, g, LinearMap(m, f.target.a1.rank, f.source.a0.rank)};
    Odometer od(slots, m);
    do {
        h.delta = LinearMap::from_rows(m, f.target.a1.rank, f.source.a0.rank, od.digits);
        if (check_two_alg_homotopy(h).ok()) out.push_back(h);
    } while (od.next());
    return out;
}

}  // namespace twoalg
