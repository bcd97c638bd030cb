#include "twoalg/action.hpp"

#include <stdexcept>

namespace twoalg {

Vec ActionTensor::basis_act(std::size_t i, std::size_t j) const {
    Vec v(acted.rank);
    for (std::size_t l = 0; l < acted.rank; ++l) v[l] = at(i, j, l);
    return v;
}

Vec ActionTensor::act(const Vec& r, const Vec& c) const {
    if (r.size() != acting.rank || c.size() != acted.rank)
        throw std::invalid_argument("ActionTensor::act: coordinate length mismatch");
    Coeff m = modulus();
    Vec out(acted.rank, 0);
    for (std::size_t i = 0; i < acting.rank; ++i) {
        if (r[i] == 0) continue;
        for (std::size_t j = 0; j < acted.rank; ++j) {
            if (c[j] == 0) continue;
            Coeff rc = residue(r[i] * c[j], m);
            for (std::size_t l = 0; l < acted.rank; ++l)
                out[l] = residue(out[l] + rc * at(i, j, l), m);
        }
    }
    return out;
}

ActionTensor ActionTensor::by_multiplication(const FiniteAlgebra& r) {
    ActionTensor act(r, r);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j) {
            Vec p = r.basis_product(i, j);
            for (std::size_t l = 0; l < r.rank; ++l) act.at(i, j, l) = p[l];
        }
    return act;
}

Report check_action(const ActionTensor& act, bool unital) {
    const FiniteAlgebra& r = act.acting;
    const FiniteAlgebra& c = act.acted;
    if (r.modulus() != c.modulus())
        throw std::invalid_argument("check_action: modulus mismatch");
    if (act.a.size() != r.rank * c.rank * c.rank)
        throw std::invalid_argument("check_action: tensor shape mismatch");
    Report rep;
    rep.subject = "action";
    std::size_t dr = r.rank, dc = c.rank;

    // (r r') acting on c = r acting on (r' acting on c)
    bool a1 = true;
    for (std::size_t i = 0; i < dr && a1; ++i)
        for (std::size_t i2 = i; i2 < dr && a1; ++i2)
            for (std::size_t j = 0; j < dc && a1; ++j) {
                Vec lhs = act.act(r.basis_product(i, i2), vec_unit(dc, j));
                Vec rhs = act.act(vec_unit(dr, i), act.basis_act(i2, j));
                if (lhs != rhs) {
                    rep.add_fail("ACT1", {i, i2, j},
                                 "(ri*ri')>c = " + vec_to_string(lhs) + " but ri>(ri'>c) = " +
                                     vec_to_string(rhs));
                    a1 = false;
                }
            }
    if (a1) rep.add_pass("ACT1");

    // r acting on (c c') = (r acting on c) c'
    bool a2 = true;
    for (std::size_t i = 0; i < dr && a2; ++i)
        for (std::size_t j = 0; j < dc && a2; ++j)
            for (std::size_t j2 = 0; j2 < dc && a2; ++j2) {
                Vec lhs = act.act(vec_unit(dr, i), c.basis_product(j, j2));
                Vec rhs = c.multiply(act.basis_act(i, j), vec_unit(dc, j2));
                if (lhs != rhs) {
                    rep.add_fail("ACT2", {i, j, j2},
                                 "r>(c*c') = " + vec_to_string(lhs) + " but (r>c)*c' = " +
                                     vec_to_string(rhs));
                    a2 = false;
                }
            }
    if (a2) rep.add_pass("ACT2");

    if (unital && r.unit) {
        bool a3 = true;
        for (std::size_t j = 0; j < dc && a3; ++j) {
            Vec lhs = act.act(*r.unit, vec_unit(dc, j));
            if (lhs != vec_unit(dc, j)) {
                rep.add_fail("ACT3", {j}, "1>c" + std::to_string(j) + " = " + vec_to_string(lhs));
                a3 = false;
            }
        }
        if (a3) rep.add_pass("ACT3");
    }
    return rep;
}

}  // namespace twoalg
