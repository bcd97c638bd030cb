// Writes the bundled corpus of structure files. Deterministic: running it
// twice produces byte-identical output, which the io tests rely on.

#include "twoalg/equivalence.hpp"
#include "twoalg/homotopy.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/oracle.hpp"
#include "twoalg/selftest.hpp"
#include "twoalg/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace twoalg;

namespace {

void emit(const std::filesystem::path& dir, const std::string& name, const std::string& bytes) {
    std::ofstream out(dir / name, std::ios::binary);
    out << bytes;
    std::cout << "wrote " << (dir / name).string() << "\n";
}

FiniteAlgebra product_ring_z2() {
    FiniteAlgebra a(CoefficientRing(2), 2);
    a.c(0, 0, 0) = 1;
    a.c(1, 1, 1) = 1;
    a.unit = Vec{1, 1};
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(dir);

    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    FiniteAlgebra z4 = FiniteAlgebra::ground(4);
    FiniteAlgebra z6 = FiniteAlgebra::ground(6);
    FiniteAlgebra dual2 = FiniteAlgebra::dual_numbers(2);
    dual2.labels = {"1", "x"};
    FiniteAlgebra triv1 = FiniteAlgebra::zero_multiplication(2, 1);

    emit(dir, "algebra_z2.json", serialize(z2));
    emit(dir, "algebra_z4.json", serialize(z4));
    emit(dir, "algebra_z6.json", serialize(z6));
    emit(dir, "algebra_dual2.json", serialize(dual2));
    emit(dir, "algebra_z2xz2.json", serialize(product_ring_z2()));
    emit(dir, "algebra_triv1_z2.json", serialize(triv1));

    // Deliberately non-commutative table: e0*e1 = e0 but e1*e0 = e1.
    {
        FiniteAlgebra bad(CoefficientRing(2), 2);
        bad.c(0, 1, 0) = 1;
        bad.c(1, 0, 1) = 1;
        emit(dir, "algebra_noncommutative.json", serialize(bad));
    }

    CrossedModule ideal_dual2 = from_ideal(dual2, {Vec{0, 1}});
    emit(dir, "xmod_ideal_dual2.json", serialize(ideal_dual2));

    FiniteAlgebra z2_plain = FiniteAlgebra::ground(2);
    ActionTensor id_act(z2_plain, triv1);
    id_act.at(0, 0, 0) = 1;
    CrossedModule zero_mod = from_module(triv1, z2_plain, id_act);
    emit(dir, "xmod_zero_module.json", serialize(zero_mod));

    emit(dir, "xmod_mult_z2.json", serialize(from_multiplication(z2)));
    emit(dir, "xmod_mult_dual2.json", serialize(from_multiplication(dual2)));

    // CM1 holds, CM2 fails: C = R = Z/2 with the full multiplication, zero
    // boundary, identity action.
    {
        ActionTensor act(z2, z2);
        act.at(0, 0, 0) = 1;
        CrossedModule precrossed{z2, z2, LinearMap(2, 1, 1), act};
        emit(dir, "xmod_precrossed_z2.json", serialize(precrossed));
    }

    for (const auto& [name, alg] : example_two_algebras())
        emit(dir, "two_alg_" + name + ".json", serialize(alg));

    emit(dir, "xmod_morphism_identity_ideal_dual2.json",
         serialize(identity_xmod_morphism(ideal_dual2)));

    // The quotient morphism from the ideal inclusion to the zero crossed
    // module over R/(x): f1 collapses the ideal, f0 is the projection 1->1,
    // x->0.
    {
        FiniteAlgebra zero_c(CoefficientRing(2), 0);
        ActionTensor act(z2_plain, zero_c);
        CrossedModule zero_over_z2{zero_c, z2_plain, LinearMap(2, 1, 0), act};
        LinearMap f1(2, 0, 1);
        LinearMap f0 = LinearMap::from_rows(2, 1, 2, {1, 0});
        XModMorphism quotient{ideal_dual2, zero_over_z2, f1, f0};
        emit(dir, "xmod_morphism_quotient_dual2.json", serialize(quotient));
        emit(dir, "two_alg_morphism_psi_quotient.json", serialize(psi_mor(quotient)));
    }

    // Derivations over the identity of the ideal inclusion: the zero one and
    // the nonzero one sending x to the generator.
    {
        XModMorphism id = identity_xmod_morphism(ideal_dual2);
        std::vector<Derivation> ds = enumerate_derivations(id, kDefaultCap);
        for (std::size_t i = 0; i < ds.size(); ++i)
            emit(dir, "derivation_ideal_dual2_" + std::to_string(i) + ".json",
                 serialize(DerivationDatum{id, ds[i].map}));

        for (const Derivation& d : ds)
            if (!d.map.is_zero()) {
                XModHomotopy h = homotopy_target(id, d);
                emit(dir, "two_alg_homotopy_psi_ideal_dual2.json", serialize(psi_htpy(h)));
                break;
            }
    }

    return 0;
}
