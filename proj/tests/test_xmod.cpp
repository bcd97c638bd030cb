#include "twoalg/oracle.hpp"
#include "twoalg/selftest.hpp"
#include "twoalg/xmod.hpp"

#include <doctest.h>

using namespace twoalg;

namespace {

CrossedModule ideal_dual2() {
    return from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
}

/// C = R = Z/2 with the full multiplication, zero boundary, identity action:
/// CM1 holds, CM2 fails on the unit.
CrossedModule precrossed_z2() {
    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    ActionTensor act(z2, z2);
    act.at(0, 0, 0) = 1;
    return CrossedModule{z2, z2, LinearMap(2, 1, 1), act};
}

}  // namespace

TEST_CASE("check_action examples") {
    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    FiniteAlgebra triv = FiniteAlgebra::zero_multiplication(2, 1);

    SUBCASE("ring multiplication action of an ideal passes") {
        CrossedModule x = ideal_dual2();
        CHECK(check_action(x.action, true).ok());
    }
    SUBCASE("zero action fails unitality") {
        ActionTensor zero_act(z2, triv);
        Report rep = check_action(zero_act, true);
        CHECK(!rep.ok());
        CHECK(rep.first_failure()->axiom == "ACT3");
    }
    SUBCASE("exactly one unital action of Z2 on the trivial rank-1 module") {
        auto actions = enumerate_actions(z2, triv, kDefaultCap);
        REQUIRE(actions.size() == 1);
        CHECK(actions[0].at(0, 0, 0) == 1);
    }
}

TEST_CASE("check_crossed_module classifies the standard examples") {
    SUBCASE("ideal inclusion is crossed") {
        CrossedModule x = ideal_dual2();
        Report rep = check_crossed_module(x);
        CHECK(rep.ok());
        CHECK(classify_crossed_module(rep) == XModClass::crossed);
    }
    SUBCASE("unit under zero boundary violates Peiffer") {
        Report rep = check_crossed_module(precrossed_z2());
        CHECK(!rep.ok());
        CHECK(classify_crossed_module(rep) == XModClass::precrossed);
        const Report::Entry* fail = rep.first_failure();
        REQUIRE(fail != nullptr);
        CHECK(fail->axiom == "CM2");
        CHECK(fail->witness == std::vector<std::size_t>{0, 0});
    }
    SUBCASE("zero boundary on a module is crossed") {
        FiniteAlgebra z2 = FiniteAlgebra::ground(2);
        FiniteAlgebra triv = FiniteAlgebra::zero_multiplication(2, 1);
        ActionTensor act(z2, triv);
        act.at(0, 0, 0) = 1;
        CrossedModule x = from_module(triv, z2, act);
        CHECK(classify_crossed_module(x) == XModClass::crossed);
    }
}

TEST_CASE("from_ideal") {
    SUBCASE("nilpotent ideal of the dual numbers") {
        CrossedModule x = ideal_dual2();
        CHECK(x.c.rank == 1);
        CHECK(x.c.basis_product(0, 0) == Vec{0});  // x*x = 0
        CHECK(x.boundary.column(0) == Vec{0, 1});
        CHECK(check_crossed_module(x).ok());
    }
    SUBCASE("empty generating set gives the zero crossed module") {
        CrossedModule x = from_ideal(FiniteAlgebra::ground(4), {});
        CHECK(x.c.rank == 0);
        CHECK(check_crossed_module(x).ok());
    }
    SUBCASE("the ideal (2) of Z4 is not a free module") {
        // {0, 2} has 2 elements while a free rank-1 Z/4-module has 4; no
        // structure-constant presentation exists, so this is refused.
        CHECK_THROWS_AS(from_ideal(FiniteAlgebra::ground(4), {Vec{2}}),
                        std::domain_error);
    }
    SUBCASE("full ideal recovers R acting on itself") {
        FiniteAlgebra dual = FiniteAlgebra::dual_numbers(2);
        CrossedModule x = from_ideal(dual, {Vec{1, 0}});
        CHECK(x.c.rank == 2);
        CHECK(check_crossed_module(x).ok());
    }
}

TEST_CASE("from_module rejects non-trivial multiplication") {
    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    ActionTensor act(z2, z2);
    act.at(0, 0, 0) = 1;
    CHECK_THROWS_AS(from_module(z2, z2, act), std::domain_error);
}

TEST_CASE("unital actions of the dual numbers on the trivial module") {
    // x acts by some t with t^2 = 0 mod 2, so t = 0: exactly one action.
    FiniteAlgebra dual = FiniteAlgebra::dual_numbers(2);
    FiniteAlgebra triv = FiniteAlgebra::zero_multiplication(2, 1);
    auto actions = enumerate_actions(dual, triv, kDefaultCap);
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].at(0, 0, 0) == 1);
    CHECK(actions[0].at(1, 0, 0) == 0);
}

TEST_CASE("from_multiplication") {
    SUBCASE("Z2 gives an isomorphism") {
        CrossedModule x = from_multiplication(FiniteAlgebra::ground(2));
        CHECK(x.r.rank == 1);
        CHECK(x.boundary == LinearMap::identity(2, 1));
        CHECK(check_crossed_module(x).ok());
    }
    SUBCASE("trivial multiplication fails both hypotheses") {
        CHECK_THROWS_AS(from_multiplication(FiniteAlgebra::zero_multiplication(2, 1)),
                        std::domain_error);
    }
    SUBCASE("dual numbers have multiplier rank 2 and injective mu") {
        CrossedModule x = from_multiplication(FiniteAlgebra::dual_numbers(2));
        CHECK(x.r.rank == 2);
        CHECK(kernel(x.boundary).is_zero());
        CHECK(check_crossed_module(x).ok());
    }
}

TEST_CASE("check_xmod_morphism") {
    CrossedModule x = ideal_dual2();
    SUBCASE("identity passes") {
        CHECK(check_xmod_morphism(identity_xmod_morphism(x)).ok());
    }
    SUBCASE("collapsing the ideal against the identity on R breaks the square") {
        // f1 = 0 forces bd' f1 = 0, but f0 bd = inc is nonzero at the
        // generator.
        FiniteAlgebra zero_c(CoefficientRing(2), 0);
        FiniteAlgebra dual = FiniteAlgebra::dual_numbers(2);
        ActionTensor empty_act(dual, zero_c);
        CrossedModule zero_over_dual{zero_c, dual, LinearMap(2, 2, 0), empty_act};
        XModMorphism f{x, zero_over_dual, LinearMap(2, 0, 1), LinearMap::identity(2, 2)};
        Report rep = check_xmod_morphism(f);
        CHECK(!rep.ok());
        CHECK(rep.first_failure()->axiom == "BDRY");
        CHECK(rep.first_failure()->witness == std::vector<std::size_t>{0});
    }
    SUBCASE("composite of passing morphisms passes") {
        // Quotient onto the zero crossed module over R/(x), then identity.
        FiniteAlgebra z2 = FiniteAlgebra::ground(2);
        FiniteAlgebra zero_c(CoefficientRing(2), 0);
        ActionTensor act(z2, zero_c);
        CrossedModule zero_over_z2{zero_c, z2, LinearMap(2, 1, 0), act};
        XModMorphism quotient{x, zero_over_z2, LinearMap(2, 0, 1),
                              LinearMap::from_rows(2, 1, 2, {1, 0})};
        REQUIRE(check_xmod_morphism(quotient).ok());
        XModMorphism id2 = identity_xmod_morphism(zero_over_z2);
        CHECK(check_xmod_morphism(compose(id2, quotient)).ok());
        CHECK(check_xmod_morphism(compose(quotient, identity_xmod_morphism(x))).ok());
    }
}

TEST_CASE("image_is_ideal") {
    CHECK(image_is_ideal(from_multiplication(FiniteAlgebra::dual_numbers(2))));
    CHECK(image_is_ideal(ideal_dual2()));
    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    FiniteAlgebra triv = FiniteAlgebra::zero_multiplication(2, 1);
    ActionTensor act(z2, triv);
    act.at(0, 0, 0) = 1;
    CHECK(image_is_ideal(from_module(triv, z2, act)));
}

TEST_CASE("census properties over Z2") {
    // For every enumerated crossed module: the image of the boundary is an
    // ideal, and the image acts trivially on the kernel of the boundary.
    XModCensus census = census_z2_rank2();
    REQUIRE(!census.crossed.empty());
    for (const CrossedModule& x : census.crossed) {
        CHECK(image_is_ideal(x));
        Submodule ker_bd = kernel(x.boundary);
        for (std::size_t j = 0; j < x.c.rank; ++j)
            for (const Vec& q : ker_bd.rows)
                CHECK(vec_is_zero(x.action.act(x.boundary.column(j), q)));
    }
}

TEST_CASE("element-level crossed module cross-check") {
    CrossedModule x = from_ideal(FiniteAlgebra::dual_numbers(4), {Vec{0, 1}});
    CHECK(check_crossed_module_exhaustive(x).ok());
    Report rep = check_crossed_module_exhaustive(precrossed_z2());
    CHECK(!rep.ok());
    bool cm2_elem_failed = false;
    for (const auto& e : rep.entries)
        if (e.axiom == "CM2_ELEM" && !e.pass) cm2_elem_failed = true;
    CHECK(cm2_elem_failed);
}
