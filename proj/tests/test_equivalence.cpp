#include "twoalg/equivalence.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/oracle.hpp"

#include <doctest.h>

using namespace twoalg;

namespace {

TwoAlgebra discrete(const FiniteAlgebra& a0) {
    return TwoAlgebra{a0, a0, LinearMap::identity(a0.modulus(), a0.rank),
                      LinearMap::identity(a0.modulus(), a0.rank),
                      LinearMap::identity(a0.modulus(), a0.rank)};
}

CrossedModule ideal_dual2() {
    return from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
}

}  // namespace

TEST_CASE("gamma") {
    SUBCASE("discrete 2-algebra has zero kernel") {
        CrossedModule x = gamma(discrete(FiniteAlgebra::ground(2)));
        CHECK(x.c.rank == 0);
        CHECK(x.r == FiniteAlgebra::ground(2));
        CHECK(check_crossed_module(x).ok());
    }
    SUBCASE("gamma of the multiplication 2-algebra recovers the multiplication crossed module") {
        TwoAlgebra a = multiplication_two_algebra(FiniteAlgebra::dual_numbers(2));
        CrossedModule x = gamma(a);
        CrossedModule direct = from_multiplication(FiniteAlgebra::dual_numbers(2));
        // kernel generators of (x, f) -> f are the C-block unit vectors, so
        // the comparison is coordinate-exact, not just up to isomorphism;
        // gamma does not re-attach the optional unit annotation on C
        CHECK(x.c.mul == direct.c.mul);
        CHECK(x.r == direct.r);
        CHECK(x.boundary == direct.boundary);
        CHECK(x.action.a == direct.action.a);
    }
    SUBCASE("gamma after psi recovers the input exactly") {
        CrossedModule x = ideal_dual2();
        CHECK(gamma(psi(x)) == x);
    }
}

TEST_CASE("psi") {
    SUBCASE("zero crossed module gives a discrete 2-algebra") {
        FiniteAlgebra r = FiniteAlgebra::dual_numbers(2);
        CrossedModule x = from_ideal(r, {});
        TwoAlgebra a = psi(x);
        CHECK(a.a1.rank == 2);
        CHECK(a.s == LinearMap::identity(2, 2));
        CHECK(a.t == LinearMap::identity(2, 2));
        CHECK(check_two_algebra(a).ok());
    }
    SUBCASE("ideal inclusion gives d0 = 2, d1 = 3 passing all checks") {
        TwoAlgebra a = psi(ideal_dual2());
        CHECK(a.a0.rank == 2);
        CHECK(a.a1.rank == 3);
        TwoAlgebraCheckOptions opts;
        opts.exhaustive = true;
        CHECK(check_two_algebra(a, opts).ok());
    }
    SUBCASE("the forced composition reproduces the displayed vertical composition") {
        CrossedModule x = ideal_dual2();
        TwoAlgebra a = psi(x);
        Coeff m = 2;
        for (const Vec& g : all_vectors(m, x.c.rank, 64))
            for (const Vec& c : all_vectors(m, x.r.rank, 64))
                for (const Vec& g2 : all_vectors(m, x.c.rank, 64)) {
                    // (g, c) o (g', bd(g) + c) = (g + g', c)
                    Vec cell1 = g;
                    cell1.insert(cell1.end(), c.begin(), c.end());
                    Vec c2 = vec_add(x.boundary.apply(g), c, m);
                    Vec cell2 = g2;
                    cell2.insert(cell2.end(), c2.begin(), c2.end());
                    Vec expect = vec_add(g, g2, m);
                    expect.insert(expect.end(), c.begin(), c.end());
                    CHECK(compose_cells(a, cell1, cell2) == expect);
                }
    }
}

TEST_CASE("functor action on morphisms") {
    CrossedModule x = ideal_dual2();
    SUBCASE("psi_mor and gamma_mor of the identity are identities") {
        TwoAlgMorphism big = psi_mor(identity_xmod_morphism(x));
        CHECK(big.f1 == LinearMap::identity(2, 3));
        CHECK(big.f0 == LinearMap::identity(2, 2));
        CHECK(check_two_alg_morphism(big).ok());
        XModMorphism back = gamma_mor(big);
        CHECK(back.f1 == LinearMap::identity(2, 1));
        CHECK(back.f0 == LinearMap::identity(2, 2));
        CHECK(check_xmod_morphism(back).ok());
    }
    SUBCASE("psi_mor of the quotient morphism passes") {
        FiniteAlgebra z2 = FiniteAlgebra::ground(2);
        FiniteAlgebra zero_c(CoefficientRing(2), 0);
        ActionTensor act(z2, zero_c);
        CrossedModule zero_over_z2{zero_c, z2, LinearMap(2, 1, 0), act};
        XModMorphism quotient{x, zero_over_z2, LinearMap(2, 0, 1),
                              LinearMap::from_rows(2, 1, 2, {1, 0})};
        REQUIRE(check_xmod_morphism(quotient).ok());
        TwoAlgMorphism big = psi_mor(quotient);
        CHECK(check_two_alg_morphism(big).ok());
        // round trip through gamma_mor recovers the original matrices
        XModMorphism back = gamma_mor(big);
        CHECK(back.f1 == quotient.f1);
        CHECK(back.f0 == quotient.f0);
    }
    SUBCASE("functors preserve composition") {
        FiniteAlgebra z2 = FiniteAlgebra::ground(2);
        FiniteAlgebra zero_c(CoefficientRing(2), 0);
        ActionTensor act(z2, zero_c);
        CrossedModule zero_over_z2{zero_c, z2, LinearMap(2, 1, 0), act};
        XModMorphism quotient{x, zero_over_z2, LinearMap(2, 0, 1),
                              LinearMap::from_rows(2, 1, 2, {1, 0})};
        XModMorphism id2 = identity_xmod_morphism(zero_over_z2);
        TwoAlgMorphism lhs = psi_mor(compose(id2, quotient));
        TwoAlgMorphism rhs = compose(psi_mor(id2), psi_mor(quotient));
        CHECK(lhs.f1 == rhs.f1);
        CHECK(lhs.f0 == rhs.f0);
        TwoAlgMorphism big_q = psi_mor(quotient);
        XModMorphism back = compose(gamma_mor(psi_mor(id2)), gamma_mor(big_q));
        CHECK(back.f1 == gamma_mor(compose(psi_mor(id2), big_q)).f1);
        CHECK(back.f0 == gamma_mor(compose(psi_mor(id2), big_q)).f0);
    }
}

TEST_CASE("phi_iso") {
    SUBCASE("discrete 2-algebra") {
        RoundTripWitness w = phi_iso(discrete(FiniteAlgebra::ground(2)));
        CHECK(w.ok());
    }
    SUBCASE("multiplication 2-algebra of Z2, checked on all four cells") {
        TwoAlgebra a = multiplication_two_algebra(FiniteAlgebra::ground(2));
        RoundTripWitness w = phi_iso(a);
        REQUIRE(w.ok());
        TwoAlgebra b = psi(gamma(a));
        for (const Vec& f : all_vectors(2, a.a1.rank, 16)) {
            Vec fwd = w.forward1.apply(f);
            CHECK(w.backward1.apply(fwd) == f);
            // phi is multiplicative cell by cell
            for (const Vec& g : all_vectors(2, a.a1.rank, 16))
                CHECK(w.forward1.apply(a.a1.multiply(f, g)) ==
                      b.a1.multiply(w.forward1.apply(f), w.forward1.apply(g)));
        }
    }
    SUBCASE("phi commutes with s, t, e") {
        TwoAlgebra a = psi(ideal_dual2());
        RoundTripWitness w = phi_iso(a);
        TwoAlgebra b = psi(gamma(a));
        CHECK(compose(b.s, w.forward1) == compose(w.forward0, a.s));
        CHECK(compose(b.t, w.forward1) == compose(w.forward0, a.t));
        CHECK(compose(b.e, w.forward0) == compose(w.forward1, a.e));
    }
}

TEST_CASE("roundtrip_xmod") {
    SUBCASE("zero crossed module") {
        CHECK(roundtrip_xmod(from_ideal(FiniteAlgebra::ground(2), {})).ok());
    }
    SUBCASE("ideal inclusion") {
        CHECK(roundtrip_xmod(ideal_dual2()).ok());
    }
    SUBCASE("multiplication crossed module of Z2") {
        CHECK(roundtrip_xmod(from_multiplication(FiniteAlgebra::ground(2))).ok());
    }
    SUBCASE("the recovered action tensor is coordinate-identical") {
        CrossedModule x = ideal_dual2();
        CrossedModule back = gamma(psi(x));
        CHECK(back.action == x.action);
        CHECK(back.boundary == x.boundary);
    }
}

TEST_CASE("gamma refuses a non-free kernel") {
    // A1 = Z4[x]/(x^2 - 2x) with s(a + bx) = a + 2b: the kernel is generated
    // by (2, 1), whose Howell form {(2,1),(0,2)} has no unit pivot, so no
    // structure-constant presentation of Ker s exists.
    FiniteAlgebra a0 = FiniteAlgebra::ground(4);
    FiniteAlgebra a1(CoefficientRing(4), 2);
    a1.c(0, 0, 0) = 1;  // 1*1 = 1
    a1.c(0, 1, 1) = 1;  // 1*x = x
    a1.c(1, 0, 1) = 1;
    a1.c(1, 1, 1) = 2;  // x*x = 2x
    a1.unit = Vec{1, 0};
    REQUIRE(check_algebra(a1).ok());
    LinearMap s = LinearMap::from_rows(4, 1, 2, {1, 2});
    LinearMap e = LinearMap::from_rows(4, 2, 1, {1, 0});
    REQUIRE(check_morphism(s, a1, a0, true).ok());
    TwoAlgebra a{a0, a1, s, s, e};
    CHECK(cell_kernel(a).rows == std::vector<Vec>{{2, 1}, {0, 2}});
    CHECK_THROWS_AS(gamma(a), std::domain_error);
}

TEST_CASE("peiffer holds in gamma images") {
    // bd(l) > l' = l * l' for kernel generators, the derived identity.
    for (const FiniteAlgebra& c : {FiniteAlgebra::ground(2), FiniteAlgebra::dual_numbers(2)}) {
        TwoAlgebra a = multiplication_two_algebra(c);
        CrossedModule x = gamma(a);
        for (std::size_t i = 0; i < x.c.rank; ++i)
            for (std::size_t j = 0; j < x.c.rank; ++j)
                CHECK(x.action.act(x.boundary.column(i), vec_unit(x.c.rank, j)) ==
                      x.c.basis_product(i, j));
    }
}

TEST_CASE("equivalence over composite moduli") {
    SUBCASE("round trips at m = 4 and m = 6") {
        for (Coeff m : {Coeff{4}, Coeff{6}}) {
            CrossedModule ideal = from_ideal(FiniteAlgebra::dual_numbers(m), {Vec{0, 1}});
            REQUIRE(check_crossed_module(ideal).ok());
            CHECK(roundtrip_xmod(ideal).ok());
            CHECK(phi_iso(psi(ideal)).ok());
            CrossedModule mult = from_multiplication(FiniteAlgebra::ground(m));
            CHECK(roundtrip_xmod(mult).ok());
        }
    }
    SUBCASE("multiplication 2-algebra over Z6, exhaustively") {
        TwoAlgebra a = multiplication_two_algebra(FiniteAlgebra::ground(6));
        TwoAlgebraCheckOptions opts;
        opts.exhaustive = true;
        CHECK(check_two_algebra(a, opts).ok());
    }
    SUBCASE("mini census over Z4 round trips") {
        FiniteAlgebra r = FiniteAlgebra::ground(4);
        FiniteAlgebra c = FiniteAlgebra::zero_multiplication(4, 1);
        XModCensus census = enumerate_crossed_modules(r, c, kDefaultCap);
        REQUIRE(!census.crossed.empty());
        for (const CrossedModule& x : census.crossed) CHECK(roundtrip_xmod(x).ok());
    }
}
