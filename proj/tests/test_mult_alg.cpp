#include "twoalg/equivalence.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/oracle.hpp"

#include <doctest.h>

using namespace twoalg;

TEST_CASE("annihilator") {
    CHECK(annihilator(FiniteAlgebra::ground(2)).is_zero());
    CHECK(annihilator(FiniteAlgebra::dual_numbers(2)).is_zero());
    CHECK(annihilator(FiniteAlgebra::zero_multiplication(2, 1)).is_full());
}

TEST_CASE("square_span") {
    CHECK(square_span(FiniteAlgebra::ground(2)).is_full());
    CHECK(square_span(FiniteAlgebra::ground(4)).is_full());
    CHECK(square_span(FiniteAlgebra::zero_multiplication(2, 1)).is_zero());
    // (x)^2 = 0 inside the ideal itself
    FiniteAlgebra ideal_x(CoefficientRing(2), 1);
    CHECK(square_span(ideal_x).is_zero());
}

TEST_CASE("multipliers") {
    SUBCASE("oracle: solver output equals brute-force filter over Z2") {
        // Every 1x1 and 2x2 map is tried directly against the multiplier
        // equation; the solver must find exactly the same set.
        for (const FiniteAlgebra& c :
             {FiniteAlgebra::ground(2), FiniteAlgebra::dual_numbers(2)}) {
            MultiplierAlgebra mc = multipliers(c);
            std::vector<LinearMap> brute;
            for (const LinearMap& f : enumerate_linear_maps(2, c.rank, c.rank, kDefaultCap)) {
                bool is_mult = true;
                for (std::size_t i = 0; i < c.rank && is_mult; ++i)
                    for (std::size_t j = 0; j < c.rank && is_mult; ++j)
                        if (f.apply(c.basis_product(i, j)) !=
                            c.multiply(f.column(i), vec_unit(c.rank, j)))
                            is_mult = false;
                if (is_mult) brute.push_back(f);
            }
            Submodule span{2, c.rank * c.rank, {}};
            std::vector<Vec> flat;
            for (const auto& b : mc.basis_maps) flat.push_back(b.entries);
            span = Submodule::from_generators(2, c.rank * c.rank, flat);
            CHECK(span.size() == brute.size());
            for (const LinearMap& f : brute) CHECK(span.contains(f.entries));
        }
    }
    SUBCASE("M(Z2) is Z2") {
        MultiplierAlgebra mc = multipliers(FiniteAlgebra::ground(2));
        CHECK(mc.basis_maps.size() == 1);
        CHECK(mc.as_algebra == FiniteAlgebra::ground(2));
    }
    SUBCASE("M(dual numbers) has rank 2") {
        MultiplierAlgebra mc = multipliers(FiniteAlgebra::dual_numbers(2));
        CHECK(mc.basis_maps.size() == 2);
        CHECK(check_algebra(mc.as_algebra).ok());
        CHECK(mc.as_algebra.unit.has_value());
    }
    SUBCASE("hypothesis failure is refused") {
        CHECK_THROWS_AS(multipliers(FiniteAlgebra::zero_multiplication(2, 1)),
                        std::domain_error);
    }
}

TEST_CASE("bimultipliers") {
    SUBCASE("gamma equals delta for Z2") {
        auto pairs = bimultipliers(FiniteAlgebra::ground(2));
        CHECK(pairs.size() == 1);
        for (const auto& p : pairs) CHECK(p.gamma == p.delta);
    }
    SUBCASE("gamma equals delta whenever Ann(C) = 0") {
        for (const FiniteAlgebra& c :
             {FiniteAlgebra::ground(4), FiniteAlgebra::dual_numbers(2)}) {
            REQUIRE(annihilator(c).is_zero());
            // The pair space and the multiplier space must then coincide
            // along gamma = delta.
            for (const auto& p : bimultipliers(c)) CHECK(p.gamma == p.delta);
        }
    }
    SUBCASE("trivial multiplication makes the equations vacuous") {
        auto pairs = bimultipliers(FiniteAlgebra::zero_multiplication(2, 1));
        // All four (gamma, delta) pairs of 1x1 maps over Z/2 solve them.
        Submodule span = Submodule::from_generators(2, 2, [&] {
            std::vector<Vec> rows;
            for (const auto& p : pairs) {
                Vec v = p.gamma.entries;
                v.insert(v.end(), p.delta.entries.begin(), p.delta.entries.end());
                rows.push_back(std::move(v));
            }
            return rows;
        }());
        CHECK(span.size() == 4);
    }
}

TEST_CASE("mu") {
    SUBCASE("Z2: mu is the identity under M(C) = Z2") {
        CHECK(mu(FiniteAlgebra::ground(2)) == LinearMap::identity(2, 1));
    }
    SUBCASE("dual numbers: mu is injective") {
        CHECK(kernel(mu(FiniteAlgebra::dual_numbers(2))).is_zero());
    }
    SUBCASE("mu is an algebra morphism") {
        for (const FiniteAlgebra& c : {FiniteAlgebra::ground(4),
                                       FiniteAlgebra::dual_numbers(2),
                                       FiniteAlgebra::ground(6)}) {
            MultiplierAlgebra mc = multipliers(c);
            CHECK(check_morphism(mu(mc), c, mc.as_algebra, /*unital=*/false).ok());
        }
    }
}

TEST_CASE("multiplication_two_algebra") {
    SUBCASE("Z2: four cells, all checks pass") {
        TwoAlgebra a = multiplication_two_algebra(FiniteAlgebra::ground(2));
        CHECK(a.a0.rank == 1);
        CHECK(a.a1.rank == 2);
        TwoAlgebraCheckOptions opts;
        opts.exhaustive = true;
        CHECK(check_two_algebra(a, opts).ok());
    }
    SUBCASE("t evaluates as x*u + f(u)") {
        FiniteAlgebra c = FiniteAlgebra::dual_numbers(2);
        TwoAlgebra a = multiplication_two_algebra(c);
        MultiplierAlgebra mc = multipliers(c);
        for (const Vec& cell : all_vectors(2, a.a1.rank, 64)) {
            Vec x(cell.begin(), cell.begin() + 2);
            Vec f(cell.begin() + 2, cell.end());
            Vec t_coords = a.t.apply(cell);
            // realize the target multiplier as a map and compare pointwise
            LinearMap target(2, 2, 2);
            for (std::size_t i = 0; i < mc.basis_maps.size(); ++i)
                target = target + LinearMap::from_rows(
                                      2, 2, 2, vec_scale(t_coords[i],
                                                         mc.basis_maps[i].entries, 2));
            LinearMap f_map(2, 2, 2);
            for (std::size_t i = 0; i < mc.basis_maps.size(); ++i)
                f_map = f_map +
                        LinearMap::from_rows(2, 2, 2,
                                             vec_scale(f[i], mc.basis_maps[i].entries, 2));
            for (const Vec& u : all_vectors(2, 2, 16))
                CHECK(target.apply(u) == vec_add(c.multiply(x, u), f_map.apply(u), 2));
        }
    }
    SUBCASE("agrees with psi of the multiplication crossed module") {
        for (const FiniteAlgebra& c : {FiniteAlgebra::ground(2), FiniteAlgebra::ground(4),
                                       FiniteAlgebra::dual_numbers(2)}) {
            CHECK(multiplication_two_algebra(c) == psi(from_multiplication(c)));
        }
    }
}
