#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace pstrata;
using namespace pstrata::testutil;

TEST_CASE("structure validation") {
    auto r = qring({"x", "y", "z"});
    SUBCASE("the Remark structure is valid") {
        CHECK(dm_structure(r).validate().valid());
    }
    SUBCASE("so(3)-style bracket is valid") {
        // {x,y} = z, {y,z} = x, {z,x} = y; Jacobi cancels by hand
        std::vector<std::vector<Poly>> b(3, std::vector<Poly>(3, Poly(r)));
        b[0][1] = P("z", r);
        b[1][2] = P("x", r);
        b[0][2] = P("-y", r);
        CHECK(PoissonStructure::make(r, Ideal::zero(r), b).validate().valid());
    }
    SUBCASE("Jacobi failure is reported") {
        // {x,y} = x, {y,z} = 0, {x,z} = y: cyclic sum is -y
        std::vector<std::vector<Poly>> b(3, std::vector<Poly>(3, Poly(r)));
        b[0][1] = P("x", r);
        b[0][2] = P("y", r);
        auto rep = PoissonStructure::make(r, Ideal::zero(r), b).validate();
        CHECK_FALSE(rep.valid());
        CHECK(rep.skew_ok);
        CHECK_FALSE(rep.jacobi_ok);
    }
}

TEST_CASE("bracket evaluation") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    CHECK(Pst.bracket(P("x*y", r), P("z", r)) == P("2*x*y", r));
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(r, rng);
        CHECK(Pst.bracket(f, f).is_zero());
    }
    auto A = alpha_structure(r, -1);
    CHECK(A.bracket(P("x*y", r), P("z", r)).is_zero());
}

TEST_CASE("Poisson ideal membership") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    CHECK(is_poisson_ideal(Pst, Ideal(r, {P("x", r), P("y", r)})));
    CHECK(is_poisson_ideal(Pst, Ideal(r, {P("y", r)})));
    for (const char* s : {"x", "x - y", "x - 2*y", "x + 3*y"})
        CHECK(is_poisson_ideal(Pst, Ideal(r, {P(s, r)})));
    CHECK_FALSE(is_poisson_ideal(Pst, Ideal(r, {P("z", r)})));
    CHECK_FALSE(is_poisson_ideal(Pst, Ideal(r, {P("x - 1", r)})));
}

TEST_CASE("Poisson cores of maximal ideals") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    SUBCASE("pencil cores at generic points") {
        auto res = poisson_core(Pst, Pst.point_ideal(qpoint({1, 1, 0})));
        CHECK(res.certified);
        CHECK(equal_ideals(res.core, Ideal(r, {P("x - y", r)})));
        auto res2 = poisson_core(Pst, Pst.point_ideal(qpoint({2, 2, 7})));
        CHECK(res2.certified);
        CHECK(equal_ideals(res2.core, Ideal(r, {P("x - y", r)})));
        auto res3 = poisson_core(Pst, Pst.point_ideal(qpoint({3, 1, -1})));
        CHECK(res3.certified);
        CHECK(equal_ideals(res3.core, Ideal(r, {P("x - 3*y", r)})));
    }
    SUBCASE("a maximal ideal on the z-axis is itself Poisson") {
        // {x, z-5} = x, {y, z-5} = y, {z, x} = -x, {z, y} = -y all lie in it,
        // so the largest Poisson ideal inside it is the ideal itself
        Ideal m = Pst.point_ideal(qpoint({0, 0, 5}));
        CHECK(is_poisson_ideal(Pst, m));
        auto res = poisson_core(Pst, m);
        CHECK(res.certified);
        CHECK(res.iterations == 1);
        CHECK(equal_ideals(res.core, m));
    }
    SUBCASE("an already-Poisson input is its own core after one iteration") {
        Ideal I(r, {P("x", r), P("y", r)});
        auto res = poisson_core(Pst, I);
        CHECK(res.certified);
        CHECK(res.iterations == 1);
        CHECK(equal_ideals(res.core, I));
    }
    SUBCASE("certified core postconditions") {
        for (auto pt : {qpoint({1, 1, 0}), qpoint({5, -2, 3}), qpoint({0, 0, 0})}) {
            auto res = poisson_core(Pst, Pst.point_ideal(pt));
            REQUIRE(res.certified);
            CHECK(Pst.point_ideal(pt).contains_ideal(res.core));
            CHECK(is_poisson_ideal(Pst, res.core));
            auto again = poisson_core(Pst, res.core);
            CHECK(again.iterations == 1);
            CHECK(equal_ideals(again.core, res.core));
        }
    }
}

TEST_CASE("alpha family: Casimirs and leaf equations") {
    auto r = qring({"x", "y", "z"});
    auto A = alpha_structure(r, -1);
    auto cas = casimirs(A, 2);
    REQUIRE(cas.size() == 2);
    CHECK(cas[0] == P("1", r));
    CHECK(cas[1] == P("x*y", r));
    auto res = poisson_core(A, A.point_ideal(qpoint({2, 3, 1})));
    CHECK(res.certified);
    CHECK(equal_ideals(res.core, Ideal(r, {P("x*y - 6", r)})));
}

TEST_CASE("Casimir computations") {
    auto r = qring({"x", "y", "z"});
    auto cas = casimirs(dm_structure(r), 6);
    REQUIRE(cas.size() == 1);
    CHECK(cas[0] == P("1", r));
    // zero bracket: everything is a Casimir
    std::vector<std::vector<Poly>> zero(3, std::vector<Poly>(3, Poly(r)));
    auto Z = PoissonStructure::make(r, Ideal::zero(r), zero);
    CHECK(casimirs(Z, 2).size() == 10); // all monomials of degree <= 2
}

TEST_CASE("rank at points and rank strata") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    CHECK(rank_at_point(Pst, qpoint({1, 1, 0})) == 2);
    CHECK(rank_at_point(Pst, qpoint({0, 0, 5})) == 0);
    std::vector<std::vector<Poly>> zero(3, std::vector<Poly>(3, Poly(r)));
    auto Z = PoissonStructure::make(r, Ideal::zero(r), zero);
    CHECK(rank_at_point(Z, qpoint({4, 4, 4})) == 0);

    auto strata = rank_stratum_ideals(Pst);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].first == 0);
    CHECK(equal_ideals(strata[0].second, Ideal(r, {P("x", r), P("y", r)})));
    CHECK(strata[1].first == 2);
    CHECK(strata[1].second.is_zero_ideal()); // 3x3 skew determinant vanishes

    auto zs = rank_stratum_ideals(Z);
    CHECK(zs[0].second.is_zero_ideal());

    // chain property: minors of order j+1 vanish at points of rank <= j
    for (auto pt : {qpoint({1, 2, 3}), qpoint({0, 0, 1}), qpoint({5, 0, 0})}) {
        int rk = rank_at_point(Pst, pt);
        for (const auto& [j, ideal] : strata) {
            if (rk > j) continue;
            for (const auto& g : ideal.gens()) CHECK(g.evaluate(pt).is_zero());
        }
    }
}

TEST_CASE("points off the variety are rejected") {
    auto r = qring({"x", "y"});
    std::vector<std::vector<Poly>> b(2, std::vector<Poly>(2, Poly(r)));
    b[0][1] = P("1", r);
    auto S = PoissonStructure::make(r, Ideal(r, {P("x*y - 1", r)}), b);
    CHECK_THROWS_AS(rank_at_point(S, qpoint({0, 0})), Error);
}

TEST_CASE("same_core") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    CHECK(same_core(Pst, qpoint({1, 1, 0}), qpoint({2, 2, 7})) == Tri::yes);
    CHECK(same_core(Pst, qpoint({1, 1, 0}), qpoint({0, 0, 0})) == Tri::no);
    CHECK(same_core(Pst, qpoint({3, 5, 1}), qpoint({3, 5, 1})) == Tri::yes);
    // rank is constant along same-core pairs
    CHECK(rank_at_point(Pst, qpoint({1, 1, 0})) == rank_at_point(Pst, qpoint({2, 2, 7})));
}

TEST_CASE("rank is even at every sampled point") {
    auto r = qring({"x", "y", "z"});
    std::mt19937 rng(59);
    std::uniform_int_distribution<long> d(-6, 6);
    for (const auto& S : {dm_structure(r), alpha_structure(r, -2)}) {
        for (int t = 0; t < 30; ++t) {
            auto pt = qpoint({d(rng), d(rng), d(rng)});
            CHECK(rank_at_point(S, pt) % 2 == 0);
        }
    }
}

TEST_CASE("Leibniz and Jacobi on random triples") {
    auto r = qring({"x", "y", "z"});
    auto Pst = dm_structure(r);
    std::mt19937 rng(37);
    for (int t = 0; t < 500; ++t) {
        Poly f = random_poly(r, rng, 3, 2, 4), g = random_poly(r, rng, 3, 2, 4),
             h = random_poly(r, rng, 3, 2, 4);
        CHECK(Pst.bracket(f, g * h) ==
              Pst.bracket(f, g) * h + g * Pst.bracket(f, h));
        Poly jac = Pst.bracket(f, Pst.bracket(g, h)) + Pst.bracket(g, Pst.bracket(h, f)) +
                   Pst.bracket(h, Pst.bracket(f, g));
        CHECK(jac.is_zero());
    }
}
