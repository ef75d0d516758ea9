#include <doctest.h>

#include "pstrata/strata.hpp"
#include "pstrata/weyl.hpp"
#include "test_util.hpp"

using namespace pstrata;
using namespace pstrata::testutil;

namespace {

MatrixGroup z2_group() {
    auto q = ExactField::rationals();
    Mat neg = Mat::identity(q, 2).scaled(-FieldElem::one(q));
    auto G = MatrixGroup::closure({neg});
    G.set_standard_symplectic_form();
    return G;
}

MatrixGroup doubled_weyl(const std::string& label) {
    auto W = build_weyl(root_system(label));
    auto q = ExactField::rationals();
    int n = W.spec.rank;
    std::vector<Mat> gens;
    for (const auto& s : W.spec.simple_reflections) {
        Mat g(q, 2 * n, 2 * n);
        Mat st = s.transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                g.at(i, j) = s.at(i, j);
                g.at(n + i, n + j) = st.at(i, j);
            }
        gens.push_back(std::move(g));
    }
    auto G = MatrixGroup::closure(gens);
    G.set_standard_symplectic_form();
    REQUIRE(G.preserves_form());
    return G;
}

} // namespace

TEST_CASE("stabilizer strata of the Kleinian A1 quotient") {
    auto G = z2_group();
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].subgroup.representative.size() == 1);
    CHECK(strata[0].dim_fixed == 2);
    CHECK(equal_ideals(strata[0].JH, pres.relations));
    CHECK(strata[1].subgroup.representative.size() == 2);
    CHECK(strata[1].dim_fixed == 0);
    Ideal irrelevant(pres.pres_ring, {P("A", pres.pres_ring), P("B", pres.pres_ring),
                                      P("C", pres.pres_ring)});
    CHECK(equal_ideals(strata[1].JH, irrelevant));
}

TEST_CASE("free action has a single stratum") {
    auto q = ExactField::rationals();
    auto G = MatrixGroup::closure({Mat::identity(q, 2)});
    G.set_standard_symplectic_form();
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    REQUIRE(strata.size() == 1);
    CHECK(strata[0].JH.is_zero_ideal());
}

TEST_CASE("A2 diagonal action: strata are indexed by parabolic classes only") {
    auto G = doubled_weyl("A2");
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    // subgroup classes of S3: 1, Z2, Z3, S3; the 3-cycle subgroup is not a
    // stabilizer (its fixed space 0 is already fixed by all of S3)
    REQUIRE(strata.size() == 3);
    CHECK(strata[0].subgroup.representative.size() == 1);
    CHECK(strata[0].dim_fixed == 4);
    CHECK(strata[1].subgroup.representative.size() == 2);
    CHECK(strata[1].dim_fixed == 2);
    CHECK(strata[2].subgroup.representative.size() == 6);
    CHECK(strata[2].dim_fixed == 0);
}

TEST_CASE("induced Poisson structure on the invariant presentation") {
    auto G = z2_group();
    auto pres = invariant_generators(G);
    auto induced = induced_poisson(G, pres);
    auto r = pres.pres_ring;
    CHECK(induced.gen_bracket(0, 1) == P("2*A", r));
    CHECK(induced.gen_bracket(0, 2) == P("4*B", r));
    CHECK(induced.gen_bracket(1, 2) == P("2*C", r));
    CHECK(induced.validate().valid());
    // the cone relation is a Poisson ideal of the ambient bracket
    CHECK(is_poisson_ideal(induced, Ideal(r, {P("B^2 - A*C", r)})));

    SUBCASE("trivial group recovers the standard symplectic bracket") {
        auto q = ExactField::rationals();
        auto T = MatrixGroup::closure({Mat::identity(q, 2)});
        T.set_standard_symplectic_form();
        auto tpres = invariant_generators(T);
        auto ind = induced_poisson(T, tpres);
        CHECK(ind.gen_bracket(0, 1) == P("1", tpres.pres_ring));
    }
}

TEST_CASE("rank-0 locus of the Kleinian presentation is the cone point") {
    auto G = z2_group();
    auto pres = invariant_generators(G);
    auto induced = induced_poisson(G, pres);
    auto strata = rank_stratum_ideals(induced);
    REQUIRE(!strata.empty());
    REQUIRE(strata[0].first == 0);
    const Ideal& rank0 = strata[0].second;
    // evaluating the order-1 minors: zero at the origin, nonzero on the cone
    for (const auto& g : rank0.gens()) CHECK(g.evaluate(qpoint({0, 0, 0})).is_zero());
    bool vanishes_everywhere = true;
    std::vector<FieldElem> smooth = qpoint({1, 2, 4}); // (x,y) = (1,2) image
    for (const auto& g : rank0.gens())
        if (!g.evaluate(smooth).is_zero()) vanishes_everywhere = false;
    CHECK_FALSE(vanishes_everywhere);
}

TEST_CASE("free action: rank 2n everywhere") {
    auto q = ExactField::rationals();
    auto T = MatrixGroup::closure({Mat::identity(q, 2)});
    T.set_standard_symplectic_form();
    auto pres = invariant_generators(T);
    auto strata = stabilizer_strata(T, pres);
    auto rep = verify_leaf_claims(T, pres, strata, 3, 5, false);
    REQUIRE(rep.strata.size() == 1);
    CHECK(rep.strata[0].dim_fixed == 2);
    CHECK(rep.strata[0].rank_ok);
    for (int rk : rep.strata[0].ranks) CHECK(rk == 2);
}

TEST_CASE("leaf claims verified at sampled points") {
    auto G = z2_group();
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    auto rep = verify_leaf_claims(G, pres, strata, 5, 7, true);
    CHECK(rep.all_ok);
    CHECK(rep.cross_cores_ok);
    CHECK(rep.indeterminate_pairs == 0);
    REQUIRE(rep.strata.size() == 2);
    for (const auto& c : rep.strata) {
        CHECK(c.j_poisson);
        CHECK(c.rank_ok);
        for (int rk : c.ranks) CHECK(rk == c.dim_fixed);
        CHECK(c.cores_within == Tri::yes);
    }
    SUBCASE("deterministic across thread counts") {
        auto rep4 = verify_leaf_claims(G, pres, strata, 5, 7, true, 4);
        REQUIRE(rep4.strata.size() == rep.strata.size());
        for (size_t i = 0; i < rep.strata.size(); ++i)
            CHECK(rep4.strata[i].ranks == rep.strata[i].ranks);
        CHECK(rep4.all_ok == rep.all_ok);
    }
}

TEST_CASE("A2 leaf ranks (cores skipped at this scale)") {
    auto G = doubled_weyl("A2");
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    auto rep = verify_leaf_claims(G, pres, strata, 2, 11, false);
    REQUIRE(rep.strata.size() == 3);
    CHECK(rep.strata[0].dim_fixed == 4);
    CHECK(rep.strata[1].dim_fixed == 2);
    CHECK(rep.strata[2].dim_fixed == 0);
    for (const auto& c : rep.strata) {
        CHECK(c.j_poisson);
        CHECK(c.rank_ok);
    }
}

TEST_CASE("skew group algebra fibers") {
    auto G = z2_group();
    auto pres = invariant_generators(G);
    SUBCASE("generic orbit: 2x2 matrix algebra profile") {
        auto F = skew_fiber(G, pres, qpoint({1, 2}));
        CHECK(F.dim == 4);
        CHECK(F.is_associative());
        CHECK(F.has_unit());
        auto inv = fiber_invariants(F);
        CHECK(inv == FiberInvariants{4, 1, 0, 4});
    }
    SUBCASE("origin: coinvariants times the group algebra") {
        auto F = skew_fiber(G, pres, qpoint({0, 0}));
        CHECK(F.dim == 6);
        auto inv = fiber_invariants(F);
        CHECK(inv.total == 6);
        CHECK(inv.radical == 4);
        CHECK(inv.semisimple == 2);
        CHECK(inv.center == 1);
    }
    SUBCASE("trivial group: point fibers") {
        auto q = ExactField::rationals();
        auto T = MatrixGroup::closure({Mat::identity(q, 2)});
        T.set_standard_symplectic_form();
        auto tp = invariant_generators(T);
        CHECK(skew_fiber(T, tp, qpoint({3, 4})).dim == 1);
    }
    SUBCASE("fiber invariants are constant within a stratum, distinct across") {
        auto inv_a = fiber_invariants(skew_fiber(G, pres, qpoint({1, 2})));
        auto inv_b = fiber_invariants(skew_fiber(G, pres, qpoint({-3, 5})));
        auto inv_c = fiber_invariants(skew_fiber(G, pres, qpoint({7, 1})));
        CHECK(inv_a == inv_b);
        CHECK(inv_a == inv_c);
        auto inv_origin = fiber_invariants(skew_fiber(G, pres, qpoint({0, 0})));
        CHECK(inv_a.total != inv_origin.total);
    }
}

TEST_CASE("group algebra of Z/2 as a structure-constant table") {
    auto q = ExactField::rationals();
    FiberAlgebra F;
    F.field = q;
    F.dim = 2;
    F.labels = {"1", "g"};
    F.table.assign(2, std::vector<std::vector<FieldElem>>(
                          2, std::vector<FieldElem>(2, FieldElem::zero(q))));
    F.table[0][0][0] = FieldElem::one(q);
    F.table[0][1][1] = FieldElem::one(q);
    F.table[1][0][1] = FieldElem::one(q);
    F.table[1][1][0] = FieldElem::one(q);
    CHECK(fiber_invariants(F) == FiberInvariants{2, 2, 0, 2});
}

TEST_CASE("J(H) is fixed by conjugation of I(H)") {
    auto G = doubled_weyl("A2");
    auto pres = invariant_generators(G);
    auto strata = stabilizer_strata(G, pres);
    const auto& s = strata[1]; // the reflection stratum
    for (int g = 0; g < G.order(); ++g) {
        std::vector<Poly> moved;
        for (const auto& form : s.IH.gens()) moved.push_back(act_on_poly(G.elem(g), form));
        CHECK(equal_ideals(pres.contract(moved), s.JH));
    }
}
