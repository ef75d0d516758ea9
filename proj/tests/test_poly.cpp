#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace pstrata;
using namespace pstrata::testutil;

TEST_CASE("parser reads the grammar") {
    auto r = qring({"x", "y", "z"});
    Poly f = P("x^2*y - 3/2", r);
    CHECK(f.nterms() == 2);
    CHECK(f.coeff_of(Monomial({2, 1, 0})).rational_value() == Rat(1));
    CHECK(f.coeff_of(Monomial({0, 0, 0})).rational_value() == Rat(-3, 2));

    CHECK(P("0", r).is_zero());
    CHECK(P("0", r).degree() == -1);

    SUBCASE("syntax error carries a position") {
        try {
            P("z(1,", r);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrCode::parse);
            CHECK(e.position() == 2);
        }
    }
    SUBCASE("unknown variable") {
        CHECK_THROWS_AS(P("x + w", r), Error);
    }
    SUBCASE("zeta is rejected over Q") {
        try {
            P("zeta*x", r);
            FAIL("expected a coefficient error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrCode::bad_coefficient);
        }
    }
    SUBCASE("no implicit multiplication") {
        CHECK_THROWS_AS(P("2x", r), Error);
        CHECK_THROWS_AS(P("x y", r), Error);
    }
    SUBCASE("parenthesized subexpressions") {
        CHECK(P("(x + y)^2", r) == P("x^2 + 2*x*y + y^2", r));
        CHECK(P("-(x - y)", r) == P("y - x", r));
    }
}

TEST_CASE("evaluation") {
    auto r = qring({"x", "y", "z"});
    CHECK(P("x^2*y", r).evaluate(qpoint({2, 3, 0})).rational_value() == Rat(12));
    CHECK(P("0", r).evaluate(qpoint({5, -1, 7})).is_zero());
    CHECK_THROWS_AS(P("x", r).evaluate(qpoint({1, 2})), Error);

    auto c4 = ExactField::cyclotomic(4);
    auto rc = PolyRing::make(c4, {"x"});
    Poly g = parse_poly("x - zeta", rc);
    CHECK(g.evaluate({FieldElem::zeta(c4)}).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    auto r = qring({"x", "y", "z"});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        Poly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("print then parse is the identity") {
    auto r = qring({"x", "y", "z"});
    std::mt19937 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        Poly a = random_poly(r, rng, 6, 5, 20);
        CHECK(P(a.str(), r) == a);
    }
    // cyclotomic coefficients round-trip as well
    auto c12 = ExactField::cyclotomic(12);
    auto rc = PolyRing::make(c12, {"x", "y"});
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Term> terms;
        for (int t = 0; t < 3; ++t) {
            Monomial m(2);
            m[0] = d(rng) & 3;
            m[1] = d(rng) & 3;
            std::vector<Rat> coords;
            for (int i = 0; i < c12->degree(); ++i) coords.emplace_back(d(rng));
            terms.push_back({m, FieldElem::from_coords(c12, coords)});
        }
        Poly a(rc, std::move(terms));
        CHECK(parse_poly(a.str(), rc) == a);
    }
}

TEST_CASE("monomial orders are total and multiplicative") {
    auto check_order = [](const MonomialOrder& ord) {
        std::mt19937 rng(23);
        std::uniform_int_distribution<int> d(0, 4);
        for (int trial = 0; trial < 300; ++trial) {
            Monomial a(3), b(3), c(3);
            for (int i = 0; i < 3; ++i) {
                a[i] = d(rng);
                b[i] = d(rng);
                c[i] = d(rng);
            }
            int ab = ord.cmp(a, b);
            CHECK(ord.cmp(b, a) == -ab);
            if (ab != 0) CHECK(ord.cmp(a * c, b * c) == ab); // multiplicative
            CHECK(ord.cmp(a * c, a) >= 0);                   // 1 is smallest
        }
    };
    check_order(MonomialOrder::lex());
    check_order(MonomialOrder::degrevlex());
    check_order(MonomialOrder::elimination({2, 0, 1}, 1));
}

TEST_CASE("derivative and substitution") {
    auto r = qring({"x", "y"});
    CHECK(P("x^3*y", r).derivative(0) == P("3*x^2*y", r));
    CHECK(P("x^3*y", r).derivative(1) == P("x^3", r));
    Poly f = P("x^2 - y", r);
    Poly g = f.substitute(r, {P("y", r), P("x^2", r)});
    CHECK(g == P("y^2 - x^2", r));
}
