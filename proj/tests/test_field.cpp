#include <doctest.h>

#include <random>

#include "pstrata/field.hpp"

using namespace pstrata;

TEST_CASE("rational field arithmetic is exact and canonical") {
    auto Q = ExactField::rationals();
    FieldElem a(Q, Rat(3, 2)), b(Q, Rat(-1, 3));
    CHECK((a + b).rational_value() == Rat(7, 6));
    CHECK((a * b).rational_value() == Rat(-1, 2));
    CHECK((a / b).rational_value() == Rat(-9, 2));
    CHECK(a.inverse().rational_value() == Rat(2, 3));
    CHECK(FieldElem(Q, Rat(4, 8)) == FieldElem(Q, Rat(1, 2)));
    CHECK_THROWS_AS(FieldElem::zero(Q).inverse(), Error);
}

TEST_CASE("cyclotomic generator satisfies its minimal polynomial") {
    for (int n : {3, 4, 5, 6, 8, 12}) {
        auto f = ExactField::cyclotomic(n);
        FieldElem z = FieldElem::zeta(f);
        CHECK(z.pow(n).is_one());
        // no smaller power hits 1 for a primitive root
        for (int k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
        // evaluate the minimal polynomial at zeta
        FieldElem acc = FieldElem::zero(f);
        const auto& mp = f->min_poly();
        for (size_t i = 0; i < mp.size(); ++i) acc += FieldElem(f, mp[i]) * z.pow(i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyclotomic inverses and mixed arithmetic") {
    auto f = ExactField::cyclotomic(5);
    FieldElem z = FieldElem::zeta(f);
    FieldElem x = z + FieldElem(f, Rat(2));
    CHECK((x * x.inverse()).is_one());
    CHECK((z.pow(4)) == z.inverse());
    // 1 + z + z^2 + z^3 + z^4 = 0
    FieldElem s = FieldElem::one(f);
    for (int k = 1; k <= 4; ++k) s += z.pow(k);
    CHECK(s.is_zero());
}

TEST_CASE("orders at most two collapse to the rationals") {
    CHECK(ExactField::cyclotomic(1)->is_rational());
    CHECK(ExactField::cyclotomic(2)->is_rational());
    CHECK_THROWS_AS(FieldElem::zeta(ExactField::rationals()), Error);
}

TEST_CASE("field axioms on random cyclotomic elements") {
    auto f = ExactField::cyclotomic(8);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    auto rand_elem = [&]() {
        std::vector<Rat> c;
        for (int i = 0; i < f->degree(); ++i) c.emplace_back(d(rng));
        return FieldElem::from_coords(f, std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}
