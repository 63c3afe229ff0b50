#include <doctest.h>

#include <random>

#include "g3ss/field.hpp"

using namespace g3ss;

TEST_CASE("prime field construction and validation") {
    auto F = build_field(11, 1);
    CHECK(F->p() == 11);
    CHECK(F->k() == 1);
    CHECK(F->order() == 11);
    CHECK(F->modulus().empty());

    CHECK_THROWS_WITH_AS(build_field(2, 1), doctest::Contains("characteristic 2"), Error);
    CHECK_THROWS_AS(build_field(9, 1), Error);
    CHECK_THROWS_AS(build_field(0, 1), Error);
    CHECK_THROWS_AS(build_field(3, 0), Error);
    CHECK_THROWS_AS(build_field(3, 7), Error);
    CHECK_THROWS_AS(build_field((std::uint64_t{1} << 31) + 11, 1), Error);
}

TEST_CASE("extension field modulus selection is lex-smallest") {
    auto F9 = build_field(3, 2);
    // t^2 + 1 is the first monic irreducible quadratic over F_3 in
    // low-degree-first order.
    CHECK(F9->modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(F9->order() == 9);

    auto F19_2 = build_field(19, 2, {-3, 0, 1});
    CHECK(F19_2->modulus() == std::vector<std::uint64_t>{16, 0, 1});

    CHECK_THROWS_AS(build_field(3, 2, {0, 0, 1}), Error);     // t^2 reducible
    CHECK_THROWS_AS(build_field(3, 2, {1, 0, 2}), Error);     // not monic
    CHECK_THROWS_AS(build_field(3, 2, {1, 0, 0, 1}), Error);  // wrong length
}

TEST_CASE("contexts are memoized") {
    CHECK(build_field(5, 3).get() == build_field(5, 3).get());
    auto a = build_field(19, 2, {-3, 0, 1});
    auto b = build_field(19, 2, {16, 0, 1});
    CHECK(a.get() == b.get());
    CHECK(build_field(5, 2).get() != build_field(5, 3).get());
}

TEST_CASE("element construction and enumeration round trip") {
    auto F = build_field(7, 3);
    for (std::uint64_t i : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{41},
                            F->order() - 1}) {
        CHECK(F->index_of(F->element_from_index(i)) == i);
    }
    CHECK(F->from_int(-1) == F->from_int(6));
    CHECK(F->from_int(15) == F->from_int(1));
    CHECK(F->element({1, 2, 3}).coeffs() == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(F->zero().is_zero());
    CHECK_FALSE(F->one().is_zero());
}

TEST_CASE("field axioms on random elements") {
    auto F = build_field(11, 3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = F->element_from_index(pick(rng));
        FieldElement b = F->element_from_index(pick(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == F->zero());
        CHECK(a * (b + F->one()) == a * b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inv() == F->one());
            CHECK(a.pow(F->order() - 1) == F->one());
        }
    }
    CHECK_THROWS_AS(F->zero().inv(), Error);
}

TEST_CASE("frobenius is a field automorphism fixing F_p") {
    auto F = build_field(5, 4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    for (int i = 0; i < 200; ++i) {
        FieldElement a = F->element_from_index(pick(rng));
        FieldElement b = F->element_from_index(pick(rng));
        CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
        CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
        CHECK(frobenius(a, 1) == a.pow(5));
        CHECK(frobenius(a, 4) == a);  // full orbit
        CHECK(frobenius(frobenius(a, 1), 3) == a);
    }
    for (std::int64_t c = 0; c < 5; ++c) CHECK(frobenius(F->from_int(c), 1) == F->from_int(c));
}

TEST_CASE("quadratic character: multiplicative, square count, norm compatibility") {
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{13, 1}, {3, 2}, {7, 2}, {5, 3}}) {
        auto F = build_field(p, k);
        std::uint64_t squares = 0;
        for (std::uint64_t i = 0; i < F->order(); ++i) {
            FieldElement x = F->element_from_index(i);
            int chi = quadratic_character(x);
            if (x.is_zero()) {
                CHECK(chi == 0);
                continue;
            }
            CHECK((chi == 1 || chi == -1));
            CHECK(quadratic_character(x * x) == 1);
            if (chi == 1) ++squares;
        }
        CHECK(squares == (F->order() - 1) / 2);
    }
    auto F = build_field(11, 2);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(1, F->order() - 1);
    for (int i = 0; i < 300; ++i) {
        FieldElement a = F->element_from_index(pick(rng));
        FieldElement b = F->element_from_index(pick(rng));
        CHECK(quadratic_character(a * b) ==
              quadratic_character(a) * quadratic_character(b));
    }
}

TEST_CASE("elements of distinct contexts never combine") {
    auto F1 = build_field(3, 1);
    auto F2 = build_field(5, 1);
    CHECK_THROWS_AS((void)(F1->one() + F2->one()), Error);
}
