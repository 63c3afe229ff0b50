#include <doctest.h>

#include <random>

#include "g3ss/curve.hpp"
#include "g3ss/zeta.hpp"

using namespace g3ss;

TEST_CASE("model validation") {
    auto F11 = build_field(11, 1);
    Curve C = Curve::make(F11, Poly::from_ints(F11, {0, 1, 0, 7, 0, 1, 0, 1}));
    CHECK(C.model_degree() == 7);

    auto F7 = build_field(7, 1);
    Curve D = Curve::make(F7, Poly::from_ints(F7, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(D.model_degree() == 8);

    CHECK_THROWS_AS(Curve::make(F11, Poly::from_ints(F11, {0, 0, 0, 0, 0, 0, 0, 1})), Error);
    CHECK_THROWS_AS(Curve::make(F11, Poly::from_ints(F11, {1, 0, 1})), Error);
    CHECK_THROWS_AS(
        Curve::make(F11, Poly::from_ints(F11, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1})), Error);
}

TEST_CASE("shift and inversion of models") {
    auto F5 = build_field(5, 1);
    Curve C = Curve::make(F5, Poly::from_ints(F5, {0, 1, 0, 0, 0, 0, 0, 1}));  // x^7+x
    CHECK(C.shifted(F5->zero()) == C);
    CHECK(C.shifted(F5->one()).shifted(-F5->one()) == C);
    // x^8((1/x)^7 + 1/x) = x + x^7
    CHECK(C.inverted() == C);

    auto F7 = build_field(7, 1);
    Curve D = Curve::make(F7, Poly::from_ints(F7, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(D.inverted().f() == -D.f());
}

TEST_CASE("point counts are invariant under model changes") {
    std::mt19937_64 rng(17);
    auto F = build_field(5, 1);
    std::uniform_int_distribution<std::uint64_t> pick(0, 4);
    int tried = 0;
    while (tried < 50) {
        std::vector<std::int64_t> c(8);
        for (auto& v : c) v = static_cast<std::int64_t>(pick(rng));
        c[7] = 1;
        Poly f = Poly::from_ints(F, c);
        if (!f.is_squarefree()) continue;
        ++tried;
        Curve C = Curve::make(F, f);
        FieldElement s = F->from_int(static_cast<std::int64_t>(pick(rng)));
        for (unsigned m = 1; m <= 2; ++m)
            CHECK(point_count(C, m) == point_count(C.shifted(s), m));
        // Inversion preserves the F_q-class when no twist is introduced:
        // degree stays 7 (f(0) = 0 case) or the new leading coefficient f(0)
        // is a square.
        Curve I = C.inverted();
        if (I.model_degree() == 7 || quadratic_character(C.f().coeff(0)) == 1)
            CHECK(point_count(C, 1) == point_count(I, 1));
    }
}
