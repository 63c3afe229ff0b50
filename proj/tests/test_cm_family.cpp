#include <doctest.h>

#include "g3ss/cm_family.hpp"

using namespace g3ss;

TEST_CASE("prime classification congruences") {
    CHECK(classify_prime(19).cls == PrimeClass::Touchpoint);   // 19 = -2 mod 7, 3 mod 4
    CHECK(classify_prime(23).cls == PrimeClass::Touchpoint);   // 23 = 2 mod 7
    CHECK(classify_prime(47).cls == PrimeClass::Touchpoint);
    CHECK(classify_prime(31).cls == PrimeClass::Transversal);  // 31 = 3 mod 7
    CHECK(classify_prime(59).cls == PrimeClass::Transversal);
    CHECK(classify_prime(13).cls == PrimeClass::OutOfScope);   // 13 = 1 mod 4
    CHECK(classify_prime(29).cls == PrimeClass::OutOfScope);   // 1 mod 4
    CHECK(classify_prime(71).cls == PrimeClass::OutOfScope);   // 71 = 1 mod 7
    CHECK(classify_prime(7).cls == PrimeClass::OutOfScope);
    CHECK(classify_prime(2).cls == PrimeClass::OutOfScope);
    CHECK_THROWS_AS(classify_prime(15), Error);
}

TEST_CASE("cm_curve reduction") {
    Curve C = cm_curve(19);
    auto F = build_field(19, 1);
    CHECK(C.f() == Poly::from_ints(F, {0, 7, 0, 14, 0, 7, 0, 1}));
    CHECK_NOTHROW(cm_curve(11));  // no prediction, but good reduction
    CHECK_THROWS_AS(cm_curve(7), Error);
    CHECK_THROWS_AS(cm_curve(2), Error);
    try {
        cm_curve(7);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadReduction);
    }
}

TEST_CASE("predictions verify at the witness primes") {
    for (std::uint64_t p : {19, 47}) {
        CmReport r = verify_cm_prediction(p);
        CHECK(r.applicable);
        CHECK(r.pass);
        REQUIRE(r.classification.has_value());
        CHECK(r.classification->outcome == Outcome::NonTransversal);
        CHECK(r.classification->cartier.a_number == 1);
    }
    CmReport t = verify_cm_prediction(31);
    CHECK(t.pass);
    CHECK(t.classification->outcome == Outcome::Transversal);

    // 11 = 3 mod 4 and 11 = -3 mod 7, so it sits in the transversal class.
    CmReport o = verify_cm_prediction(11);
    CHECK(o.applicable);
    CHECK(o.prime.cls == PrimeClass::Transversal);
    CHECK(o.pass);

    CmReport u = verify_cm_prediction(13);  // 13 = 1 mod 4
    CHECK_FALSE(u.applicable);
    CHECK_FALSE(u.classification.has_value());
}

TEST_CASE("component count formula") {
    CHECK(pftq_component_count(7) == 16857);
    CHECK(pftq_component_count(2) == 37);
    CHECK(pftq_component_count(3) == 253);
    CHECK_THROWS_AS(pftq_component_count(4), Error);
    CHECK_THROWS_AS(pftq_component_count(std::uint64_t{1} << 31), Error);
}
