#include "g3ss/cm_family.hpp"

namespace g3ss {

PrimeClassification classify_prime(std::uint64_t p) {
    if (!is_prime(p)) raise(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    PrimeClassification pc;
    pc.p = p;
    if (p == 2 || p == 7) {
        pc.reason = "bad reduction at p = " + std::to_string(p);
        return pc;
    }
    if (p % 4 != 3) {
        pc.reason = "p = " + std::to_string(p % 4) + " mod 4";
        return pc;
    }
    const std::uint64_t r = p % 7;
    if (r == 2 || r == 5) {
        pc.cls = PrimeClass::Touchpoint;
    } else if (r == 3 || r == 4) {
        pc.cls = PrimeClass::Transversal;
    } else {
        pc.reason = "p = +-1 mod 7";
    }
    return pc;
}

Curve cm_curve(std::uint64_t p) {
    if (p == 2 || p == 7)
        raise(ErrorCode::BadReduction, "the CM curve has bad reduction at p = " + std::to_string(p));
    auto ctx = build_field(p, 1);
    return Curve::make(ctx, Poly::from_ints(ctx, {0, 7, 0, 14, 0, 7, 0, 1}));
}

CmReport verify_cm_prediction(std::uint64_t p, const CountOptions& opts) {
    CmReport rep;
    rep.prime = classify_prime(p);
    if (rep.prime.cls == PrimeClass::OutOfScope) return rep;
    rep.applicable = true;
    rep.classification = classify(cm_curve(p), opts);
    const Classification& cls = *rep.classification;
    const Outcome want = rep.prime.cls == PrimeClass::Touchpoint ? Outcome::NonTransversal
                                                                 : Outcome::Transversal;
    rep.pass = cls.outcome == want && cls.cartier.a_number == 1 &&
               cls.verdict == Verdict::Supersingular;
    return rep;
}

std::uint64_t pftq_component_count(std::uint64_t p) {
    if (!is_prime(p)) raise(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    unsigned __int128 v = 1;
    unsigned __int128 pp = p;
    v = pp * pp * pp * pp * pp + pp * pp + 1;
    if (v > UINT64_MAX) raise(ErrorCode::Overflow, "p^5 + p^2 + 1 exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace g3ss
