#include "g3ss/touchpoint.hpp"

namespace g3ss {

namespace {

// ker C^2 must be span((x - x0) dx/y, (x - x0)^2 dx/y), i.e. the coefficient
// vectors of polynomials divisible by (x - x0); at infinity it is
// span(dx/y, x dx/y).
bool depth2_matches(const std::vector<Vec3>& ker_c2, const FieldCtx& F,
                    const std::optional<FieldElement>& x0) {
    if (ker_c2.size() != 2) return false;
    std::vector<Vec3> expected;
    if (!x0) {
        expected.push_back({F.one(), F.zero(), F.zero()});
        expected.push_back({F.zero(), F.one(), F.zero()});
    } else {
        expected.push_back({-*x0, F.one(), F.zero()});            // x - x0
        expected.push_back({*x0 * *x0, -(*x0 + *x0), F.one()});   // (x - x0)^2
    }
    return canonical_span(std::move(expected)) == canonical_span(ker_c2);
}

}  // namespace

TouchpointReport find_touchpoint(const Curve& C, const CartierData& cd) {
    if (cd.a_number != 1 || !cd.nilpotent)
        raise(ErrorCode::PreconditionViolated,
              "touchpoint detection needs a-number 1 and a nilpotent matrix");
    const FieldCtx& F = *C.ctx();
    const Vec3& v = cd.ker_c[0];
    const FieldElement b0 = v[0], b1 = v[1], b2 = v[2];
    TouchpointReport rep;

    FieldElement disc = b1 * b1 - (b0 + b0) * (b2 + b2);
    if (!disc.is_zero()) return rep;  // two distinct roots, no filtration match

    if (b2.is_zero()) {
        // disc = 0 forces b1 = 0 as well; double root at infinity
        if (!depth2_matches(cd.ker_c2, F, std::nullopt)) return rep;
        Curve witness = C.inverted();
        if (!is_strictly_lower_triangular(cartier_manin(witness).M))
            raise(ErrorCode::Internal, "witness model is not strictly lower triangular");
        rep.found = true;
        rep.at_infinity = true;
        rep.witness = witness;
        return rep;
    }

    FieldElement x0 = -(b1 * (b2 + b2).inv());
    if (!depth2_matches(cd.ker_c2, F, x0)) return rep;
    Curve witness = C.shifted(x0);
    if (!is_strictly_lower_triangular(cartier_manin(witness).M))
        raise(ErrorCode::Internal, "witness model is not strictly lower triangular");
    rep.found = true;
    rep.x0 = x0;
    rep.witness = witness;
    return rep;
}

TouchpointReport find_touchpoint(const Curve& C) { return find_touchpoint(C, cartier_manin(C)); }

Classification classify(const Curve& C, const CountOptions& opts) {
    Classification cls;
    cls.cartier = cartier_manin(C);
    SupersingularReport ss = is_supersingular(C, cls.cartier, opts);
    cls.verdict = ss.verdict;
    if (cls.cartier.a_number == 1 && cls.cartier.nilpotent)
        cls.touchpoint = find_touchpoint(C, cls.cartier);
    if (ss.verdict == Verdict::NotSupersingular) {
        cls.reason = NaReason::NotSupersingular;
        return cls;
    }
    if (ss.verdict == Verdict::Indeterminate) {
        cls.reason = NaReason::SupersingularityIndeterminate;
        return cls;
    }
    if (cls.cartier.a_number != 1) {
        cls.reason = NaReason::ANumberNot1;
        return cls;
    }
    cls.outcome = cls.touchpoint->found ? Outcome::NonTransversal : Outcome::Transversal;
    return cls;
}

}  // namespace g3ss
