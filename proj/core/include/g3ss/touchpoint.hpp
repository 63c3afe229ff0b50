#pragma once

#include <optional>

#include "g3ss/cartier.hpp"
#include "g3ss/zeta.hpp"

namespace g3ss {

/// Result of the touchpoint detection. When found, the witness model is the
/// shifted (finite x0) or inverted (x0 at infinity) curve on which the
/// Cartier-Manin matrix is strictly lower triangular.
struct TouchpointReport {
    bool found = false;
    bool at_infinity = false;
    std::optional<FieldElement> x0;  // present iff found and finite
    std::optional<Curve> witness;    // present iff found
};

/// Kernel-filtration detection: the reduced kernel vector of M, read as the
/// binary quadratic b2 X^2 + b1 XZ + b0 Z^2 on the x-line, must have a double
/// root (finite or at infinity), and ker(M^(p) M) must be the corresponding
/// divisibility subspace. Requires a-number 1 and a nilpotent matrix; errors
/// with PreconditionViolated otherwise.
TouchpointReport find_touchpoint(const Curve& C);
TouchpointReport find_touchpoint(const Curve& C, const CartierData& cd);

enum class Outcome { NonTransversal, Transversal, NotApplicable };

enum class NaReason { None, NotSupersingular, ANumberNot1, SupersingularityIndeterminate };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::NonTransversal: return "NonTransversal";
        case Outcome::Transversal: return "Transversal";
        case Outcome::NotApplicable: return "NotApplicable";
    }
    return "?";
}

inline const char* to_string(NaReason r) {
    switch (r) {
        case NaReason::None: return "None";
        case NaReason::NotSupersingular: return "NotSupersingular";
        case NaReason::ANumberNot1: return "ANumberNot1";
        case NaReason::SupersingularityIndeterminate: return "SupersingularityIndeterminate";
    }
    return "?";
}

struct Classification {
    Outcome outcome = Outcome::NotApplicable;
    NaReason reason = NaReason::None;
    CartierData cartier;
    Verdict verdict = Verdict::Indeterminate;
    std::optional<TouchpointReport> touchpoint;  // present when a = 1 and nilpotent
};

/// The full non-transversality decision: NonTransversal iff supersingular,
/// a = 1, and a touchpoint exists; Transversal iff supersingular, a = 1, and
/// no touchpoint.
Classification classify(const Curve& C, const CountOptions& opts = {});

}  // namespace g3ss
