#pragma once

#include <string>

#include "g3ss/touchpoint.hpp"

namespace g3ss {

/// Reduction classes of the CM curve y^2 = x^7 + 7x^5 + 14x^3 + 7x.
/// Touchpoint: p = 3 mod 4 and p = +-2 mod 7; Transversal: p = 3 mod 4 and
/// p = +-3 mod 7. Everything else carries no prediction.
enum class PrimeClass { Touchpoint, Transversal, OutOfScope };

inline const char* to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::Touchpoint: return "TouchpointClass";
        case PrimeClass::Transversal: return "TransversalClass";
        case PrimeClass::OutOfScope: return "OutOfScope";
    }
    return "?";
}

struct PrimeClassification {
    std::uint64_t p = 0;
    PrimeClass cls = PrimeClass::OutOfScope;
    std::string reason;  // failed congruence, for OutOfScope
};

PrimeClassification classify_prime(std::uint64_t p);  // errors with NotPrime

/// Reduction of y^2 = x^7 + 7x^5 + 14x^3 + 7x mod p; errors with
/// BadReduction at p in {2, 7}.
Curve cm_curve(std::uint64_t p);

struct CmReport {
    PrimeClassification prime;
    std::optional<Classification> classification;  // absent for OutOfScope primes
    bool applicable = false;
    bool pass = false;
};

/// Runs classify(cm_curve(p)) and checks the predicted outcome:
/// TouchpointClass -> NonTransversal, TransversalClass -> Transversal
/// (with a-number 1 in both classes).
CmReport verify_cm_prediction(std::uint64_t p, const CountOptions& opts = {});

/// p^5 + p^2 + 1, the number of irreducible components of the formal
/// completion of the supersingular locus at an a-number-3 point.
std::uint64_t pftq_component_count(std::uint64_t p);

}  // namespace g3ss
