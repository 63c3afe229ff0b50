#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "g3ss/cartier.hpp"
#include "g3ss/curve.hpp"

namespace g3ss {

struct CountOptions {
    std::uint64_t budget = 100'000'000;  // field evaluations
    unsigned workers = 0;                // 0 = available parallelism
};

enum class Verdict { Supersingular, NotSupersingular, Indeterminate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Supersingular: return "Supersingular";
        case Verdict::NotSupersingular: return "NotSupersingular";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

/// One Newton-polygon slope as an exact fraction with multiplicity.
struct Slope {
    std::int64_t num;
    std::int64_t den;
    int multiplicity;
    bool operator==(const Slope&) const = default;
};

struct ZetaData {
    std::uint64_t q = 0;
    std::array<std::uint64_t, 3> counts{};   // N_1..N_3
    std::array<std::int64_t, 3> lcoeffs{};   // a_1..a_3
    std::vector<Slope> slopes;               // ascending, multiplicities sum to 6
    Verdict verdict = Verdict::Indeterminate;
};

/// Number of points on the smooth model over F_{q^m}. Costs q^m field
/// evaluations; errors with BudgetExceeded when that exceeds the budget.
std::uint64_t point_count(const Curve& C, unsigned m, const CountOptions& opts = {});

/// L-polynomial coefficients (a1, a2, a3) from three point counts via
/// Newton's identities; errors with WeilViolation / NonIntegralCoefficient.
std::array<std::int64_t, 3> l_polynomial(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3,
                                         std::uint64_t q);

/// Newton polygon of 1 + a1 T + a2 T^2 + a3 T^3 + q a2 T^4 + q^2 a1 T^5 + q^3 T^6
/// w.r.t. v_p, normalized so v(q) = k. Exact fractions, no floating point.
std::vector<Slope> newton_slopes(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                 std::uint64_t p, unsigned k);

/// Power sums s_1..s_n of the six Frobenius roots, from (a1, a2, a3) and the
/// functional equation. N_m = q^m + 1 - s_m.
std::vector<std::int64_t> power_sums(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                     std::uint64_t q, unsigned n);

/// Counts N_1..N_3, L-coefficients, slopes, verdict. Throws BudgetExceeded
/// when q + q^2 + q^3 exceeds the budget.
ZetaData zeta_data(const Curve& C, const CountOptions& opts = {});

struct SupersingularReport {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<ZetaData> zeta;  // absent when the verdict was reached without counting
    bool nilpotent = false;        // Cartier-Manin evidence
    int p_rank = 0;
};

/// Supersingularity by exact counting + Newton polygon. A non-nilpotent
/// Cartier-Manin matrix settles the verdict without counting; otherwise the
/// verdict is Indeterminate when counting exceeds the budget. Never guesses.
SupersingularReport is_supersingular(const Curve& C, const CountOptions& opts = {});
SupersingularReport is_supersingular(const Curve& C, const CartierData& cd,
                                     const CountOptions& opts = {});

}  // namespace g3ss
