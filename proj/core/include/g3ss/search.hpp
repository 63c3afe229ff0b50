#pragma once

#include <string>
#include <vector>

#include "g3ss/touchpoint.hpp"

namespace g3ss {

/// Coefficient families searched over F_p:
///   Odd:     f = x^7 + a5 x^5 + a3 x^3 + a1 x, tuples (a5, a3, a1)
///   General: f = x^7 + a6 x^6 + ... + a0, tuples (a6, a5, ..., a0)
/// Tuples enumerate lexicographically, first coordinate most significant.
enum class Family { Odd, General };

struct SearchSpec {
    std::uint64_t p = 0;
    Family family = Family::Odd;
    std::uint64_t budget = 100'000'000;
};

struct Hit {
    std::vector<std::uint64_t> coeffs;  // free coefficients, descending exponent
    Classification cls;
};

struct SearchSummary {
    std::uint64_t tested = 0;
    std::uint64_t skipped = 0;  // candidates abandoned on BudgetExceeded
    std::uint64_t hits = 0;
    double wall_seconds = 0;
};

struct SearchResult {
    std::vector<Hit> hits;  // lexicographic tuple order, independent of workers
    SearchSummary summary;
};

/// The naive search: enumerate the family, cheap-reject through squarefreeness,
/// nilpotency + a-number, the kernel-quadratic / filtration test, and only
/// then count points for the supersingularity verdict.
SearchResult run_search(const SearchSpec& spec, unsigned workers = 0);

// --- example-table regression ---

struct TableRowReport {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::string label;
    bool model_valid = false;
    bool shape = false;      // M strictly lower triangular on the touchpoint witness model
    int a_number = -1;
    bool nilpotent = false;
    Verdict verdict = Verdict::Indeterminate;
    Outcome outcome = Outcome::NotApplicable;
    bool pass = false;
};

struct TableReport {
    std::vector<TableRowReport> rows;
    bool all_pass = false;
};

/// Re-verifies every row of the published example table: prime-field rows
/// must be supersingular NonTransversal with the strictly-lower-triangular
/// shape and a = 1; extension-field rows must pass shape + a = 1 + nilpotency,
/// with the supersingularity verdict as the budget allows.
TableReport verify_table(const CountOptions& opts = {});

}  // namespace g3ss
