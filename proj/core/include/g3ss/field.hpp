#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "g3ss/errors.hpp"

namespace g3ss {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Largest supported extension degree over the prime field.
inline constexpr unsigned kMaxDegree = 6;

/// p^2 must fit into an unsigned 64-bit word.
inline constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 31) - 1;

/// An element of F_{p^k}, stored as a coefficient vector over F_p of
/// length k (ascending powers of the generator of the extension).
/// Elements carry a handle to their field context; elements of distinct
/// contexts never combine.
class FieldElement {
public:
    FieldElement() = default;

    const FieldCtx& ctx() const;
    bool is_zero() const;
    bool is_valid() const { return ctx_ != nullptr; }

    std::uint64_t coeff(unsigned i) const { return v_[i]; }
    std::vector<std::uint64_t> coeffs() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inv() const;  // errors with DivisionByZero on 0
    FieldElement pow(std::uint64_t e) const;

private:
    friend class FieldCtx;
    friend FieldElement frobenius(const FieldElement&, unsigned);

    const FieldCtx* ctx_ = nullptr;
    std::array<std::uint64_t, kMaxDegree> v_{};
};

/// Field context for F_{p^k}: characteristic, degree, and (for k > 1) the
/// monic irreducible modulus over F_p (ascending coefficients, length k+1).
/// Contexts are immutable, constructed only through build_field, and
/// memoized so that equal parameters yield the same handle.
class FieldCtx {
public:
    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    /// p^k, saturating at UINT64_MAX.
    std::uint64_t order() const { return order_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const;
    FieldElement element(const std::vector<std::int64_t>& coeffs) const;

    /// Mixed-radix enumeration of the field: index in [0, p^k) <-> element.
    FieldElement element_from_index(std::uint64_t idx) const;
    std::uint64_t index_of(const FieldElement& x) const;

private:
    friend FieldCtxPtr build_field(std::uint64_t, unsigned);
    friend FieldCtxPtr build_field(std::uint64_t, unsigned, const std::vector<std::int64_t>&);
    friend FieldCtxPtr detail_intern_ctx(std::uint64_t, unsigned, std::vector<std::uint64_t>);
    friend class FieldElement;
    friend FieldElement frobenius(const FieldElement&, unsigned);
    friend int quadratic_character(const FieldElement&);

    FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> modulus_;  // empty when k == 1
    std::uint64_t order_;
};

/// F_{p^k} with the lexicographically smallest monic irreducible modulus
/// (coefficients compared low-degree-first as integers in [0, p)).
FieldCtxPtr build_field(std::uint64_t p, unsigned k);

/// F_{p^k} with a caller-supplied modulus (ascending, monic, degree k,
/// irreducible over F_p). Entries are reduced mod p.
FieldCtxPtr build_field(std::uint64_t p, unsigned k, const std::vector<std::int64_t>& modulus);

/// x^(p^r).
FieldElement frobenius(const FieldElement& x, unsigned r);

/// 0 on 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character(const FieldElement& x);

bool is_prime(std::uint64_t n);

}  // namespace g3ss
