#pragma once

#include <cstdint>
#include <vector>

#include "g3ss/field.hpp"

namespace g3ss {

/// Dense univariate polynomial over a field context, ascending coefficient
/// order, no trailing zeros (zero polynomial = empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    /// Convenience: coefficients given as integers (reduced mod p).
    static Poly from_ints(const FieldCtxPtr& ctx, const std::vector<std::int64_t>& coeffs);
    static Poly x(const FieldCtxPtr& ctx);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return coeffs_ == coeffs_from(o); }

    Poly pow(std::uint64_t e) const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    /// f(x + c).
    Poly shift(const FieldElement& c) const;

    /// x^8 * f(1/x) for deg f in {7, 8}.
    Poly reverse8() const;

    Poly monic() const;
    bool is_squarefree() const;  // errors with ZeroPolynomial on 0

private:
    std::vector<FieldElement> coeffs_from(const Poly& o) const { return o.coeffs_; }
    void normalize();

    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin test over the coefficient field F_q.
bool is_irreducible(const Poly& h);

}  // namespace g3ss
