#include "g3ss/poly.hpp"

#include <algorithm>
#include <utility>

namespace g3ss {

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_ints(const FieldCtxPtr& ctx, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (std::int64_t c : coeffs) v.push_back(ctx->from_int(c));
    return Poly(ctx, std::move(v));
}

Poly Poly::x(const FieldCtxPtr& ctx) { return from_ints(ctx, {0, 1}); }

FieldElement Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ctx_->zero();
}

FieldElement Poly::leading() const {
    if (coeffs_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> v(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElement> v(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<FieldElement> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<FieldElement> v(coeffs_.size() + o.coeffs_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator*(const FieldElement& c) const {
    std::vector<FieldElement> v = coeffs_;
    for (auto& e : v) e = e * c;
    return Poly(ctx_, std::move(v));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = from_ints(ctx_, {1});
    Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(ctx_);
    std::vector<FieldElement> v(coeffs_.size() - 1, ctx_->zero());
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * ctx_->from_int(static_cast<std::int64_t>(i));
    return Poly(ctx_, std::move(v));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = ctx_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::shift(const FieldElement& c) const {
    // Horner: r <- r*(x + c) + f_i
    Poly xc = from_ints(ctx_, {0, 1});
    xc = xc + Poly(ctx_, {c});
    Poly r(ctx_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * xc + Poly(ctx_, {coeffs_[i]});
    return r;
}

Poly Poly::reverse8() const {
    if (degree() != 7 && degree() != 8)
        raise(ErrorCode::DegreeOutOfRange, "reverse8 expects degree 7 or 8");
    std::vector<FieldElement> v(9, ctx_->zero());
    for (std::size_t i = 0; i <= 8; ++i) v[i] = coeff(8 - i);
    return Poly(ctx_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

bool Poly::is_squarefree() const {
    if (is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefreeness of 0");
    return gcd(*this, derivative()).degree() == 0;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by 0");
    const auto& ctx = a.ctx();
    if (a.degree() < b.degree()) return {Poly(ctx), a};
    std::vector<FieldElement> r = a.coeffs();
    std::vector<FieldElement> q(a.degree() - b.degree() + 1, ctx->zero());
    FieldElement lead_inv = b.leading().inv();
    for (std::size_t i = r.size(); i-- > 0 && static_cast<int>(i) >= b.degree();) {
        if (r[i].is_zero()) continue;
        FieldElement c = r[i] * lead_inv;
        std::size_t shift = i - b.degree();
        q[shift] = c;
        for (int j = 0; j <= b.degree(); ++j) r[shift + j] = r[shift + j] - c * b.coeff(j);
    }
    return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::from_ints(base.ctx(), {1});
    Poly b = divrem(base, m).second;
    while (e) {
        if (e & 1) result = divrem(result * b, m).second;
        if (e >>= 1) b = divrem(b * b, m).second;
    }
    return result;
}

bool is_irreducible(const Poly& h) {
    const int d = h.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const auto& ctx = h.ctx();
    const std::uint64_t p = ctx->p();
    const unsigned kk = ctx->k();
    Poly x = Poly::x(ctx);
    // frob[i] = x^(q^i) mod h, via k p-power steps per q-power
    std::vector<Poly> frob(d + 1);
    frob[0] = x;
    Poly cur = x;
    for (int i = 1; i <= d; ++i) {
        for (unsigned s = 0; s < kk; ++s) cur = powmod(cur, p, h);
        frob[i] = cur;
    }
    if (!(frob[d] == x)) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool l_prime = true;
        for (int dd = 2; dd * dd <= l; ++dd)
            if (l % dd == 0) l_prime = false;
        if (!l_prime) continue;
        if (gcd(frob[d / l] - x, h).degree() != 0) return false;
    }
    return true;
}

}  // namespace g3ss
