#include "g3ss/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace g3ss {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    a += b;
    return a >= p ? a - p : a;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;  // a, b < p <= 2^31 - 1
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in F_p");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// --- minimal F_p[t] helpers for modulus selection (ascending coefficients) ---

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

// a * b mod h, h monic
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& h, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
    }
    const std::size_t dh = h.size() - 1;
    for (std::size_t i = c.size(); i-- > dh;) {
        std::uint64_t lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < dh; ++j)
            c[i - dh + j] = subm(c[i - dh + j], mulm(lead, h[j], p), p);
    }
    c.resize(dh);
    fp_trim(c);
    return c;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& h, std::uint64_t p) {
    FpPoly r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, h, p);
        base = fp_mulmod(base, base, h, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = invm(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t c = mulm(a.back(), lead_inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = subm(a[shift + j], mulm(c, b[j], p), p);
            fp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility: h of degree k is irreducible over F_p iff
// t^(p^k) = t mod h and gcd(t^(p^(k/l)) - t, h) = 1 for every prime l | k.
bool fp_irreducible(const FpPoly& h, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(fp_deg(h));
    if (k == 0) return false;
    std::vector<FpPoly> frob(k + 1);  // frob[i] = t^(p^i) mod h
    frob[0] = FpPoly{0, 1};
    for (unsigned i = 1; i <= k; ++i) frob[i] = fp_powmod(frob[i - 1], p, h, p);
    FpPoly x{0, 1};
    if (frob[k] != x) return false;
    for (unsigned l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool l_prime = true;
        for (unsigned d = 2; d * d <= l; ++d)
            if (l % d == 0) l_prime = false;
        if (!l_prime) continue;
        FpPoly diff = frob[k / l];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = subm(diff[1], 1, p);
        fp_trim(diff);
        FpPoly g = fp_gcd(diff, h, p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// coefficients compared low-degree-first.
FpPoly lex_smallest_irreducible(std::uint64_t p, unsigned k) {
    std::vector<std::uint64_t> a(k, 0);
    for (;;) {
        FpPoly h(a);
        h.push_back(1);
        if (fp_irreducible(h, p)) return h;
        // increment (a_0, ..., a_{k-1}) with a_0 most significant
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && ++a[i] == p) a[i--] = 0;
        if (i < 0) raise(ErrorCode::Internal, "no irreducible polynomial found");
    }
}

struct CtxRegistry {
    std::mutex mu;
    std::map<std::tuple<std::uint64_t, unsigned, std::vector<std::uint64_t>>, FieldCtxPtr> map;
};

CtxRegistry& registry() {
    static CtxRegistry r;
    return r;
}

}  // namespace

FieldCtxPtr detail_intern_ctx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
    auto key = std::make_tuple(p, k, modulus);
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.map.find(key);
    if (it != reg.map.end()) return it->second;
    FieldCtxPtr ctx(new FieldCtx(p, k, std::move(modulus)));
    reg.map.emplace(std::move(key), ctx);
    return ctx;
}

namespace {

void validate_pk(std::uint64_t p, unsigned k) {
    if (p == 2) raise(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (p > kMaxCharacteristic)
        raise(ErrorCode::DegreeOutOfRange, "p exceeds the 2^31 characteristic cap");
    if (!is_prime(p)) raise(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree)
        raise(ErrorCode::DegreeOutOfRange, "extension degree k = " + std::to_string(k));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (order_ > UINT64_MAX / p_) {
            order_ = UINT64_MAX;
            break;
        }
        order_ *= p_;
    }
}

FieldCtxPtr build_field(std::uint64_t p, unsigned k) {
    validate_pk(p, k);
    if (k == 1) return detail_intern_ctx(p, 1, {});
    return detail_intern_ctx(p, k, lex_smallest_irreducible(p, k));
}

FieldCtxPtr build_field(std::uint64_t p, unsigned k, const std::vector<std::int64_t>& modulus) {
    validate_pk(p, k);
    if (k == 1) {
        if (!modulus.empty())
            raise(ErrorCode::DegreeOutOfRange, "prime field takes no modulus");
        return detail_intern_ctx(p, 1, {});
    }
    if (modulus.size() != k + 1)
        raise(ErrorCode::DegreeOutOfRange, "modulus must have k+1 ascending coefficients");
    FpPoly h(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        std::int64_t c = modulus[i] % static_cast<std::int64_t>(p);
        if (c < 0) c += static_cast<std::int64_t>(p);
        h[i] = static_cast<std::uint64_t>(c);
    }
    if (h[k] != 1) raise(ErrorCode::DegreeOutOfRange, "modulus must be monic of degree k");
    if (!fp_irreducible(h, p))
        raise(ErrorCode::DegreeOutOfRange, "modulus is reducible over F_p");
    return detail_intern_ctx(p, k, std::move(h));
}

FieldElement FieldCtx::zero() const {
    FieldElement e;
    e.ctx_ = this;
    return e;
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::int64_t v) const {
    FieldElement e;
    e.ctx_ = this;
    std::int64_t c = v % static_cast<std::int64_t>(p_);
    if (c < 0) c += static_cast<std::int64_t>(p_);
    e.v_[0] = static_cast<std::uint64_t>(c);
    return e;
}

FieldElement FieldCtx::element(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > k_)
        raise(ErrorCode::DegreeOutOfRange, "coefficient vector longer than extension degree");
    FieldElement e;
    e.ctx_ = this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t c = coeffs[i] % static_cast<std::int64_t>(p_);
        if (c < 0) c += static_cast<std::int64_t>(p_);
        e.v_[i] = static_cast<std::uint64_t>(c);
    }
    return e;
}

FieldElement FieldCtx::element_from_index(std::uint64_t idx) const {
    FieldElement e;
    e.ctx_ = this;
    for (unsigned i = 0; i < k_; ++i) {
        e.v_[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::uint64_t FieldCtx::index_of(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + x.v_[i];
    return idx;
}

const FieldCtx& FieldElement::ctx() const {
    if (!ctx_) raise(ErrorCode::Internal, "uninitialized field element");
    return *ctx_;
}

bool FieldElement::is_zero() const {
    for (unsigned i = 0; i < ctx().k_; ++i)
        if (v_[i] != 0) return false;
    return true;
}

std::vector<std::uint64_t> FieldElement::coeffs() const {
    return {v_.begin(), v_.begin() + ctx().k_};
}

namespace {
void check_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (&a.ctx() != &b.ctx())
        raise(ErrorCode::CtxMismatch, "elements of distinct field contexts");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_ctx(*this, o);
    FieldElement r = *this;
    const std::uint64_t p = ctx_->p_;
    for (unsigned i = 0; i < ctx_->k_; ++i) r.v_[i] = addm(v_[i], o.v_[i], p);
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_ctx(*this, o);
    FieldElement r = *this;
    const std::uint64_t p = ctx_->p_;
    for (unsigned i = 0; i < ctx_->k_; ++i) r.v_[i] = subm(v_[i], o.v_[i], p);
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = ctx().zero();
    const std::uint64_t p = ctx_->p_;
    for (unsigned i = 0; i < ctx_->k_; ++i) r.v_[i] = v_[i] == 0 ? 0 : p - v_[i];
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_ctx(*this, o);
    const std::uint64_t p = ctx_->p_;
    const unsigned k = ctx_->k_;
    FieldElement r = ctx_->zero();
    if (k == 1) {
        r.v_[0] = mulm(v_[0], o.v_[0], p);
        return r;
    }
    std::array<std::uint64_t, 2 * kMaxDegree - 1> conv{};
    for (unsigned i = 0; i < k; ++i) {
        if (v_[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) {
            unsigned __int128 t = conv[i + j];
            t += static_cast<unsigned __int128>(v_[i]) * o.v_[j];
            conv[i + j] = static_cast<std::uint64_t>(t % p);
        }
    }
    const auto& h = ctx_->modulus_;
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        std::uint64_t lead = conv[i];
        if (lead == 0) continue;
        conv[i] = 0;
        for (unsigned j = 0; j < k; ++j)
            conv[i - k + j] = subm(conv[i - k + j], mulm(lead, h[j], p), p);
    }
    for (unsigned i = 0; i < k; ++i) r.v_[i] = conv[i];
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_ctx(*this, o);
    for (unsigned i = 0; i < ctx_->k_; ++i)
        if (v_[i] != o.v_[i]) return false;
    return true;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement base = *this;
    FieldElement r = ctx().one();
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint64_t p = ctx().p_;
    const unsigned k = ctx_->k_;
    if (k == 1) {
        FieldElement r = ctx_->zero();
        r.v_[0] = invm(v_[0], p);
        return r;
    }
    // extended Euclid in F_p[t] against the modulus
    FpPoly a(ctx_->modulus_);
    FpPoly b(v_.begin(), v_.begin() + k);
    fp_trim(b);
    FpPoly s0{}, s1{1};  // coefficients of b in the Bezout combination
    while (fp_deg(b) > 0) {
        // divide a by b
        FpPoly q(a.size() - b.size() + 1, 0);
        FpPoly r = a;
        std::uint64_t lead_inv = invm(b.back(), p);
        while (r.size() >= b.size()) {
            std::uint64_t c = mulm(r.back(), lead_inv, p);
            std::size_t shift = r.size() - b.size();
            q[shift] = c;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[shift + j] = subm(r[shift + j], mulm(c, b[j], p), p);
            fp_trim(r);
            if (r.empty()) break;
        }
        // (a, b) <- (b, r); (s0, s1) <- (s1, s0 - q*s1)
        FpPoly qs1;
        if (!q.empty() && !s1.empty()) {
            qs1.assign(q.size() + s1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j)
                    qs1[i + j] = addm(qs1[i + j], mulm(q[i], s1[j], p), p);
        }
        FpPoly ns = s0;
        ns.resize(std::max(ns.size(), qs1.size()), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) ns[i] = subm(ns[i], qs1[i], p);
        fp_trim(ns);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    if (b.empty()) raise(ErrorCode::Internal, "element not invertible in field");
    std::uint64_t scale = invm(b[0], p);
    FieldElement out = ctx_->zero();
    for (std::size_t i = 0; i < s1.size(); ++i) out.v_[i] = mulm(s1[i], scale, p);
    return out;
}

FieldElement frobenius(const FieldElement& x, unsigned r) {
    const unsigned k = x.ctx().k_;
    r %= k;
    FieldElement out = x;
    for (unsigned i = 0; i < r; ++i) out = out.pow(x.ctx().p_);
    return out;
}

int quadratic_character(const FieldElement& x) {
    if (x.is_zero()) return 0;
    // chi_q(x) = chi_p(N(x)) with N the norm to F_p; avoids the huge
    // exponent (q-1)/2 at large q.
    const FieldCtx& F = x.ctx();
    FieldElement nrm = x;
    FieldElement conj = x;
    for (unsigned i = 1; i < F.k_; ++i) {
        conj = frobenius(conj, 1);
        nrm = nrm * conj;
    }
    for (unsigned i = 1; i < F.k_; ++i)
        if (nrm.coeff(i) != 0) raise(ErrorCode::Internal, "norm did not land in F_p");
    std::uint64_t n0 = nrm.coeff(0);
    std::uint64_t l = powm(n0, (F.p_ - 1) / 2, F.p_);
    return l == 1 ? 1 : -1;
}

}  // namespace g3ss
