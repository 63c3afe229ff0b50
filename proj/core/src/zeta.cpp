#include "g3ss/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace g3ss {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;

// Base fields up to this order get Zech-logarithm tables for the hot
// counting loop; larger fields fall back to generic arithmetic.
constexpr u64 kZechMax = u64{1} << 22;

u64 sat_mul(u64 a, u64 b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

u64 sat_pow(u64 q, unsigned m) {
    u64 r = 1;
    for (unsigned i = 0; i < m; ++i) r = sat_mul(r, q);
    return r;
}

// ---------------------------------------------------------------------------
// Zech-logarithm representation of a small field: nonzero x = g^i is stored
// as the code i in [0, q-2], zero as the code q-1. Multiplication is index
// addition, addition goes through the Zech table Z(d) = log(1 + g^d), and the
// quadratic character is the parity of the code.
// ---------------------------------------------------------------------------
class ZechField {
public:
    using Elt = u32;

    explicit ZechField(const FieldCtx& F) : F_(F) {
        q_ = F.order();
        n_ = static_cast<u32>(q_ - 1);
        half_ = n_ / 2;
        dlog_.assign(q_, zero_code());
        // generator: smallest element (by enumeration index) of full order
        std::vector<u64> primes;
        u64 n = n_;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                primes.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) primes.push_back(n);
        FieldElement g = F.one();
        for (u64 idx = 2; idx < q_; ++idx) {
            FieldElement cand = F.element_from_index(idx);
            bool ok = true;
            for (u64 l : primes)
                if (cand.pow(n_ / l) == F.one()) {
                    ok = false;
                    break;
                }
            if (ok) {
                g = cand;
                break;
            }
        }
        FieldElement cur = F.one();
        for (u32 i = 0; i < n_; ++i) {
            dlog_[F.index_of(cur)] = i;
            cur = cur * g;
        }
        zech_.assign(n_, zero_code());
        cur = F.one();
        const FieldElement one = F.one();
        for (u32 d = 0; d < n_; ++d) {
            FieldElement w = cur + one;
            zech_[d] = w.is_zero() ? zero_code() : dlog_[F.index_of(w)];
            cur = cur * g;
        }
    }

    Elt zero_code() const { return n_; }
    Elt zero() const { return n_; }
    Elt one() const { return 0; }
    bool is_zero(Elt a) const { return a == n_; }

    Elt code(const FieldElement& x) const {
        return x.is_zero() ? zero_code() : dlog_[F_.index_of(x)];
    }

    Elt mul(Elt a, Elt b) const {
        if (a == n_ || b == n_) return n_;
        u32 c = a + b;
        return c >= n_ ? c - n_ : c;
    }

    Elt add(Elt a, Elt b) const {
        if (a == n_) return b;
        if (b == n_) return a;
        u32 d = b >= a ? b - a : b + n_ - a;
        u32 z = zech_[d];
        if (z == n_) return n_;
        u32 c = a + z;
        return c >= n_ ? c - n_ : c;
    }

    Elt neg(Elt a) const {
        if (a == n_) return n_;
        u32 c = a + half_;
        return c >= n_ ? c - n_ : c;
    }

    int chi(Elt a) const { return a == n_ ? 0 : (a & 1 ? -1 : 1); }

    // Enumeration bijection [0, q) <-> codes.
    Elt elt_by_index(u64 i) const { return static_cast<Elt>(i); }

private:
    const FieldCtx& F_;
    u64 q_;
    u32 n_;
    u32 half_;
    std::vector<u32> dlog_;  // mixed-radix element index -> code
    std::vector<u32> zech_;
};

// Generic fallback with the same interface, for base fields too large to
// table.
class GenField {
public:
    using Elt = FieldElement;

    explicit GenField(const FieldCtx& F) : F_(F) {}

    Elt zero() const { return F_.zero(); }
    Elt one() const { return F_.one(); }
    bool is_zero(const Elt& a) const { return a.is_zero(); }
    Elt code(const FieldElement& x) const { return x; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt neg(const Elt& a) const { return -a; }
    int chi(const Elt& a) const { return quadratic_character(a); }
    Elt elt_by_index(u64 i) const { return F_.element_from_index(i); }

private:
    const FieldCtx& F_;
};

// ---------------------------------------------------------------------------
// Degree-m tower F_{q^m} over a base field given by Ops. The modulus and the
// q-power Frobenius images are prepared with the exact Poly machinery, then
// mapped into Ops codes.
// ---------------------------------------------------------------------------
template <class Ops>
struct Tower {
    using Elt = typename Ops::Elt;
    using T = std::array<Elt, 6>;

    const Ops& F;
    unsigned m;
    std::array<Elt, 6> mod{};       // lower coefficients of the monic modulus
    std::array<T, 6> frob_img{};    // t^(q*i) mod h, i < m

    Tower(const Ops& ops, const FieldCtxPtr& base, unsigned degree) : F(ops), m(degree) {
        // first irreducible monic x^m + c_{m-1} x^(m-1) + ... + c_0, tuple
        // index in mixed radix over the base order
        const u64 q = base->order();
        Poly h;
        for (u64 t = 0;; ++t) {
            std::vector<FieldElement> c(m + 1, base->zero());
            u64 idx = t;
            for (unsigned i = 0; i < m; ++i) {
                c[i] = base->element_from_index(idx % q);
                idx /= q;
            }
            if (idx != 0) raise(ErrorCode::Internal, "no tower modulus found");
            c[m] = base->one();
            Poly cand(base, std::move(c));
            if (is_irreducible(cand)) {
                h = cand;
                break;
            }
        }
        for (unsigned i = 0; i < m; ++i) mod[i] = F.code(h.coeff(i));
        // t^q mod h via k p-power steps
        Poly fr = Poly::x(base);
        for (unsigned s = 0; s < base->k(); ++s) fr = powmod(fr, base->p(), h);
        Poly img = Poly::from_ints(base, {1});
        for (unsigned i = 0; i < m; ++i) {
            T row = zero();
            for (unsigned j = 0; j < m; ++j) row[j] = F.code(img.coeff(j));
            frob_img[i] = row;
            img = divrem(img * fr, h).second;
        }
    }

    T zero() const {
        T t;
        for (unsigned i = 0; i < 6; ++i) t[i] = F.zero();
        return t;
    }

    T constant(Elt c) const {
        T t = zero();
        t[0] = c;
        return t;
    }

    T mul(const T& a, const T& b) const {
        std::array<Elt, 11> conv;
        for (unsigned i = 0; i < 2 * m - 1; ++i) conv[i] = F.zero();
        for (unsigned i = 0; i < m; ++i) {
            if (F.is_zero(a[i])) continue;
            for (unsigned j = 0; j < m; ++j)
                conv[i + j] = F.add(conv[i + j], F.mul(a[i], b[j]));
        }
        for (unsigned i = 2 * m - 2; i >= m && i < 11; --i) {
            Elt lead = conv[i];
            if (F.is_zero(lead)) continue;
            for (unsigned j = 0; j < m; ++j)
                conv[i - m + j] = F.add(conv[i - m + j], F.neg(F.mul(lead, mod[j])));
        }
        T r = zero();
        for (unsigned i = 0; i < m; ++i) r[i] = conv[i];
        return r;
    }

    T add(const T& a, const T& b) const {
        T r = zero();
        for (unsigned i = 0; i < m; ++i) r[i] = F.add(a[i], b[i]);
        return r;
    }

    T frob(const T& a) const {
        T r = zero();
        for (unsigned i = 0; i < m; ++i) {
            if (F.is_zero(a[i])) continue;
            for (unsigned j = 0; j < m; ++j)
                r[j] = F.add(r[j], F.mul(a[i], frob_img[i][j]));
        }
        return r;
    }

    int chi(const T& a) const {
        // chi_{q^m} = chi_q . Norm
        T nrm = a;
        T conj = a;
        for (unsigned i = 1; i < m; ++i) {
            conj = frob(conj);
            nrm = mul(nrm, conj);
        }
        return F.chi(nrm[0]);
    }
};

// affine count over the base field itself (m = 1)
template <class Ops>
u64 count_affine_base(const Ops& F, const std::vector<typename Ops::Elt>& fc, u64 lo, u64 hi) {
    const std::size_t d = fc.size() - 1;
    u64 total = 0;
    for (u64 i = lo; i < hi; ++i) {
        auto x = F.elt_by_index(i);
        auto y = fc[d];
        for (std::size_t j = d; j-- > 0;) y = F.add(F.mul(y, x), fc[j]);
        total += static_cast<u64>(1 + F.chi(y));
    }
    return total;
}

// affine count over the degree-m tower
template <class Ops>
u64 count_affine_tower(const Tower<Ops>& T, const std::vector<typename Tower<Ops>::T>& fc,
                       u64 q, u64 lo, u64 hi) {
    const std::size_t d = fc.size() - 1;
    const unsigned m = T.m;
    u64 total = 0;
    // odometer over the m base-field digits of the tuple index
    std::array<u64, 6> digit{};
    typename Tower<Ops>::T x = T.zero();
    u64 idx = lo;
    for (unsigned j = 0; j < m; ++j) {
        digit[j] = idx % q;
        x[j] = T.F.elt_by_index(digit[j]);
        idx /= q;
    }
    for (u64 i = lo; i < hi; ++i) {
        auto y = fc[d];
        for (std::size_t j = d; j-- > 0;) y = T.add(T.mul(y, x), fc[j]);
        total += static_cast<u64>(1 + T.chi(y));
        // increment
        for (unsigned j = 0; j < m; ++j) {
            if (++digit[j] < q) {
                x[j] = T.F.elt_by_index(digit[j]);
                break;
            }
            digit[j] = 0;
            x[j] = T.F.elt_by_index(0);
        }
    }
    return total;
}

template <class Fn>
u64 parallel_sum(u64 total_range, unsigned workers, Fn&& fn) {
    unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    if (total_range < (u64{1} << 16)) w = 1;
    if (w <= 1) return fn(0, total_range);
    std::vector<u64> parts(w, 0);
    std::vector<std::thread> threads;
    u64 chunk = (total_range + w - 1) / w;
    for (unsigned t = 0; t < w; ++t) {
        u64 lo = std::min<u64>(total_range, t * chunk);
        u64 hi = std::min<u64>(total_range, lo + chunk);
        threads.emplace_back([&parts, &fn, t, lo, hi] { parts[t] = fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
    return std::accumulate(parts.begin(), parts.end(), u64{0});
}

template <class Ops>
u64 count_points_with(const Ops& F, const Curve& C, unsigned m, u64 evals, unsigned workers) {
    std::vector<typename Ops::Elt> fc;
    for (int i = 0; i <= C.f().degree(); ++i) fc.push_back(F.code(C.f().coeff(i)));
    u64 affine;
    int chi_lead = F.chi(fc.back());
    if (m == 1) {
        affine = parallel_sum(evals, workers,
                              [&](u64 lo, u64 hi) { return count_affine_base(F, fc, lo, hi); });
    } else {
        Tower<Ops> T(F, C.ctx(), m);
        std::vector<typename Tower<Ops>::T> fct;
        for (const auto& c : fc) fct.push_back(T.constant(c));
        const u64 q = C.ctx()->order();
        affine = parallel_sum(evals, workers, [&](u64 lo, u64 hi) {
            return count_affine_tower(T, fct, q, lo, hi);
        });
    }
    // points at infinity: 1 on a degree-7 model; 1 + chi(lc) on degree 8,
    // where chi is taken in F_{q^m} and chi_{q^m}(lc) = chi_q(lc)^m
    if (C.model_degree() == 7) return affine + 1;
    int c = (m % 2 == 0) ? 1 : chi_lead;  // lc != 0
    return affine + static_cast<u64>(1 + c);
}

i128 ipow(i128 b, unsigned e) {
    i128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

i64 narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) raise(ErrorCode::Overflow, what);
    return static_cast<i64>(v);
}

}  // namespace

std::uint64_t point_count(const Curve& C, unsigned m, const CountOptions& opts) {
    if (m < 1 || m > 6) raise(ErrorCode::DegreeOutOfRange, "extension step m must be in 1..6");
    const u64 q = C.ctx()->order();
    const u64 evals = sat_pow(q, m);
    if (evals > opts.budget)
        raise(ErrorCode::BudgetExceeded,
              "q^m = " + std::to_string(evals) + " evaluations exceed the budget");
    if (q <= kZechMax) {
        ZechField F(*C.ctx());
        return count_points_with(F, C, m, evals, opts.workers);
    }
    GenField F(*C.ctx());
    return count_points_with(F, C, m, evals, opts.workers);
}

std::array<std::int64_t, 3> l_polynomial(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3,
                                         std::uint64_t q) {
    const i128 qq = static_cast<i128>(q);
    const std::array<i128, 4> N{0, static_cast<i128>(n1), static_cast<i128>(n2),
                                static_cast<i128>(n3)};
    std::array<i128, 4> s{};
    for (unsigned mm = 1; mm <= 3; ++mm) {
        s[mm] = ipow(qq, mm) + 1 - N[mm];
        if (s[mm] * s[mm] > 36 * ipow(qq, mm))
            raise(ErrorCode::WeilViolation, "count N_" + std::to_string(mm) +
                                                " violates the Weil bound");
    }
    i128 e1 = s[1];
    i128 t = e1 * s[1] - s[2];
    if (t % 2 != 0) raise(ErrorCode::NonIntegralCoefficient, "a2 is not an integer");
    i128 e2 = t / 2;
    t = e2 * s[1] - e1 * s[2] + s[3];
    if (t % 3 != 0) raise(ErrorCode::NonIntegralCoefficient, "a3 is not an integer");
    i128 e3 = t / 3;
    return {narrow(-e1, "a1"), narrow(e2, "a2"), narrow(-e3, "a3")};
}

std::vector<std::int64_t> power_sums(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                     std::uint64_t q, unsigned n) {
    const i128 qq = static_cast<i128>(q);
    // e_i = (-1)^i L_i from L = 1 + a1 T + a2 T^2 + a3 T^3 + q a2 T^4 + q^2 a1 T^5 + q^3 T^6
    std::array<i128, 7> e{};
    e[1] = -static_cast<i128>(a1);
    e[2] = static_cast<i128>(a2);
    e[3] = -static_cast<i128>(a3);
    e[4] = qq * a2;
    e[5] = -(qq * qq * a1);
    e[6] = qq * qq * qq;
    std::vector<i128> p(n + 1, 0);
    for (unsigned mm = 1; mm <= n; ++mm) {
        i128 acc = 0;
        unsigned top = std::min<unsigned>(mm - 1, 6);
        for (unsigned i = 1; i <= top; ++i) {
            i128 term = e[i] * p[mm - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (mm <= 6) {
            i128 term = static_cast<i128>(mm) * e[mm];
            acc += (mm % 2 == 1) ? term : -term;
        }
        p[mm] = acc;
    }
    std::vector<i64> out;
    for (unsigned mm = 1; mm <= n; ++mm) out.push_back(narrow(p[mm], "power sum"));
    return out;
}

std::vector<Slope> newton_slopes(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                 std::uint64_t p, unsigned k) {
    const i128 qq = ipow(static_cast<i128>(p), k);
    std::array<i128, 7> L{1,
                          static_cast<i128>(a1),
                          static_cast<i128>(a2),
                          static_cast<i128>(a3),
                          qq * a2,
                          qq * qq * a1,
                          qq * qq * qq};
    // finite points (i, v_p(L_i))
    std::vector<std::pair<i64, i64>> pts;
    for (int i = 0; i <= 6; ++i) {
        if (L[i] == 0) continue;
        i128 v = L[i] < 0 ? -L[i] : L[i];
        i64 val = 0;
        while (v % p == 0) {
            v /= p;
            ++val;
        }
        pts.emplace_back(i, val);
    }
    // lower convex hull, left to right
    std::vector<std::pair<i64, i64>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull[hull.size() - 1];
            // keep if (x2,y2) is strictly below segment (x1,y1)-(pt)
            if ((y2 - y1) * (pt.first - x1) < (pt.second - y1) * (x2 - x1)) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<Slope> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        i64 num = hull[i].second - hull[i - 1].second;
        i64 den = hull[i].first - hull[i - 1].first;
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) g = 1;
        slopes.push_back(Slope{num / g, den / g, static_cast<int>(den)});
    }
    return slopes;
}

ZetaData zeta_data(const Curve& C, const CountOptions& opts) {
    const u64 q = C.ctx()->order();
    u64 need = 0;
    for (unsigned mm = 1; mm <= 3; ++mm) {
        u64 e = sat_pow(q, mm);
        need = (need > UINT64_MAX - e) ? UINT64_MAX : need + e;
    }
    if (need > opts.budget)
        raise(ErrorCode::BudgetExceeded, "q + q^2 + q^3 evaluations exceed the budget");
    ZetaData z;
    z.q = q;
    for (unsigned mm = 1; mm <= 3; ++mm) z.counts[mm - 1] = point_count(C, mm, opts);
    auto a = l_polynomial(z.counts[0], z.counts[1], z.counts[2], q);
    z.lcoeffs = a;
    // round trip: the L-polynomial must reproduce the counts it came from
    auto s = power_sums(a[0], a[1], a[2], q, 3);
    for (unsigned mm = 1; mm <= 3; ++mm) {
        i128 expect = ipow(static_cast<i128>(q), mm) + 1 - s[mm - 1];
        if (expect != static_cast<i128>(z.counts[mm - 1]))
            raise(ErrorCode::Internal, "L-polynomial does not reproduce the point counts");
    }
    z.slopes = newton_slopes(a[0], a[1], a[2], C.ctx()->p(), C.ctx()->k());
    const unsigned k = C.ctx()->k();
    bool ss = true;
    for (const auto& sl : z.slopes)
        if (sl.num * 2 != static_cast<i64>(k) * sl.den) ss = false;
    z.verdict = ss ? Verdict::Supersingular : Verdict::NotSupersingular;
    return z;
}

SupersingularReport is_supersingular(const Curve& C, const CartierData& cd,
                                     const CountOptions& opts) {
    SupersingularReport rep;
    rep.nilpotent = cd.nilpotent;
    rep.p_rank = cd.p_rank;
    if (!cd.nilpotent) {
        // positive p-rank forces a slope-0 segment; no counting needed
        rep.verdict = Verdict::NotSupersingular;
        return rep;
    }
    try {
        rep.zeta = zeta_data(C, opts);
        rep.verdict = rep.zeta->verdict;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        rep.verdict = Verdict::Indeterminate;
    }
    return rep;
}

SupersingularReport is_supersingular(const Curve& C, const CountOptions& opts) {
    return is_supersingular(C, cartier_manin(C), opts);
}

}  // namespace g3ss
