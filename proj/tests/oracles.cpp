#include "oracles.hpp"

namespace g3ss::oracle {

namespace {

// Schoolbook product of dense coefficient vectors; no shared code with Poly.
std::vector<FieldElement> mul_naive(const FieldCtx& F, const std::vector<FieldElement>& a,
                                    const std::vector<FieldElement>& b) {
    std::vector<FieldElement> out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

bool lower_triangular_scan(const Mat3& M) {
    for (int r = 0; r < 3; ++r)
        for (int c = r; c < 3; ++c)
            if (!M.at(r, c).is_zero()) return false;
    return true;
}

Mat3 naive_matrix_of(const FieldCtxPtr& ctx, const std::vector<FieldElement>& f) {
    const FieldCtx& F = *ctx;
    const std::uint64_t e = (F.p() - 1) / 2;
    std::vector<FieldElement> g{F.one()};
    for (std::uint64_t i = 0; i < e; ++i) g = mul_naive(F, g, f);
    Mat3 M = Mat3::zero(ctx);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::uint64_t idx = static_cast<std::uint64_t>(i) * F.p() - j;
            if (idx < g.size()) M.at(i - 1, j - 1) = g[idx];
        }
    return M;
}

}  // namespace

Mat3 naive_matrix(const Curve& C) {
    return naive_matrix_of(C.ctx(), C.f().coeffs());
}

TouchpointScan exhaustive_touchpoint(const Curve& C) {
    const FieldCtx& base = *C.ctx();
    FieldCtxPtr ext = build_field(base.p(), 2 * base.k());
    // Lift an F_p curve into the quadratic extension coefficient by
    // coefficient (tests only use prime-field curves here).
    std::vector<FieldElement> f;
    for (const FieldElement& c : C.f().coeffs())
        f.push_back(ext->from_int(static_cast<std::int64_t>(c.coeff(0))));
    Poly fe(ext, f);

    TouchpointScan scan;
    for (std::uint64_t idx = 0; idx < ext->order(); ++idx) {
        FieldElement c = ext->element_from_index(idx);
        if (lower_triangular_scan(naive_matrix_of(ext, fe.shift(c).coeffs())))
            scan.finite.push_back(c);
    }
    // x -> 1/x: coefficient i of x^8 f(1/x) is coefficient 8-i of f.
    std::vector<FieldElement> rev(9, ext->zero());
    for (std::size_t i = 0; i < f.size(); ++i) rev[8 - i] = f[i];
    while (!rev.empty() && rev.back().is_zero()) rev.pop_back();
    scan.infinity = lower_triangular_scan(naive_matrix_of(ext, rev));
    return scan;
}

std::vector<std::vector<std::uint64_t>> no_shortcut_search(const SearchSpec& spec) {
    auto ctx = build_field(spec.p, 1);
    const unsigned arity = spec.family == Family::Odd ? 3 : 7;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < arity; ++i) total *= spec.p;

    std::vector<std::vector<std::uint64_t>> hits;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint64_t> t(arity);
        std::uint64_t v = idx;
        for (unsigned i = arity; i-- > 0;) {
            t[i] = v % spec.p;
            v /= spec.p;
        }
        std::vector<std::int64_t> c(8, 0);
        c[7] = 1;
        if (spec.family == Family::Odd) {
            c[5] = static_cast<std::int64_t>(t[0]);
            c[3] = static_cast<std::int64_t>(t[1]);
            c[1] = static_cast<std::int64_t>(t[2]);
        } else {
            for (unsigned i = 0; i < 7; ++i) c[6 - i] = static_cast<std::int64_t>(t[i]);
        }
        Poly f = Poly::from_ints(ctx, c);
        if (!f.is_squarefree()) continue;
        CountOptions opts;
        opts.budget = spec.budget;
        opts.workers = 1;
        if (classify(Curve::make(ctx, f), opts).outcome == Outcome::NonTransversal)
            hits.push_back(std::move(t));
    }
    return hits;
}

}  // namespace g3ss::oracle
