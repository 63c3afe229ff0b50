#include "g3ss/cartier.hpp"

namespace g3ss {

Mat3 Mat3::zero(const FieldCtxPtr& ctx) {
    Mat3 m;
    for (auto& e : m.e_) e = ctx->zero();
    return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            FieldElement s = at(i, 0) * o.at(0, j);
            for (unsigned l = 1; l < 3; ++l) s = s + at(i, l) * o.at(l, j);
            r.at(i, j) = s;
        }
    return r;
}

Mat3 Mat3::operator*(const FieldElement& c) const {
    Mat3 r;
    for (unsigned i = 0; i < 9; ++i) r.e_[i] = e_[i] * c;
    return r;
}

bool Mat3::operator==(const Mat3& o) const {
    for (unsigned i = 0; i < 9; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Mat3 Mat3::frobenius(unsigned r) const {
    Mat3 m;
    for (unsigned i = 0; i < 9; ++i) m.e_[i] = g3ss::frobenius(e_[i], r);
    return m;
}

bool Mat3::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

Vec3 Mat3::apply(const Vec3& v) const {
    Vec3 r;
    for (unsigned i = 0; i < 3; ++i) {
        FieldElement s = at(i, 0) * v[0];
        for (unsigned j = 1; j < 3; ++j) s = s + at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

namespace {

// Reduced row echelon form of a list of row vectors. Returns nonzero rows,
// pivots strictly increasing left to right, pivot entries 1, pivot columns
// cleared. Unique for a given row space.
std::vector<Vec3> rref_rows(std::vector<Vec3> rows) {
    if (rows.empty()) return rows;
    const FieldCtx& F = rows[0][0].ctx();
    std::size_t r = 0;
    for (unsigned col = 0; col < 3 && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        FieldElement inv = rows[r][col].inv();
        for (unsigned j = 0; j < 3; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            FieldElement c = rows[i][col];
            for (unsigned j = 0; j < 3; ++j) rows[i][j] = rows[i][j] - c * rows[r][j];
        }
        ++r;
    }
    rows.resize(r, {F.zero(), F.zero(), F.zero()});
    rows.resize(r);
    return rows;
}

std::vector<Vec3> matrix_rows(const Mat3& M) {
    std::vector<Vec3> rows(3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) rows[i][j] = M.at(i, j);
    return rows;
}

// Nullspace of M from its RREF, then canonicalized.
std::vector<Vec3> nullspace(const Mat3& M) {
    const FieldCtx& F = M.at(0, 0).ctx();
    std::vector<Vec3> R = rref_rows(matrix_rows(M));
    std::array<int, 3> pivot_row{-1, -1, -1};
    for (std::size_t i = 0; i < R.size(); ++i)
        for (unsigned j = 0; j < 3; ++j)
            if (!R[i][j].is_zero()) {
                pivot_row[j] = static_cast<int>(i);
                break;
            }
    std::vector<Vec3> basis;
    for (unsigned j = 0; j < 3; ++j) {
        if (pivot_row[j] >= 0) continue;  // pivot column
        Vec3 v{F.zero(), F.zero(), F.zero()};
        v[j] = F.one();
        for (unsigned c = 0; c < 3; ++c)
            if (pivot_row[c] >= 0) v[c] = -R[static_cast<std::size_t>(pivot_row[c])][j];
        basis.push_back(v);
    }
    return rref_rows(std::move(basis));
}

}  // namespace

int Mat3::rank() const { return static_cast<int>(rref_rows(matrix_rows(*this)).size()); }

std::vector<Vec3> canonical_span(std::vector<Vec3> vecs) { return rref_rows(std::move(vecs)); }

std::vector<Vec3> semilinear_kernel(const Mat3& M, int depth) {
    if (depth == 1) return nullspace(M);
    if (depth == 2) return nullspace(M.frobenius(1) * M);
    raise(ErrorCode::DegreeOutOfRange, "kernel depth must be 1 or 2");
}

int p_rank(const Mat3& M) { return (M.frobenius(2) * M.frobenius(1) * M).rank(); }

bool is_strictly_lower_triangular(const Mat3& M) {
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i; j < 3; ++j)
            if (!M.at(i, j).is_zero()) return false;
    return true;
}

CartierData cartier_manin(const Curve& C) {
    const FieldCtxPtr& ctx = C.ctx();
    const std::uint64_t p = ctx->p();
    Poly g = C.f().pow((p - 1) / 2);
    CartierData d;
    d.M = Mat3::zero(ctx);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) {
            std::uint64_t idx = i * p - j;  // out-of-range coefficients read as 0
            d.M.at(i - 1, j - 1) = g.coeff(idx);
        }
    d.ker_c = semilinear_kernel(d.M, 1);
    d.ker_c2 = semilinear_kernel(d.M, 2);
    d.a_number = 3 - d.M.rank();
    Mat3 c3 = d.M.frobenius(2) * d.M.frobenius(1) * d.M;
    d.nilpotent = c3.is_zero();
    d.p_rank = c3.rank();
    return d;
}

}  // namespace g3ss
