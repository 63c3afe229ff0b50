#pragma once

#include <array>
#include <vector>

#include "g3ss/curve.hpp"

namespace g3ss {

using Vec3 = std::array<FieldElement, 3>;

/// 3x3 matrix over a field context, row-major.
class Mat3 {
public:
    Mat3() = default;
    static Mat3 zero(const FieldCtxPtr& ctx);

    const FieldElement& at(unsigned r, unsigned c) const { return e_[3 * r + c]; }
    FieldElement& at(unsigned r, unsigned c) { return e_[3 * r + c]; }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator*(const FieldElement& c) const;
    bool operator==(const Mat3& o) const;

    /// Entrywise x -> x^(p^r).
    Mat3 frobenius(unsigned r) const;

    bool is_zero() const;
    int rank() const;
    Vec3 apply(const Vec3& v) const;

private:
    std::array<FieldElement, 9> e_;
};

/// Cartier-Manin data of a curve: M = (c_{ip-j}) with f^((p-1)/2) = sum c_i x^i,
/// rows/columns indexed 1..3; the semilinear convention C(v) = (M v)^(1/p)
/// gives ker C = ker M, ker C^2 = ker(M^(p) M), C^3 ~ M^(p^2) M^(p) M.
struct CartierData {
    Mat3 M;
    int a_number = 0;                // 3 - rank(M) = dim ker C
    std::vector<Vec3> ker_c;         // reduced echelon basis of ker M
    std::vector<Vec3> ker_c2;        // reduced echelon basis of ker(M^(p) M)
    bool nilpotent = false;          // M^(p^2) M^(p) M = 0
    int p_rank = 0;                  // rank of M^(p^2) M^(p) M
};

CartierData cartier_manin(const Curve& C);

/// Basis of ker M (depth 1) or ker(M^(p) M) (depth 2), reduced echelon,
/// deterministic.
std::vector<Vec3> semilinear_kernel(const Mat3& M, int depth);

/// Rank of M^(p^2) M^(p) M.
int p_rank(const Mat3& M);

bool is_strictly_lower_triangular(const Mat3& M);

/// Canonical reduced-row-echelon basis of the span of the given vectors;
/// two lists span the same subspace iff their canonical bases are equal.
std::vector<Vec3> canonical_span(std::vector<Vec3> vecs);

}  // namespace g3ss
