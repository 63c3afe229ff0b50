#include "g3ss/curve.hpp"

namespace g3ss {

Curve Curve::make(FieldCtxPtr ctx, Poly f) {
    if (ctx->p() == 2) raise(ErrorCode::EvenCharacteristic, "curves need odd characteristic");
    if (f.degree() != 7 && f.degree() != 8)
        raise(ErrorCode::BadDegree, "deg f = " + std::to_string(f.degree()) + ", want 7 or 8");
    if (!f.is_squarefree()) raise(ErrorCode::NotSquarefree, "f has a repeated root");
    return Curve(std::move(ctx), std::move(f));
}

Curve Curve::shifted(const FieldElement& c) const { return make(ctx_, f_.shift(c)); }

Curve Curve::inverted() const { return make(ctx_, f_.reverse8()); }

}  // namespace g3ss
