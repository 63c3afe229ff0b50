#pragma once

#include "g3ss/poly.hpp"

namespace g3ss {

/// Genus-3 hyperelliptic model y^2 = f(x) with deg f in {7, 8}, f squarefree,
/// over F_q of odd characteristic. Immutable once built.
class Curve {
public:
    static Curve make(FieldCtxPtr ctx, Poly f);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const Poly& f() const { return f_; }
    int model_degree() const { return f_.degree(); }

    /// y^2 = f(x + c); the point with x-coordinate x0 moves to x0 - c.
    Curve shifted(const FieldElement& c) const;

    /// y^2 = x^8 f(1/x); x-coordinates transform as x0 -> 1/x0, the points
    /// over x = 0 and over x = infinity swap. Preserves geometric invariants
    /// only (a non-square leading coefficient changes the F_q-twist).
    Curve inverted() const;

    bool operator==(const Curve& o) const { return ctx_ == o.ctx_ && f_ == o.f_; }

private:
    Curve(FieldCtxPtr ctx, Poly f) : ctx_(std::move(ctx)), f_(std::move(f)) {}

    FieldCtxPtr ctx_;
    Poly f_;
};

}  // namespace g3ss
