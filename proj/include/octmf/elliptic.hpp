#pragma once

#include "octmf/arith.hpp"

namespace octmf {

struct CurvePoint {
    bool infinity = true;
    Rat x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rat px, Rat py) { return CurvePoint{false, std::move(px), std::move(py)}; }
    bool operator==(const CurvePoint& o) const {
        if (infinity != o.infinity) return false;
        return infinity || (x == o.x && y == o.y);
    }
    std::string str() const;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
    Rat a1, a2, a3, a4, a6;

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
    Rat discriminant() const;
    bool on_curve(const CurvePoint& p) const;
};

CurvePoint negate_point(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);

// 4x^3 + b2 x^2 + 2 b4 x + b6, the square of the 2-division polynomial.
RationalPoly two_division_cubic(const WeierstrassCurve& e);

// Monic quartic whose roots are x(Q) for the four Q with 2Q = P.
RationalPoly halving_quartic(const WeierstrassCurve& e, const CurvePoint& p);

// p + 1 - #E(F_p) by direct counting; requires good reduction and p <= 10^5.
long ap(const WeierstrassCurve& e, const Int& p);

}  // namespace octmf
