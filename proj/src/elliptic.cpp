#include "octmf/elliptic.hpp"

#include <sstream>

namespace octmf {

std::string CurvePoint::str() const {
    if (infinity) return "O";
    std::ostringstream os;
    os << "(" << x.get_str() << ", " << y.get_str() << ")";
    return os.str();
}

Rat WeierstrassCurve::discriminant() const {
    Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

bool WeierstrassCurve::on_curve(const CurvePoint& p) const {
    if (p.infinity) return true;
    Rat lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
    Rat rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
    return lhs == rhs;
}

CurvePoint negate_point(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
    if (!e.on_curve(p) || !e.on_curve(q)) throw std::invalid_argument("add_points: point not on curve");
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rat lambda;
    if (p.x == q.x) {
        if (p.y != q.y || (2 * p.y + e.a1 * p.x + e.a3) == 0) return CurvePoint::at_infinity();
        lambda = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) /
                 (2 * p.y + e.a1 * p.x + e.a3);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
    Rat y3 = lambda * (p.x - x3) - p.y - e.a1 * x3 - e.a3;
    return CurvePoint::affine(x3, y3);
}

RationalPoly two_division_cubic(const WeierstrassCurve& e) {
    return RationalPoly({e.b6(), 2 * e.b4(), e.b2(), Rat(4)});
}

RationalPoly halving_quartic(const WeierstrassCurve& e, const CurvePoint& p) {
    if (e.discriminant() == 0) throw std::invalid_argument("halving_quartic: singular curve");
    if (p.infinity) throw std::invalid_argument("halving_quartic: P = O");
    if (add_points(e, p, p).infinity) throw std::invalid_argument("halving_quartic: 2P = O");
    Rat B2 = e.b2(), B4 = e.b4(), B6 = e.b6(), B8 = e.b8();
    // x(2Q) numerator minus x(P) * denominator
    RationalPoly num({-B8, -2 * B6, -B4, Rat(0), Rat(1)});
    RationalPoly den({B6, 2 * B4, B2, Rat(4)});
    RationalPoly quartic = num - p.x * den;
    quartic = monic(quartic);
    if (poly_discriminant(quartic) == 0)
        throw std::invalid_argument("halving_quartic: quartic not squarefree");
    return quartic;
}

long ap(const WeierstrassCurve& e, const Int& pz) {
    if (!is_prime(pz) || pz > 100000) throw std::invalid_argument("ap: bad prime");
    long p = pz.get_si();
    // reject bad reduction: p must not divide the discriminant numerator
    Rat disc = e.discriminant();
    if (Int(disc.get_den()) % pz == 0) throw std::invalid_argument("ap: curve not p-integral");
    if (Int(disc.get_num()) % pz == 0) throw std::invalid_argument("ap: bad reduction at p");
    auto red = [&](const Rat& r) -> long {
        Int den = r.get_den();
        if (den % pz == 0) throw std::invalid_argument("ap: coefficient not p-integral");
        Int dinv;
        mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        Int v = (Int(r.get_num()) % pz) * dinv % pz;
        if (v < 0) v += pz;
        return v.get_si();
    };
    long a1 = red(e.a1), a2 = red(e.a2), a3 = red(e.a3), a4 = red(e.a4), a6 = red(e.a6);
    long count = 1;  // point at infinity
    if (p == 2) {
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                long lhs = (y * y + a1 * x * y + a3 * y) % 2;
                long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if (lhs == rhs) ++count;
            }
        return 2 + 1 - count;
    }
    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::vector<int8_t> qr(p, -1);
    for (long t = 0; t < p; ++t) qr[(t * t) % p] = 1;
    long b2 = red(e.b2()), b4 = red(e.b4()), b6 = red(e.b6());
    for (long x = 0; x < p; ++x) {
        unsigned __int128 v = (unsigned __int128)4 * x % p * x % p * x % p;
        v = (v + (unsigned __int128)b2 * x % p * x % p) % p;
        v = (v + (unsigned __int128)2 * b4 % p * x % p) % p;
        v = (v + b6) % p;
        long vv = long(v);
        if (vv == 0) count += 1;
        else count += 1 + qr[vv];
    }
    return p + 1 - count;
}

}  // namespace octmf
