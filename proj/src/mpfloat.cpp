#include "octmf/mpfloat.hpp"
#include "octmf/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace octmf {

mpfr_prec_t digits_to_prec(int digits) {
    return mpfr_prec_t(double(digits) * 3.3219280948873626) + 64;
}

MpComplex csqrt(const MpComplex& z) {
    // principal branch
    mpfr_prec_t pr = z.prec();
    MpFloat r = abs(z);
    MpFloat two = MpFloat::from_double(2.0, pr);
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), MpFloat(pr)};
        return {MpFloat(pr), sqrt(-z.re)};
    }
    MpFloat u = sqrt((r + z.re) / two);
    MpFloat v = sqrt((r - z.re) / two);
    if (z.im.sign() < 0) v = -v;
    return {u, v};
}

static MpComplex eval_poly(const std::vector<MpComplex>& c, const MpComplex& z) {
    MpComplex acc(z.prec());
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<MpComplex> complex_roots(const RationalPoly& f, int digits) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("complex_roots: constant polynomial");
    {
        // squarefreeness check: gcd(f, f') must be constant <=> disc != 0
        if (n >= 2 && poly_discriminant(f) == 0)
            throw std::invalid_argument("complex_roots: not squarefree");
    }
    mpfr_prec_t prec = digits_to_prec(digits) * 2;
    std::vector<MpComplex> c;
    c.reserve(n + 1);
    RationalPoly g = monic(f);
    for (int i = 0; i <= n; ++i)
        c.push_back(MpComplex(MpFloat::from_rat(g.coeff(i), prec), MpFloat(prec)));

    // Durand-Kerner from a deterministic spiral of starting values
    std::vector<MpComplex> z;
    double radius = 1.0;
    for (int i = 0; i <= n; ++i) {
        double a = std::abs(g.coeff(i).get_d());
        radius = std::max(radius, 2.0 * std::pow(a, 1.0 / (n - i ? n - i : 1)));
    }
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * 3.14159265358979323846 * i / n + 0.5;
        z.emplace_back(MpFloat::from_double(0.7 * radius * std::cos(ang), prec),
                       MpFloat::from_double(0.7 * radius * std::sin(ang) + 0.1, prec));
    }
    MpFloat tol = MpFloat::from_double(10.0, prec);
    {
        // tol = 10^(-digits-5)
        mpfr_t t;
        mpfr_init2(t, prec);
        mpfr_set_ui(t, 10, MPFR_RNDN);
        mpfr_pow_si(t, t, -(long)digits - 5, MPFR_RNDN);
        mpfr_set(tol.raw(), t, MPFR_RNDN);
        mpfr_clear(t);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        MpFloat worst(prec);
        for (int i = 0; i < n; ++i) {
            MpComplex num = eval_poly(c, z[i]);
            MpComplex den(prec);
            den.re = MpFloat::from_double(1.0, prec);
            for (int j = 0; j < n; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            MpComplex delta = num / den;
            z[i] = z[i] - delta;
            MpFloat d = abs(delta);
            if (worst < d) worst = d;
        }
        if (!(worst > tol)) break;
        if (iter == 1999) throw std::runtime_error("complex_roots: no convergence");
    }
    // snap tiny imaginary parts of real roots: pair conjugates instead of zeroing;
    // sorting only, values stay as computed
    std::sort(z.begin(), z.end(), [](const MpComplex& a, const MpComplex& b) {
        if (mpfr_cmp(a.re.raw(), b.re.raw()) != 0) return mpfr_cmp(a.re.raw(), b.re.raw()) < 0;
        return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
    });
    return z;
}

}  // namespace octmf
