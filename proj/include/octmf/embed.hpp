#pragma once

#include "octmf/mpfloat.hpp"
#include "octmf/poly.hpp"

namespace octmf {

// Bivariate integer polynomial in x1, x2 together with a rational scalar:
// gamma(x1, x2) = scalar * sum coeff * x1^d1 * x2^d2.
struct GammaExpression {
    struct Term {
        Int coeff;
        int d1, d2;
    };
    std::vector<Term> terms;
    Rat scalar = 1;

    MpComplex eval(const MpComplex& x1, const MpComplex& x2, mpfr_prec_t prec) const;
    static GammaExpression parse(const std::string& text);  // data-file format
    std::string serialize() const;
};

// det(V * P * C + id) where V has rows (1, x_i, x_i^2, x_i^3) and C is the
// block with entries 1, 1, 1/2, ±1/(2 sqrt(D)).
MpComplex gamma_determinant(const std::vector<MpComplex>& roots,
                            const std::vector<std::vector<Rat>>& P, const Int& D, int digits);

// test oracle: cofactor-expansion determinant of a 4x4 complex matrix
MpComplex det4_cofactor(const std::vector<std::vector<MpComplex>>& m);

// evaluations of gamma at all 12 ordered pairs of distinct quartic roots
std::vector<MpComplex> gamma_conjugates(const RationalPoly& quartic, const GammaExpression& gamma,
                                        int digits);

// expand prod_i (t^2 - c*gamma_i), round to integers, verify the rounding
// residual and squarefreeness; automatic precision doubling on failure is the
// caller's job (the residual is reported via the exception message).
RationalPoly minpoly_sqrt_gamma(const std::vector<MpComplex>& conjugates, const Rat& c, int digits);

// expand prod_i (t - c*gamma_i): the degree-12 polynomial of c*gamma itself
// (with c clearing the scalar, the coefficients are integers)
RationalPoly minpoly_gamma(const std::vector<MpComplex>& conjugates, const Rat& c, int digits);

}  // namespace octmf
