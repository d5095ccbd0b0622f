#pragma once

#include "octmf/poly.hpp"

#include <mpfr.h>

namespace octmf {

// Minimal RAII wrapper around mpfr_t.  Precision is fixed per value and
// propagates through arithmetic (max of operands).
class MpFloat {
  public:
    explicit MpFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpFloat(const MpFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpFloat(MpFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    MpFloat& operator=(MpFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~MpFloat() { mpfr_clear(v_); }

    static MpFloat from_rat(const Rat& q, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static MpFloat from_double(double d, mpfr_prec_t prec) {
        MpFloat r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    // nearest integer plus |x - nearest|
    Int round_to_int() const {
        MpFloat r(prec());
        mpfr_round(r.v_, v_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
        return z;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend MpFloat operator+(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator-(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator*(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat operator/(const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    MpFloat operator-() const {
        MpFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }

    friend MpFloat abs(const MpFloat& a) {
        MpFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpFloat sqrt(const MpFloat& a) {
        MpFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

struct MpComplex {
    MpFloat re, im;

    explicit MpComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    MpComplex(MpFloat r, MpFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    MpComplex operator-() const { return {-re, -im}; }

    friend MpFloat abs2(const MpComplex& a) { return a.re * a.re + a.im * a.im; }
    friend MpFloat abs(const MpComplex& a) { return sqrt(abs2(a)); }

    MpComplex conj() const { return {re, -im}; }
};

MpComplex csqrt(const MpComplex& z);

// digits = decimal digits of working precision.
mpfr_prec_t digits_to_prec(int digits);

// All complex roots of a squarefree polynomial, each within 10^(-digits+10)
// of a true root; sorted by (real part, imaginary part).
std::vector<MpComplex> complex_roots(const RationalPoly& f, int digits);

}  // namespace octmf
