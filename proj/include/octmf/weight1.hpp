#pragma once

#include "octmf/halfint.hpp"
#include "octmf/poly.hpp"

#include <map>

namespace octmf {

// Product of sign variables s_q over a set of primes; empty = 1.
using SignMonomial = std::vector<long>;  // sorted, distinct

SignMonomial monomial_mul(const SignMonomial& a, const SignMonomial& b);  // symmetric difference

// Coefficient of a weight-1 form with per-prime sign ambiguities:
//   value = sum over monomials M of  (x_M + y_M sqrt(-2)) * prod_{q in M} s_q.
struct SymCoeff {
    bool known = true;
    std::map<SignMonomial, QNum> t;

    bool clean() const { return known && (t.empty() || (t.size() == 1 && t.begin()->first.empty())); }
    QNum value() const {
        auto it = t.find(SignMonomial{});
        return it == t.end() ? QNum() : it->second;
    }
};

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b);
SymCoeff sym_mul(const SymCoeff& a, const SymCoeff& b);
SymCoeff sym_scale(const Rat& s, const SymCoeff& a);

// Per-prime trace data for the attached 2-dimensional representation.
// The ambiguous kinds carry a sign variable s_p: value = s_p * sqrt(-2),
// s_p * 2 or s_p * 1 respectively.
struct PrimeTrace {
    enum Kind { rational, pm_sqrt_m2, pm_two, pm_one, unknown } kind = unknown;
    Rat value;  // for rational
};

// Weight-1 q-expansion with symbolic signs at the ambiguous primes.
struct Weight1Form {
    long level = 1;
    Int character_D;            // nebentypus = kronecker(character_D, .), zero at p | level
    std::vector<SymCoeff> a;    // indices 0..B, a[0] = 0, a[1] = 1
    std::vector<long> ambiguous_primes;
    std::map<long, PrimeTrace> traces;
};

// trace of Frobenius at an unramified prime.  The degree-24 resolvent pins
// the class completely; when p divides its index, the quartic or the
// degree-12 resolvent of gamma still pin the underlying S4-class, leaving a
// ±1 (3-cycle), ±2 (identity image) or ±sqrt(-2) (4-cycle) ambiguity for the
// downstream Hecke resolution.
PrimeTrace frobenius_trace_at(const RationalPoly& quartic, const RationalPoly& poly24,
                              const RationalPoly& poly12, const Int& D, const Int& p);

// a_p at a ramified prime p || level: +1/-1 by the degree (1 or 2) of the
// multiplicity-one part of poly24 mod p
Rat ramified_ap(const RationalPoly& poly24, const Int& p);

// Full coefficient table a_1..a_B. ramified_overrides may pin a_p at chosen
// primes (takes precedence over every rule).
Weight1Form weight1_coefficients(const RationalPoly& quartic, const RationalPoly& poly24,
                                 const RationalPoly& poly12, const Int& disc_char, long level,
                                 int B, const std::map<long, Rat>& ramified_overrides = {},
                                 int jobs = 1,
                                 const std::map<long, PrimeTrace>& trace_overrides = {});

// collapse under a partial sign assignment (prime -> ±1); coefficients whose
// monomials are not fully resolved come out unknown
QExpansion collapse(const Weight1Form& f, const std::map<long, int>& signs, int B);

// x-part / sqrt(-2)-part series as symbolic coefficient tables
std::vector<SymCoeff> real_part_series(const Weight1Form& f);      // (a + conj a)/2
std::vector<SymCoeff> imag_part_series(const Weight1Form& f);      // sqrt(-2)/2 (a - conj a) = -2 y

}  // namespace octmf
