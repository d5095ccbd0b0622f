#pragma once

#include "octmf/poly.hpp"
#include "octmf/rational.hpp"

namespace octmf {

// Kronecker symbol (a/n), full extension (n may be negative, even, zero).
int kronecker_symbol(const Int& a, const Int& n);

// Hilbert symbol (a,b)_v over Q_v.  a, b nonzero.  Dyadic case via the
// classical exponent formula (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
// with eps(u) = (u-1)/2, omega(u) = (u^2-1)/8 mod 2; odd p via Legendre
// symbols of the unit parts; at the real place -1 iff both negative.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// The unique squarefree integer representing r modulo rational squares.
Int squarefree_part(const Rat& r);

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
Rat resultant(const RationalPoly& f, const RationalPoly& g);

// (-1)^{n(n-1)/2} Res(f, f')/lc(f).
Rat poly_discriminant(const RationalPoly& f);

struct FactorizationPattern {
    std::vector<int> degrees;  // radical factor degrees, ascending
    bool squarefree = true;    // f mod p squarefree?
};

// Degrees of the distinct irreducible factors (the radical) of f mod p,
// plus whether f mod p itself was squarefree.  Errors if p divides the
// leading coefficient of the cleared-denominator model.
FactorizationPattern factorization_pattern_mod_p(const RationalPoly& f, const Int& p);

// Full (degree, multiplicity) shape of f mod p.
std::vector<std::pair<int, int>> factor_shape_mod_p(const RationalPoly& f, const Int& p);

}  // namespace octmf
