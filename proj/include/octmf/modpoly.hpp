#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace octmf {

// F_p[x] with p < 2^31, dense ascending coefficients, used for factorization
// patterns.  All inputs are assumed monic-normalizable (lc invertible).
struct ModPoly {
    uint64_t p;
    std::vector<uint64_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return c.empty() ? -1 : int(c.size()) - 1; }
};

ModPoly mp_make(uint64_t p, const std::vector<uint64_t>& coeffs);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b);
ModPoly mp_rem(ModPoly a, const ModPoly& b);
ModPoly mp_quo(ModPoly a, const ModPoly& b);
ModPoly mp_gcd(ModPoly a, ModPoly b);          // monic gcd
ModPoly mp_monic(ModPoly a);
ModPoly mp_derivative(const ModPoly& a);
ModPoly mp_powmod_xq(const ModPoly& mod, uint64_t p, unsigned e);  // x^(p^e) mod `mod`

// Distinct-degree factorization degrees of a squarefree monic polynomial.
std::vector<int> mp_ddf_degrees(ModPoly f);

// Full factorization shape of f mod p: sorted (degree, multiplicity) pairs.
// Handles p-th-power layers (derivative vanishing) via x -> x^(1/p) descent.
std::vector<std::pair<int, int>> mp_factor_shape(ModPoly f);

}  // namespace octmf
