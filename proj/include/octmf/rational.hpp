#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace octmf {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Trial division up to 10^6, then primality / perfect-square / perfect-power
// unwinding for the cofactor.  Enough for every input in scope; anything
// harder throws.
std::map<Int, unsigned> factor_integer(const Int& n);

// Places of Q: a prime or the real place.
struct Place {
    bool infinite = false;
    Int p = 0;  // prime when !infinite

    static Place inf() { return Place{true, 0}; }
    static Place prime(const Int& q) {
        if (!is_prime(q)) throw std::invalid_argument("Place: not a prime");
        return Place{false, q};
    }
    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || p == o.p);
    }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;  // finite places first
        return !infinite && p < o.p;
    }
    std::string str() const { return infinite ? "inf" : p.get_str(); }
};

std::vector<uint32_t> primes_upto(uint32_t n);

}  // namespace octmf
