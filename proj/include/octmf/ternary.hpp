#pragma once

#include "octmf/rational.hpp"

#include <array>
#include <functional>

namespace octmf {

// Integral positive-definite ternary form
//   Q(x,y,z) = a1 x^2 + a2 y^2 + a3 z^2 + a23 yz + a13 xz + a12 xy.
struct TernaryForm {
    int64_t a1, a2, a3, a23, a13, a12;

    bool operator==(const TernaryForm& o) const = default;
    auto operator<=>(const TernaryForm& o) const = default;

    int64_t eval(int64_t x, int64_t y, int64_t z) const {
        return a1 * x * x + a2 * y * y + a3 * z * z + a23 * y * z + a13 * x * z + a12 * x * y;
    }
    // integer matrix 2A (even diagonal)
    std::array<std::array<int64_t, 3>, 3> gram2() const {
        return {{{2 * a1, a12, a13}, {a12, 2 * a2, a23}, {a13, a23, 2 * a3}}};
    }
    bool positive_definite() const;
    int64_t disc() const;  // 4 det(A) = det(2A)/2
    std::string str() const;
};

struct TernaryInvariants {
    Int disc;
    Int level;
};

TernaryInvariants ternary_invariants(const TernaryForm& t);

// Eisenstein-reduced representative; deterministic (greedy reduction plus a
// canonical signed-permutation pass choosing the lexicographically least tuple).
TernaryForm reduce(const TernaryForm& t);

// Integral isometry search by matching short vectors.
bool is_equivalent(const TernaryForm& a, const TernaryForm& b);

// All classes of positive-definite ternary forms of exact level `level`
// (square discriminant and/or Kohnen-space thetas when flagged), one reduced
// representative per class, sorted.
std::vector<TernaryForm> enumerate_classes(const Int& level, bool require_square_disc,
                                           bool kohnen_only = false);

// Theta Kohnen condition: Q represents no integer = 1, 2 mod 4
// (decidable on (Z/4)^3).
bool theta_in_kohnen_space(const TernaryForm& t);

// representation numbers r(0..B)
std::vector<int64_t> theta_coefficients(const TernaryForm& t, int64_t B);

// test oracle: plain box enumeration
std::vector<int64_t> theta_coefficients_box(const TernaryForm& t, int64_t B);

// all v with 0 < Q(v) <= bound (both signs included)
std::vector<std::array<int64_t, 3>> short_vectors(const TernaryForm& t, int64_t bound);

// JSON / TSV serialization in the coefficient order a1 a2 a3 a23 a13 a12
std::string ternary_to_json(const TernaryForm& t);
TernaryForm ternary_from_json(const std::string& s);

}  // namespace octmf
