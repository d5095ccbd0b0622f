#pragma once

#include "octmf/rational.hpp"

#include <initializer_list>

namespace octmf {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial is an empty coefficient vector.
struct RationalPoly {
    std::vector<Rat> c;

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    RationalPoly(std::initializer_list<long> ints) {
        for (long v : ints) c.emplace_back(v);
        trim();
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return is_zero() ? -1 : int(c.size()) - 1; }
    const Rat& lc() const { return c.back(); }
    Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    bool operator==(const RationalPoly& o) const { return c == o.c; }

    RationalPoly derivative() const {
        RationalPoly d;
        for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Rat(long(i)) * c[i]);
        d.trim();
        return d;
    }

    std::string str(const std::string& var = "x") const;
};

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(const Rat& s, const RationalPoly& a);

// Monic normalization (divide by leading coefficient).
RationalPoly monic(const RationalPoly& f);

// Integer model: clear denominators, return content-free integer coefficients.
std::vector<Int> integral_model(const RationalPoly& f);

// Parse "x^4 - 2*x - 1" style or plain coefficient lists; used by data files.
RationalPoly poly_from_coeff_string(const std::string& s);

}  // namespace octmf
