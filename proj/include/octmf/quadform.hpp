#pragma once

#include "octmf/arith.hpp"

#include <set>

namespace octmf {

// Symmetric Gram matrix over Q; Q(x) = x^T G x.
struct QuadraticForm {
    std::vector<std::vector<Rat>> gram;

    int dim() const { return int(gram.size()); }
    static QuadraticForm diagonal(const std::vector<Rat>& d);
    Rat det() const;
    void check_symmetric() const;
};

// 2-torsion Brauer class, encoded by its (even-cardinality) support.
struct Br2Element {
    std::set<Place> support;

    bool trivial() const { return support.empty(); }
    bool operator==(const Br2Element& o) const { return support == o.support; }
    std::string str() const;
};

Br2Element br2_add(const Br2Element& a, const Br2Element& b);

// Gram matrix of Tr_{K/Q}(x^2) in the power basis: entries are the power
// sums p_{i+j} of the roots, computed by Newton's identities.
QuadraticForm trace_form(const RationalPoly& quartic);

// Symmetric Gaussian elimination; diagonal entries of a congruent diagonal form.
std::vector<Rat> diagonalize(const QuadraticForm& q);

int hasse_invariant(const QuadraticForm& q, const Place& v);
int hasse_invariant(const std::vector<Rat>& diag, const Place& v);

std::pair<int, int> signature(const QuadraticForm& q);  // (positive, negative)

// Hasse-Minkowski: dimension, determinant class, signature, local invariants.
bool is_equivalent_over_Q(const QuadraticForm& a, const QuadraticForm& b);

// <1, 1, 2, 2D>
QuadraticForm reference_form(const Rat& D);

// Finite places where trace_form and the reference form of the discriminant
// class disagree; empty iff the embedding obstruction is trivial.
Br2Element obstruction_class(const RationalPoly& quartic);

// W(Q3) = W(Q1) + W(Q2) + (2, D_L) place by place, with W realized as the
// Hasse invariant.
bool witt_sum_check(const RationalPoly& q1, const RationalPoly& q2,
                    const RationalPoly& q3, const Int& D_L);

// Witness places: inf, 2 and primes of the numerators/denominators of the
// diagonal entries of the given diagonalizations.
std::vector<Place> witness_places(const std::vector<std::vector<Rat>>& diags);

}  // namespace octmf
