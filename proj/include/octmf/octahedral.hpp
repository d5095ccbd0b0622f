#pragma once

#include "octmf/rational.hpp"

#include <array>
#include <optional>

namespace octmf {

// Multiplication-table group on elements 0..n-1, identity at index 0.
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    std::vector<std::string> labels;

    void finish();  // fills inv, verifies group axioms exhaustively
    int order_of(int g) const;
    std::vector<std::vector<int>> conjugacy_classes() const;
};

// 2-cocycle with values in F2, trivial action, normalized (c(e,g)=c(g,e)=0).
struct Cocycle2 {
    int n = 0;
    std::vector<uint8_t> c;  // row-major n*n

    uint8_t operator()(int g, int h) const { return c[size_t(g) * n + h]; }
    bool is_cocycle(const FiniteGroup& G) const;
};

// GL2(F3) with its projection onto S4 (action on the 4 points of P^1(F3)).
struct Gl2F3 {
    FiniteGroup G;                    // 48 elements
    std::vector<std::array<int, 4>> mats;  // row-major 2x2 entries mod 3
    FiniteGroup S4;                   // 24 elements (permutations of 4 points)
    std::vector<int> proj;            // G -> S4 element index
    std::vector<std::array<int, 4>> s4_perms;  // S4 element -> permutation
    int minus_identity = -1;

    int index_of_matrix(const std::array<int, 4>& m) const;
};

const Gl2F3& gl2f3();

// the distinguished S3 inside GL2(F3), generated by [[0,1],[1,0]] and [[1,2],[0,2]]
bool s3_subgroup_check();

// order-96 group S3 x| (Z/2)^4 with the three projections onto S4
struct SemidirectG {
    FiniteGroup G;  // 96 elements, pairs (sigma, v)
    FiniteGroup S4; // target S3 x| (Z/2)^2
    std::vector<int> pi1, pi2, pi3;  // element maps G -> S4
    std::vector<std::pair<int, int>> elems;  // (sigma index 0..5, v 0..15)
};

const SemidirectG& semidirect_group();

// normal subgroups of order 4 of the order-96 group
std::vector<std::vector<int>> normal_order4_subgroups();

// orbit sizes of S3 acting on (Z/2)^4
std::vector<int> s3_orbit_sizes_on_v4();

// the five pairwise-trivially-intersecting order-4 subgroups, plus the exhaustive
// completion statement over all qualifying triples of order-4 subgroups
bool five_subgroup_check();

// cocycle of the 2^+S4 extension from a set-theoretic section S4 -> GL2(F3);
// section_seed permutes lift choices (same class for every seed)
Cocycle2 s4plus_cocycle(unsigned section_seed = 0);

bool is_coboundary(const FiniteGroup& G, const Cocycle2& c);

// pullback along an element map phi: G -> H
Cocycle2 pullback(const FiniteGroup& G, const std::vector<int>& phi, const Cocycle2& c);

Cocycle2 cocycle_add(const Cocycle2& a, const Cocycle2& b);

// F2-dimension of 2-cocycles / 2-coboundaries (trivial action); exact rank
// computation over normalized cochains.  Cost grows like |G|^3 rows of
// (|G|-1)^2 bits; intended for |G| <= 24.
int h2_dimension(const FiniteGroup& G);

// no subgroup of GL2(F3) maps isomorphically onto S4 (the extension is nonsplit)
bool extension_splits();

// trace of the faithful 2-dimensional representation, exact:
// value = x + y*sqrt(-2) with (x, y) rational; order-8 classes are the
// ambiguous pair (y = ±1), stored with ambiguous=true.
struct ClassData {
    int order;
    int size;
    std::vector<int> pattern4;   // cycle type on P^1(F3)
    std::vector<int> pattern12;  // cycle type on the 12 cosets of a transposition in S4
    std::vector<int> pattern24;  // cycle type on the 24 cosets of a noncentral involution
    Rat trace;                   // rational part (exact) when !ambiguous
    bool ambiguous;              // true for the ±sqrt(-2) pair
};

struct FrobeniusTable {
    std::vector<ClassData> classes;

    // lookup by 24-pattern (all classes distinct); nullopt if absent
    std::optional<ClassData> by_pattern24(const std::vector<int>& p24) const;
    // lookup by quartic pattern; may be ambiguous (returns all matches)
    std::vector<ClassData> by_pattern4(const std::vector<int>& p4) const;
    std::vector<ClassData> by_pattern12(const std::vector<int>& p12) const;
    std::string to_json() const;
};

// built via the Burnside-Dixon character algorithm on GL2(F3)
const FrobeniusTable& frobenius_table();

}  // namespace octmf
