#include "doctest.h"

#include "octmf/quadform.hpp"

#include <random>

using namespace octmf;

TEST_CASE("trace form of x^4 - 2x - 1") {
    QuadraticForm q = trace_form(RationalPoly({-1, -2, 0, 0, 1}));
    std::vector<std::vector<long>> want = {
        {4, 0, 0, 6}, {0, 0, 6, 4}, {0, 6, 4, 0}, {6, 4, 0, 12}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(q.gram[i][j] == Rat(want[i][j]));
    // non-squarefree input rejected
    RationalPoly sq = RationalPoly({-1, 0, 1}) * RationalPoly({-1, 0, 1});
    CHECK_THROWS(trace_form(sq));
}

TEST_CASE("trace form determinant class equals quartic discriminant class") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        std::vector<Rat> cs;
        for (int j = 0; j < 4; ++j) cs.emplace_back(long(rng() % 13) - 6);
        cs.emplace_back(1);
        RationalPoly f(cs);
        Rat d = poly_discriminant(f);
        if (d == 0) continue;
        QuadraticForm q = trace_form(f);
        CHECK(squarefree_part(q.det()) == squarefree_part(d));
        ++done;
    }
}

TEST_CASE("diagonalize") {
    auto d = diagonalize(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(1), Rat(1)}));
    CHECK(d == std::vector<Rat>{1, 1, 1, 1});
    // hyperbolic plane: exercises the zero-diagonal pivot
    QuadraticForm h;
    h.gram = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    auto dh = diagonalize(h);
    REQUIRE(dh.size() == 2);
    CHECK(squarefree_part(dh[0] * dh[1]) == -1);
    // trace form of x^4-2x-1: det class -688, signature (3,1)
    QuadraticForm q = trace_form(RationalPoly({-1, -2, 0, 0, 1}));
    auto dq = diagonalize(q);
    Rat prod(1);
    int pos = 0;
    for (auto& x : dq) {
        prod *= x;
        pos += x > 0;
    }
    CHECK(squarefree_part(prod) == squarefree_part(Rat(-688)));
    CHECK(pos == 3);
    CHECK(signature(q) == std::pair<int, int>(3, 1));
    QuadraticForm degenerate;
    degenerate.gram = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_THROWS(diagonalize(degenerate));
}

TEST_CASE("hasse invariant") {
    CHECK(hasse_invariant(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(1), Rat(1)}),
                          Place::prime(2)) == 1);
    CHECK(hasse_invariant(QuadraticForm::diagonal({Rat(-1), Rat(-1)}), Place::inf()) == -1);
    // invariance under congruence transformations
    std::mt19937_64 rng(4);
    for (int i = 0; i < 25; ++i) {
        std::vector<Rat> diag;
        for (int j = 0; j < 3; ++j) {
            long v = long(rng() % 19) - 9;
            if (v == 0) v = 1;
            diag.emplace_back(v);
        }
        QuadraticForm q = QuadraticForm::diagonal(diag);
        for (int t = 0; t < 8; ++t) {
            // random unimodular-ish transform: q -> s^T q s with random integer s, det != 0
            std::vector<std::vector<Rat>> s(3, std::vector<Rat>(3));
            QuadraticForm q2;
            q2.gram.assign(3, std::vector<Rat>(3, Rat(0)));
            do {
                for (auto& row : s)
                    for (auto& x : row) x = Rat(long(rng() % 5) - 2);
            } while (QuadraticForm{s}.det() == 0);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    Rat acc(0);
                    for (int k = 0; k < 3; ++k)
                        for (int l = 0; l < 3; ++l) acc += s[k][a] * q.gram[k][l] * s[l][b];
                    q2.gram[a][b] = acc;
                }
            // any invertible change of basis preserves the class, hence every
            // Hasse invariant
            for (const Place& v :
                 {Place::inf(), Place::prime(2), Place::prime(3), Place::prime(5)})
                CHECK(hasse_invariant(q, v) == hasse_invariant(q2, v));
            CHECK(is_equivalent_over_Q(q, q2));
        }
    }
}

TEST_CASE("equivalence over Q") {
    QuadraticForm q = trace_form(RationalPoly({-1, -2, 0, 0, 1}));
    CHECK(is_equivalent_over_Q(q, q));
    CHECK(!is_equivalent_over_Q(QuadraticForm::diagonal({Rat(1), Rat(1)}),
                                QuadraticForm::diagonal({Rat(1), Rat(-1)})));
    CHECK(is_equivalent_over_Q(q, reference_form(Rat(-43))));
}

TEST_CASE("reference form") {
    QuadraticForm r = reference_form(Rat(1));
    CHECK(diagonalize(r) == std::vector<Rat>{1, 1, 2, 2});
    QuadraticForm r43 = reference_form(Rat(-43));
    CHECK(diagonalize(r43) == std::vector<Rat>{1, 1, 2, -86});
    CHECK(squarefree_part(r43.det()) == squarefree_part(Rat(-43)));
    CHECK_THROWS(reference_form(Rat(0)));
}

TEST_CASE("obstruction classes") {
    CHECK(obstruction_class(RationalPoly({-1, -2, 0, 0, 1})).trivial());           // level-43 case
    CHECK(obstruction_class(RationalPoly({-1, -14, 19, -8, 1})).trivial());        // level-563 case
    Br2Element e = obstruction_class(RationalPoly({1, -8, 7, -4, 1}));             // 643 generator
    CHECK(!e.trivial());
    CHECK(e.support == std::set<Place>{Place::prime(2), Place::prime(643)});
    CHECK_THROWS(obstruction_class(RationalPoly({6, 0, -5, 0, 1})));  // positive discriminant
    // support always even
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 40) {
        std::vector<Rat> cs;
        for (int j = 0; j < 4; ++j) cs.emplace_back(long(rng() % 9) - 4);
        cs.emplace_back(1);
        RationalPoly f(cs);
        Rat d = poly_discriminant(f);
        if (d >= 0) continue;
        CHECK(obstruction_class(f).support.size() % 2 == 0);
        ++done;
    }
}

TEST_CASE("br2 addition") {
    Br2Element a, b;
    a.support = {Place::prime(2), Place::prime(43)};
    b.support = {Place::prime(43), Place::prime(7)};
    CHECK(br2_add(a, a).trivial());
    CHECK(br2_add(a, b).support == std::set<Place>{Place::prime(2), Place::prime(7)});
}

TEST_CASE("witt sum identity on the 643A triple") {
    RationalPoly q1({1, -8, 7, -4, 1});
    RationalPoly q2({-11, 8, 6, -8, 1});
    RationalPoly q3({25, -40, 9, 4, 1});
    CHECK(witt_sum_check(q1, q2, q3, Int(-643)));
    Br2Element sum = br2_add(br2_add(obstruction_class(q1), obstruction_class(q2)),
                             obstruction_class(q3));
    CHECK(sum.trivial());
    CHECK_THROWS(witt_sum_check(q1, q2, RationalPoly({-1, -2, 0, 0, 1}), Int(-643)));
}
