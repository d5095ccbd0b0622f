#include "doctest.h"

#include "octmf/elliptic.hpp"
#include "octmf/halfint.hpp"
#include "octmf/pipeline.hpp"
#include "octmf/ternary.hpp"
#include "octmf/weight1.hpp"

#include <numeric>

using namespace octmf;

TEST_CASE("unary theta") {
    QExpansion t1 = theta_unary(1, 9);
    std::vector<long> want{1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
    for (int i = 0; i <= 9; ++i) CHECK(t1.c[size_t(i)].x == want[size_t(i)]);
    CHECK(t1.weight == Weight::half);
    CHECK(t1.level == 4);
    QExpansion t43 = theta_unary(43, 50);
    for (int i = 0; i <= 50; ++i) {
        long expect = (i == 0) ? 1 : (i == 43 ? 2 : 0);
        CHECK(t43.c[size_t(i)].x == expect);
    }
    for (int i = 0; i <= 9; ++i) CHECK((t1.c[size_t(i)].x == 0 || t1.c[size_t(i)].x == 1 || t1.c[size_t(i)].x == 2));
}

TEST_CASE("weight 3/2 products") {
    QExpansion g = QExpansion::zero(40);
    g.weight = Weight::one;
    g.level = 43;
    g.character = -43;
    g.set(1, QNum(Rat(1), Rat(0)));
    g.set(2, QNum(Rat(5), Rat(0)));
    QExpansion pr = product_weight_3_2(g, 43, 40);
    CHECK(pr.weight == Weight::three_half);
    CHECK(pr.level == std::lcm(43L, 4 * 43L));
    CHECK(pr.character == 0);
    // coefficient m = sum_j g(m - 43 j^2)
    CHECK(pr.c[1].x == 1);
    CHECK(pr.c[2].x == 5);
    // d must divide the level
    g.level = 44;
    CHECK_THROWS(product_weight_3_2(g, 43, 40));
}

TEST_CASE("expand 4z") {
    QExpansion g = QExpansion::zero(4);
    g.weight = Weight::one;
    g.level = 563;
    g.character = -563;
    g.set(0, QNum(Rat(1), Rat(0)));
    g.set(1, QNum(Rat(1), Rat(0)));
    QExpansion h = expand_4z(g, 16);
    CHECK(h.level == 4 * 563);
    CHECK(h.c[0].x == 1);
    CHECK(h.c[4].x == 1);
    CHECK(h.c[1].x == 0);
    QExpansion hh = expand_4z(h, 16);
    CHECK(hh.c[16].x == 1);
    CHECK(hh.c[4].x == 0);
    CHECK(h.is_rational());
    CHECK_THROWS(expand_4z(g, 100));
}

TEST_CASE("kohnen condition") {
    QExpansion z = QExpansion::zero(20);
    z.weight = Weight::three_half;
    CHECK(kohnen_check(z));
    QExpansion imp = theta_unary(1, 20);
    imp.weight = Weight::three_half;  // impostor
    CHECK(!kohnen_check(imp));
    // theta of a Kohnen-space ternary form passes
    QExpansion th = ternary_theta(TernaryForm{4, 563, 564, 0, -4, 0}, 100);
    CHECK(kohnen_check(th));
}

TEST_CASE("hecke operator basics") {
    QExpansion z = QExpansion::zero(500);
    z.weight = Weight::three_half;
    z.level = 344;
    QExpansion tz = hecke_Tp2(z, 3, 50);
    for (int i = 0; i <= 50; ++i) CHECK(tz.c[size_t(i)].is_zero());
    // b(1) = c(p^2) + (-1|p) c(1) on the theta of diag(1,43,43)
    QExpansion th = ternary_theta(TernaryForm{1, 43, 43, 0, 0, 0}, 500);
    QExpansion t3 = hecke_Tp2(th, 3, 50);
    QNum expect = th.c[9] + QNum(Rat(kronecker_symbol(-1, 3)), Rat(0)) * th.c[1];
    CHECK(t3.c[1] == expect);
    CHECK_THROWS(hecke_Tp2(th, 3, 200));   // insufficient truncation
    CHECK_THROWS(hecke_Tp2(th, 43, 5));    // p divides the level
}

TEST_CASE("hecke matrix on a singleton eigenvector") {
    // theta of the cube lattice at level 4: T_{p^2}-eigenvector trivially
    QExpansion th = ternary_theta(TernaryForm{1, 1, 1, 0, 0, 0}, 500);
    auto M = hecke_matrix({th}, 3, 50);
    REQUIRE(M.size() == 1);
    // eigenvalue must match the coefficient identity b(m) = lambda c(m)
    QExpansion im = hecke_Tp2(th, 3, 50);
    CHECK(im.c[1] == M[0][0] * th.c[1]);
    CHECK(im.c[4] == M[0][0] * th.c[4]);
}

TEST_CASE("hecke matrix negative controls") {
    QExpansion short_theta = ternary_theta(TernaryForm{1, 43, 43, 0, 0, 0}, 100);
    CHECK_THROWS_AS((void)hecke_matrix({short_theta}, 3, 50), InsufficientPrecision);
    // an underdetermined window: a basis that repeats itself cannot be expressed
    QExpansion th = ternary_theta(TernaryForm{1, 43, 43, 0, 0, 0}, 500);
    CHECK_THROWS_AS((void)hecke_matrix({th, th}, 3, 50), InsufficientPrecision);
}

TEST_CASE("rank and basis") {
    QExpansion a = ternary_theta(TernaryForm{1, 11, 43, 0, 0, 1}, 120);
    QExpansion b = ternary_theta(TernaryForm{1, 43, 43, 0, 0, 0}, 120);
    auto [r2, piv2] = rank_and_basis({a, b, a}, 100);
    CHECK(r2 == 2);
    CHECK(piv2 == std::vector<int>{0, 1});
}

TEST_CASE("dimension formulas") {
    CHECK(dim_weight_3_2(344) == 25);
    CHECK(dim_weight_3_2(2252) == 143);
    CHECK(dim_weight_3_2(2572) == 163);
    CHECK(dim_weight_3_2(4) == 1);  // the cube of the unary theta
    CHECK_THROWS(dim_weight_3_2(43));
    // classical genus values
    CHECK(gamma0_genus(11) == 1);
    CHECK(gamma0_genus(37) == 2);
    CHECK(gamma0_genus(389) == 32);
    CHECK(gamma0_genus(563) == 47);
    CHECK(gamma0_genus(643) == 53);
    CHECK(gamma0_index(344) == 528);
    CHECK(gamma0_cusp_count(344) == 8);
}

TEST_CASE("eigenform search negative control") {
    // span of two level-172 thetas contains no eigenform for 43A with these eigenvalues
    QExpansion a = ternary_theta(TernaryForm{1, 11, 43, 0, 0, 1}, 600);
    QExpansion b = ternary_theta(TernaryForm{1, 43, 43, 0, 0, 0}, 600);
    const WeierstrassCurve& e = curve_registry().at("43A").curve;
    CHECK_THROWS(eigenform_search({a, b}, e, {3, 5, 7}, QNum(Rat(1), Rat(0))));
}

TEST_CASE("weight-1 machinery on the 563 data") {
    RationalPoly quartic({-1, -14, 19, -8, 1});
    RationalPoly poly24 = load_poly_file("golden/poly24_563.txt");
    CHECK(poly24.degree() == 24);
    // ramified rule at 563: multiplicity-one part is a single quadratic
    CHECK(ramified_ap(poly24, 563) == Rat(-1));
    // a_3: 3 divides the printed polynomial's index and the S4-class is a
    // 3-cycle, so only the ±1 pair survives pattern data
    PrimeTrace t3 = frobenius_trace_at(quartic, poly24, RationalPoly(), Int(-563), Int(3));
    CHECK(t3.kind == PrimeTrace::pm_one);
    // a_2 ambiguous: order-8 Frobenius
    PrimeTrace t2 = frobenius_trace_at(quartic, poly24, RationalPoly(), Int(-563), Int(2));
    CHECK(t2.kind == PrimeTrace::pm_sqrt_m2);
    Weight1Form f = weight1_coefficients(quartic, poly24, RationalPoly(), Int(-563), 563, 100);
    CHECK(f.a[1].clean());
    CHECK(f.a[1].value() == QNum(Rat(1), Rat(0)));
    // squares of sign-ambiguous primes are rational again
    CHECK(f.a[4].clean());   // a_4 = a_2^2 - chi(2)
    CHECK(f.a[9].clean());   // a_9 = a_3^2 - chi(3), (±1)^2 = 1

    // a_2 itself carries the sign monomial
    CHECK(!f.a[2].clean());
    // collapse under s_2 = +1 makes a_2 known
    QExpansion q = collapse(f, {{2, 1}}, 50);
    CHECK(q.known[2]);
    CHECK(q.c[2] == QNum(Rat(0), Rat(1)));
    // multiplicativity: a_6 = a_2 a_3
    QExpansion q6 = collapse(f, {{2, 1}}, 50);
    CHECK(q6.c[6] == q6.c[2] * q6.c[3]);
}
