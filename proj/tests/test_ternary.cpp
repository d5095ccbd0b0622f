#include "doctest.h"

#include "octmf/ternary.hpp"

#include <random>

using namespace octmf;

namespace {

TernaryForm random_transform(const TernaryForm& t, std::mt19937_64& rng) {
    // apply a random product of elementary unimodular moves
    auto g = t.gram2();
    auto apply = [&](int i, int j, int64_t k) {
        // e_i -> e_i + k e_j on the Gram matrix
        for (int r = 0; r < 3; ++r) g[r][i] += k * g[r][j];
        for (int c = 0; c < 3; ++c) g[i][c] += k * g[j][c];
    };
    for (int step = 0; step < 6; ++step) {
        int i = int(rng() % 3), j = int(rng() % 3);
        if (i == j) continue;
        apply(i, j, int64_t(rng() % 3) - 1);
    }
    return TernaryForm{g[0][0] / 2, g[1][1] / 2, g[2][2] / 2, g[1][2], g[0][2], g[0][1]};
}

}  // namespace

TEST_CASE("ternary invariants") {
    auto i1 = ternary_invariants({1, 11, 43, 0, 0, 1});
    CHECK(i1.disc == 43 * 43);
    CHECK(i1.level == 172);
    auto i2 = ternary_invariants({1, 1, 1, 0, 0, 0});
    CHECK(i2.disc == 4);
    CHECK(i2.level == 4);
    auto i3 = ternary_invariants({4, 563, 564, 0, -4, 0});
    CHECK(i3.disc == Int(2252) * 2252);
    CHECK(i3.level == 2252);
    CHECK_THROWS(ternary_invariants({1, 1, 1, 5, 0, 0}));  // not positive definite
    // level divides 4*disc and disc divides level^3
    CHECK((4 * i1.disc) % i1.level == 0);
    CHECK((i1.level * i1.level * i1.level) % i1.disc == 0);
}

TEST_CASE("reduction") {
    TernaryForm t{1, 11, 43, 0, 0, 1};
    TernaryForm r = reduce(t);
    CHECK(reduce(r) == r);  // idempotent
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        TernaryForm u = random_transform(t, rng);
        auto iu = ternary_invariants(u);
        auto it = ternary_invariants(t);
        CHECK(iu.disc == it.disc);
        CHECK(iu.level == it.level);
        TernaryForm ru = reduce(u);
        CHECK(reduce(ru) == ru);
        CHECK(is_equivalent(ru, t));
    }
}

TEST_CASE("isometry testing") {
    TernaryForm t{6, 9, 10, 4, 5, 1};
    CHECK(is_equivalent(t, t));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) CHECK(is_equivalent(t, random_transform(t, rng)));
    // two distinct rows of the level-172 table are inequivalent
    CHECK(!is_equivalent({1, 11, 43, 0, 0, 1}, {4, 11, 14, -10, 3, 2}));
    CHECK(!is_equivalent({1, 43, 43, 0, 0, 0}, {2, 22, 43, 0, 0, 2}));
}

TEST_CASE("theta series") {
    auto co = theta_coefficients({1, 1, 1, 0, 0, 0}, 4);
    CHECK(co == std::vector<int64_t>{1, 6, 12, 8, 6});
    auto co2 = theta_coefficients({1, 43, 43, 0, 0, 0}, 4);
    CHECK(co2 == std::vector<int64_t>{1, 2, 0, 0, 2});
    // Fincke-Pohst agrees with plain box enumeration
    std::mt19937_64 rng(23);
    for (int i = 0; i < 12; ++i) {
        TernaryForm base{1 + int64_t(rng() % 4), 3 + int64_t(rng() % 5), 5 + int64_t(rng() % 9),
                         0, 0, 0};
        base.a23 = int64_t(rng() % 3) - 1;
        base.a13 = int64_t(rng() % 3) - 1;
        base.a12 = int64_t(rng() % 3) - 1;
        if (!base.positive_definite()) continue;
        CHECK(theta_coefficients(base, 60) == theta_coefficients_box(base, 60));
    }
    // thetas of equivalent forms agree
    TernaryForm t{1, 11, 43, 0, 0, 1};
    for (int i = 0; i < 5; ++i) {
        TernaryForm u = random_transform(t, rng);
        CHECK(theta_coefficients(t, 200) == theta_coefficients(u, 200));
    }
    // coefficients nonnegative, constant term 1
    auto c3 = theta_coefficients({4, 563, 564, 0, -4, 0}, 100);
    CHECK(c3[0] == 1);
    for (int64_t v : c3) CHECK(v >= 0);
}

TEST_CASE("kohnen membership") {
    CHECK(theta_in_kohnen_space({4, 563, 564, 0, -4, 0}));
    CHECK(!theta_in_kohnen_space({1, 11, 43, 0, 0, 1}));  // represents 1
    CHECK(!theta_in_kohnen_space({2, 22, 43, 0, 0, 2}));  // represents 2
}

TEST_CASE("enumeration at level 172") {
    auto classes = enumerate_classes(172, true);
    CHECK(classes.size() == 14);
    // set equality with the reference table rows up to isometry
    std::vector<TernaryForm> table = {
        {1, 11, 43, 0, 0, 1},   {4, 11, 14, -10, 3, 2},  {6, 9, 10, 4, 5, 1},
        {1, 43, 43, 0, 0, 0},   {2, 22, 43, 0, 0, 2},    {3, 29, 29, -28, 2, 2},
        {4, 11, 43, 0, 0, 2},   {5, 18, 26, 18, 2, 4},   {6, 15, 23, 2, 6, 4},
        {9, 10, 24, 10, 2, 4},  {11, 14, 16, -6, 4, 10}, {4, 43, 44, 0, 4, 0},
        {11, 16, 47, 16, 2, 4}, {15, 23, 24, 12, 8, 2}};
    std::vector<bool> used(table.size(), false);
    for (const auto& c : classes) {
        bool hit = false;
        for (size_t i = 0; i < table.size(); ++i) {
            if (used[i]) continue;
            if (ternary_invariants(c).disc == ternary_invariants(table[i]).disc &&
                is_equivalent(c, table[i])) {
                used[i] = true;
                hit = true;
                break;
            }
        }
        CHECK(hit);
    }
    for (bool u : used) CHECK(u);
}

TEST_CASE("ternary json round trip") {
    TernaryForm t{15, 23, 24, 12, 8, 2};
    CHECK(ternary_from_json(ternary_to_json(t)) == t);
}
