#pragma once

#include "octmf/rational.hpp"

#include <optional>

namespace octmf {

// element of Q(sqrt(-2))
struct QNum {
    Rat x, y;  // x + y*sqrt(-2)

    QNum() : x(0), y(0) {}
    QNum(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
    explicit QNum(long v) : x(v), y(0) {}
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }
    QNum conj() const { return {x, -y}; }
    bool operator==(const QNum& o) const { return x == o.x && y == o.y; }

    friend QNum operator+(const QNum& a, const QNum& b) { return {a.x + b.x, a.y + b.y}; }
    friend QNum operator-(const QNum& a, const QNum& b) { return {a.x - b.x, a.y - b.y}; }
    friend QNum operator*(const QNum& a, const QNum& b) {
        return {a.x * b.x - 2 * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    friend QNum operator/(const QNum& a, const QNum& b) {
        Rat n = b.x * b.x + 2 * b.y * b.y;
        if (n == 0) throw std::invalid_argument("QNum: division by zero");
        return {(a.x * b.x + 2 * a.y * b.y) / n, (a.y * b.x - a.x * b.y) / n};
    }
    std::string str() const;
};

enum class Weight { one, half, three_half };

// Truncated q-expansion with exact coefficients in Q(sqrt(-2)).  A coefficient
// may be marked unknown (used while half-resolved weight-1 data propagates);
// linear algebra then restricts to windows where operands are known.
struct QExpansion {
    int B = 0;
    std::vector<QNum> c;          // size B+1
    std::vector<uint8_t> known;   // size B+1
    Weight weight = Weight::three_half;
    long level = 1;
    long character = 0;  // 0 = trivial, else D for kronecker(D, .)

    static QExpansion zero(int B);
    void set(int n, QNum v) { c[size_t(n)] = std::move(v); known[size_t(n)] = 1; }
    bool all_known() const;
    bool is_rational() const;
};

// Theta_n = sum_j q^{n j^2}; weight 1/2, level 4n.
QExpansion theta_unary(long n, int B);

// QExpansion wrapper around ternary representation numbers (weight 3/2,
// level = level of the form, trivial character when disc is square).
struct TernaryForm;
QExpansion ternary_theta(const TernaryForm& t, int B);

// g of weight 1, level n, character (-d/.) times Theta_d: weight 3/2,
// level lcm(n, 4d), trivial character.  Requires d > 0, d | n.
QExpansion product_weight_3_2(const QExpansion& g, long d, int B);

// g(z) -> g(4z)
QExpansion expand_4z(const QExpansion& g, int B);

// weight 3/2, trivial character, level 4p: coefficients supported on 0,3 mod 4
bool kohnen_check(const QExpansion& f);

// b(m) = c(p^2 m) + (-m|p) c(m) + p c(m/p^2)
QExpansion hecke_Tp2(const QExpansion& f, long p, int B_out);

struct NotInSpan : std::runtime_error {
    int basis_index;
    int coeff_index;
    NotInSpan(int bi, int ci)
        : std::runtime_error("hecke_matrix: image of basis element " + std::to_string(bi) +
                             " leaves the span (first failing coefficient " + std::to_string(ci) + ")"),
          basis_index(bi), coeff_index(ci) {}
};
struct InsufficientPrecision : std::runtime_error {
    InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// M with T_{p^2}(basis_i) = sum_j M[j][i] basis_j, solved exactly on the
// window of coefficient indices where everything involved is known.
std::vector<std::vector<QNum>> hecke_matrix(const std::vector<QExpansion>& basis, long p,
                                            int B_express);

// exact row reduction over Q(sqrt(-2)), first-nonzero pivoting
std::pair<int, std::vector<int>> rank_and_basis(const std::vector<QExpansion>& xs, int B);

struct WeierstrassCurve;

struct EigenformResult {
    std::vector<QNum> combination;  // in the given basis
    QExpansion expansion;
};

// one-dimensional joint eigenspace for T_{p^2} with eigenvalues a_p(E);
// normalized so the first nonzero coefficient equals `leading`.
EigenformResult eigenform_search(const std::vector<QExpansion>& basis, const WeierstrassCurve& E,
                                 const std::vector<long>& primes, const QNum& leading);

// dim of weight-3/2 forms of level N (4 | N), trivial character
long dim_weight_3_2(long level);

// JSON list of [x, y] rational-string pairs (value x + y*sqrt(-2))
std::string qexpansion_to_json(const QExpansion& q, int upto = -1);

// modular-curve helpers exposed for tests
long gamma0_index(long N);
long gamma0_genus(long N);
long gamma0_cusp_count(long N);

}  // namespace octmf
