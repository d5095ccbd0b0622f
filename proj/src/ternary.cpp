#include "octmf/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace octmf {

bool TernaryForm::positive_definite() const {
    if (a1 <= 0) return false;
    if (4 * a1 * a2 - a12 * a12 <= 0) return false;
    return disc() > 0;
}

int64_t TernaryForm::disc() const {
    return 4 * a1 * a2 * a3 + a23 * a13 * a12 - a1 * a23 * a23 - a2 * a13 * a13 - a3 * a12 * a12;
}

std::string TernaryForm::str() const {
    std::ostringstream os;
    os << "(" << a1 << "," << a2 << "," << a3 << "," << a23 << "," << a13 << "," << a12 << ")";
    return os.str();
}

static std::array<std::array<int64_t, 3>, 3> adjugate(const std::array<std::array<int64_t, 3>, 3>& m) {
    std::array<std::array<int64_t, 3>, 3> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int64_t sub[2][2];
            int r = 0;
            for (int a = 0; a < 3; ++a) {
                if (a == i) continue;
                int s = 0;
                for (int b = 0; b < 3; ++b) {
                    if (b == j) continue;
                    sub[r][s++] = m[a][b];
                }
                ++r;
            }
            int64_t minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
            c[j][i] = ((i + j) % 2 ? -minor : minor);
        }
    return c;
}

static int64_t det3(const std::array<std::array<int64_t, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

TernaryInvariants ternary_invariants(const TernaryForm& t) {
    if (!t.positive_definite()) throw std::invalid_argument("ternary_invariants: not positive definite");
    auto m = t.gram2();
    int64_t d2 = det3(m);  // = 2 disc
    auto adj = adjugate(m);
    Int N = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (adj[i][j] == 0) continue;
            Int q = Int(d2) / gcd(Int(d2), Int(std::abs(adj[i][j])));
            N = lcm(N, q);
        }
    auto even_diag = [&](const Int& n) {
        for (int i = 0; i < 3; ++i) {
            Int v = n * adj[i][i] / d2;
            if (v % 2 != 0) return false;
        }
        return true;
    };
    if (!even_diag(N)) N *= 2;
    return {Int(d2) / 2, N};
}

// ------------------------------------------------------------------ reduce

namespace {

struct Mat3 {
    int64_t m[3][3];
};

void apply_congruence(std::array<std::array<int64_t, 3>, 3>& g, const Mat3& t) {
    // g <- t^T g t
    int64_t tmp[3][3] = {};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 3; ++k) s += g[i][k] * t.m[k][j];
            tmp[i][j] = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 3; ++k) s += t.m[k][i] * tmp[k][j];
            g[i][j] = s;
        }
}

TernaryForm from_gram2(const std::array<std::array<int64_t, 3>, 3>& g) {
    return TernaryForm{g[0][0] / 2, g[1][1] / 2, g[2][2] / 2, g[1][2], g[0][2], g[0][1]};
}

bool core_reduced(const TernaryForm& t) {
    return t.a1 <= t.a2 && t.a2 <= t.a3 && std::abs(t.a23) <= t.a2 &&
           std::abs(t.a13) <= t.a1 && std::abs(t.a12) <= t.a1;
}

}  // namespace

TernaryForm reduce(const TernaryForm& t0) {
    if (!t0.positive_definite()) throw std::invalid_argument("reduce: not positive definite");
    auto g = t0.gram2();
    auto swap_vars = [&](int i, int j) {
        Mat3 m{};
        for (int k = 0; k < 3; ++k) m.m[k][k] = 1;
        m.m[i][i] = m.m[j][j] = 0;
        m.m[i][j] = m.m[j][i] = 1;
        apply_congruence(g, m);
    };
    auto shear = [&](int i, int j, int64_t k) {
        // e_i -> e_i + k e_j
        Mat3 m{};
        for (int t = 0; t < 3; ++t) m.m[t][t] = 1;
        m.m[j][i] = k;
        apply_congruence(g, m);
    };
    for (int iter = 0; iter < 10000; ++iter) {
        bool changed = false;
        // order diagonal
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < 2; ++i)
                if (g[i][i] > g[i + 1][i + 1]) { swap_vars(i, i + 1); changed = true; }
        // reduce off-diagonal g[i][j] (i > j) against g[j][j]
        auto flrdiv = [](int64_t a, int64_t b) {
            int64_t q = a / b;
            if ((a % b) && ((a < 0) != (b < 0))) --q;
            return q;
        };
        const std::pair<int, int> pairs[3] = {{1, 0}, {2, 0}, {2, 1}};
        for (auto [i, j] : pairs) {
            if (std::abs(g[i][j]) * 2 > g[j][j]) {
                int64_t k = flrdiv(2 * g[i][j] + g[j][j], 2 * g[j][j]);  // nearest integer
                shear(i, j, -k);
                changed = true;
            }
        }
        if (!changed) break;
        if (iter == 9999) throw std::runtime_error("reduce: no convergence");
    }
    // canonical pass: all signed permutations preserving the core inequalities,
    // pick lexicographically least coefficient tuple
    TernaryForm best = from_gram2(g);
    bool have = core_reduced(best);
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& perm : perms)
        for (int sx = -1; sx <= 1; sx += 2)
            for (int sy = -1; sy <= 1; sy += 2)
                for (int sz = -1; sz <= 1; sz += 2) {
                    Mat3 m{};
                    int sg[3] = {sx, sy, sz};
                    for (int c = 0; c < 3; ++c) m.m[perm[c]][c] = sg[c];
                    auto h = g;
                    apply_congruence(h, m);
                    TernaryForm cand = from_gram2(h);
                    if (!core_reduced(cand)) continue;
                    if (!have || cand < best) { best = cand; have = true; }
                }
    if (!have) throw std::runtime_error("reduce: canonical pass found no reduced form");
    return best;
}

// ------------------------------------------------------- vector enumeration

std::vector<std::array<int64_t, 3>> short_vectors(const TernaryForm& t, int64_t bound) {
    std::vector<std::array<int64_t, 3>> out;
    auto m = t.gram2();
    int64_t d2 = det3(m);
    auto adj = adjugate(m);
    // x_i^2 <= 2*bound*adj_ii/d2
    auto box = [&](int i) {
        double v = 2.0 * double(bound) * double(adj[i][i]) / double(d2);
        return int64_t(std::floor(std::sqrt(std::max(0.0, v)))) + 1;
    };
    int64_t bx = box(0), by = box(1), bz = box(2);
    for (int64_t x = -bx; x <= bx; ++x)
        for (int64_t y = -by; y <= by; ++y)
            for (int64_t z = -bz; z <= bz; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                int64_t q = t.eval(x, y, z);
                if (q <= bound) out.push_back({x, y, z});
            }
    return out;
}

std::vector<int64_t> theta_coefficients_box(const TernaryForm& t, int64_t B) {
    std::vector<int64_t> co(size_t(B + 1), 0);
    co[0] = 1;
    for (auto& v : short_vectors(t, B)) {
        int64_t q = t.eval(v[0], v[1], v[2]);
        if (q >= 1) co[size_t(q)] += 1;
    }
    return co;
}

std::vector<int64_t> theta_coefficients(const TernaryForm& t, int64_t B) {
    if (!t.positive_definite()) throw std::invalid_argument("theta: not positive definite");
    std::vector<int64_t> co(size_t(B + 1), 0);
    co[0] = 1;
    // Fincke-Pohst: Q(x) = q11(x1 + q12 x2 + q13 x3)^2 + q22(x2 + q23 x3)^2 + q33 x3^2
    double a1 = double(t.a1), a2 = double(t.a2), a3 = double(t.a3);
    double b23 = double(t.a23) / 2, b13 = double(t.a13) / 2, b12 = double(t.a12) / 2;
    double q11 = a1, q12 = b12 / a1, q13 = b13 / a1;
    double q22 = a2 - a1 * q12 * q12;
    double q23 = (b23 - a1 * q12 * q13) / q22;
    double q33 = a3 - a1 * q13 * q13 - q22 * q23 * q23;
    const double eps = 1e-9;
    double Bd = double(B) * (1 + 1e-12) + eps;
    int64_t z3max = int64_t(std::floor(std::sqrt(Bd / q33))) + 1;
    for (int64_t x3 = -z3max; x3 <= z3max; ++x3) {
        double r3 = Bd - q33 * double(x3) * double(x3);
        if (r3 < -eps) continue;
        r3 = std::max(r3, 0.0);
        double c2 = -q23 * double(x3);
        double w2 = std::sqrt(r3 / q22) + eps;
        int64_t lo2 = int64_t(std::ceil(c2 - w2)) - 1, hi2 = int64_t(std::floor(c2 + w2)) + 1;
        for (int64_t x2 = lo2; x2 <= hi2; ++x2) {
            double t2 = double(x2) - c2;
            double r2 = r3 - q22 * t2 * t2;
            if (r2 < -eps) continue;
            r2 = std::max(r2, 0.0);
            double c1 = -q12 * double(x2) - q13 * double(x3);
            double w1 = std::sqrt(r2 / q11) + eps;
            int64_t lo1 = int64_t(std::ceil(c1 - w1)) - 1, hi1 = int64_t(std::floor(c1 + w1)) + 1;
            for (int64_t x1 = lo1; x1 <= hi1; ++x1) {
                if (x1 == 0 && x2 == 0 && x3 == 0) continue;
                int64_t q = t.eval(x1, x2, x3);
                if (q >= 0 && q <= B) co[size_t(q)] += 1;
            }
        }
    }
    return co;
}

bool theta_in_kohnen_space(const TernaryForm& t) {
    for (int64_t x = 0; x < 4; ++x)
        for (int64_t y = 0; y < 4; ++y)
            for (int64_t z = 0; z < 4; ++z) {
                int64_t r = ((t.eval(x, y, z) % 4) + 4) % 4;
                if (r == 1 || r == 2) return false;
            }
    return true;
}

// --------------------------------------------------------------- isometry

bool is_equivalent(const TernaryForm& a0, const TernaryForm& b0) {
    if (!a0.positive_definite() || !b0.positive_definite())
        throw std::invalid_argument("is_equivalent: not positive definite");
    TernaryForm a = reduce(a0), b = reduce(b0);
    if (a == b) return true;
    auto ia = ternary_invariants(a), ib = ternary_invariants(b);
    if (ia.disc != ib.disc || ia.level != ib.level) return false;
    // match the basis of a onto vectors of b
    auto g1 = a.gram2();
    int64_t need = std::max({a.a1, a.a2, a.a3});
    auto vs = short_vectors(b, need);
    auto g2 = b.gram2();
    auto ip = [&](const std::array<int64_t, 3>& u, const std::array<int64_t, 3>& v) {
        int64_t s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += u[i] * g2[i][j] * v[j];
        return s;  // = 2 B(u,v)
    };
    std::vector<std::array<int64_t, 3>> c1, c2, c3;
    for (auto& v : vs) {
        int64_t q = b.eval(v[0], v[1], v[2]);
        if (q == a.a1) c1.push_back(v);
        if (q == a.a2) c2.push_back(v);
        if (q == a.a3) c3.push_back(v);
    }
    for (auto& u : c1) {
        for (auto& v : c2) {
            if (ip(u, v) != g1[0][1]) continue;
            for (auto& w : c3) {
                if (ip(u, w) != g1[0][2]) continue;
                if (ip(v, w) != g1[1][2]) continue;
                int64_t det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                              u[2] * (v[0] * w[1] - v[1] * w[0]);
                if (det == 1 || det == -1) return true;
            }
        }
    }
    return false;
}

// ------------------------------------------------------------- enumeration

namespace {

// all classes with disc exactly D, as reduced representatives
std::vector<TernaryForm> classes_by_disc(int64_t D) {
    std::vector<TernaryForm> found;
    for (int64_t a = 1; a * a * a <= D; ++a) {
        for (int64_t b = a; a * b * b <= D; ++b) {
            for (int64_t t = -a; t <= a; ++t) {
                int64_t den = 4 * a * b - t * t;
                if (den <= 0) continue;
                for (int64_t s = -a; s <= a; ++s) {
                    for (int64_t r = -b; r <= b; ++r) {
                        bool pos = r >= 0 && s >= 0 && t >= 0;
                        bool neg = r <= 0 && s <= 0 && t <= 0;
                        if (!pos && !neg) continue;
                        int64_t num = D - r * s * t + a * r * r + b * s * s;
                        if (num % den) continue;
                        int64_t c = num / den;
                        if (c < b) continue;
                        TernaryForm f{a, b, c, r, s, t};
                        if (f.disc() != D || !f.positive_definite()) continue;
                        found.push_back(reduce(f));
                    }
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    // final dedup up to isometry
    std::vector<TernaryForm> classes;
    for (auto& f : found) {
        bool fresh = true;
        for (auto& g : classes)
            if (is_equivalent(f, g)) { fresh = false; break; }
        if (fresh) classes.push_back(f);
    }
    return classes;
}

// reciprocal form of Gram N (2A)^{-1} / 2; valid when level(f) divides N
TernaryForm reciprocal(const TernaryForm& f, int64_t N) {
    auto m = f.gram2();
    int64_t d2 = det3(m);
    auto adj = adjugate(m);
    std::array<std::array<int64_t, 3>, 3> B{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int v = Int(N) * adj[i][j];
            if (v % d2 != 0) throw std::runtime_error("reciprocal: level does not divide N");
            B[i][j] = Int(v / d2).get_si();
        }
    for (int i = 0; i < 3; ++i)
        if (B[i][i] % 2) throw std::runtime_error("reciprocal: odd diagonal");
    return from_gram2(B);
}

}  // namespace

std::vector<TernaryForm> enumerate_classes(const Int& level, bool require_square_disc,
                                           bool kohnen_only) {
    if (level < 1) throw std::invalid_argument("enumerate_classes: level < 1");
    int64_t N = level.get_si();
    Int N3 = Int(N) * N * N;
    // candidate discs d: N | 4d and 4d | N^3 (and square if flagged)
    std::vector<int64_t> cands;
    for (Int d = 1; d * d <= N3; ++d) {
        if (N3 % d != 0) continue;
        Int partner_d = N3 / d;
        for (const Int& dd : {d, partner_d}) {
            if (4 * dd > N3) continue;
            if (N3 % (4 * dd) != 0) continue;
            if ((4 * dd) % N != 0) continue;
            if (require_square_disc) {
                Int r;
                mpz_sqrt(r.get_mpz_t(), dd.get_mpz_t());
                if (r * r != dd) continue;
            }
            int64_t v = dd.get_si();
            if (std::find(cands.begin(), cands.end(), v) == cands.end()) cands.push_back(v);
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<TernaryForm> result;
    for (int64_t d : cands) {
        Int partner = N3 / (4 * Int(d));
        if (partner < d) {
            // enumerate partner disc, map through the reciprocal involution
            for (auto& f : classes_by_disc(partner.get_si())) {
                Int lev = ternary_invariants(f).level;
                if (N % lev != 0) continue;
                TernaryForm g = reduce(reciprocal(f, N));
                auto inv = ternary_invariants(g);
                if (inv.disc == d && inv.level == N) result.push_back(g);
            }
        } else {
            for (auto& f : classes_by_disc(d)) {
                auto inv = ternary_invariants(f);
                if (inv.level == N) result.push_back(f);
            }
        }
    }
    if (kohnen_only) {
        std::vector<TernaryForm> keep;
        for (auto& f : result)
            if (theta_in_kohnen_space(f)) keep.push_back(f);
        result = keep;
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    // paranoia: classes from different disc families are never equivalent,
    // but run a final isometry dedup anyway
    std::vector<TernaryForm> classes;
    for (auto& f : result) {
        bool fresh = true;
        for (auto& g : classes)
            if (ternary_invariants(f).disc == ternary_invariants(g).disc && is_equivalent(f, g)) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(f);
    }
    return classes;
}

std::string ternary_to_json(const TernaryForm& t) {
    nlohmann::json j;
    j["a1"] = t.a1;
    j["a2"] = t.a2;
    j["a3"] = t.a3;
    j["a23"] = t.a23;
    j["a13"] = t.a13;
    j["a12"] = t.a12;
    return j.dump();
}

TernaryForm ternary_from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    return TernaryForm{j.at("a1").get<int64_t>(), j.at("a2").get<int64_t>(),
                       j.at("a3").get<int64_t>(), j.at("a23").get<int64_t>(),
                       j.at("a13").get<int64_t>(), j.at("a12").get<int64_t>()};
}

}  // namespace octmf
