#include "octmf/halfint.hpp"

#include "octmf/arith.hpp"
#include "octmf/elliptic.hpp"
#include "octmf/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace octmf {

std::string QNum::str() const {
    std::ostringstream os;
    if (y == 0) return x.get_str();
    Rat ay = abs(y);
    os << x.get_str() << (y > 0 ? "+" : "-") << ay.get_str() << "*sqrt(-2)";
    return os.str();
}

QExpansion QExpansion::zero(int B) {
    QExpansion q;
    q.B = B;
    q.c.assign(size_t(B) + 1, QNum());
    q.known.assign(size_t(B) + 1, 1);
    return q;
}

bool QExpansion::all_known() const {
    return std::all_of(known.begin(), known.end(), [](uint8_t k) { return k != 0; });
}

bool QExpansion::is_rational() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (known[i] && c[i].y != 0) return false;
    return true;
}

QExpansion theta_unary(long n, int B) {
    if (n < 1) throw std::invalid_argument("theta_unary: n < 1");
    QExpansion q = QExpansion::zero(B);
    q.weight = Weight::half;
    q.level = 4 * n;
    q.character = n;
    for (long j = 0; n * j * j <= B; ++j)
        q.c[size_t(n * j * j)].x += (j == 0) ? 1 : 2;
    return q;
}

QExpansion ternary_theta(const TernaryForm& t, int B) {
    auto co = theta_coefficients(t, B);
    QExpansion q = QExpansion::zero(B);
    q.weight = Weight::three_half;
    auto inv = ternary_invariants(t);
    q.level = inv.level.get_si();
    Int r;
    mpz_sqrt(r.get_mpz_t(), inv.disc.get_mpz_t());
    q.character = (r * r == inv.disc) ? 0 : inv.disc.get_si();
    for (int i = 0; i <= B; ++i) q.c[size_t(i)].x = long(co[size_t(i)]);
    return q;
}

QExpansion product_weight_3_2(const QExpansion& g, long d, int B) {
    if (g.weight != Weight::one) throw std::invalid_argument("product: g must have weight 1");
    if (d <= 0 || g.level % d != 0)
        throw std::invalid_argument("product: Lemma hypothesis violated (need d > 0, d | level)");
    if (g.character != -d) throw std::invalid_argument("product: character must be (-d/.)");
    if (B > g.B) throw std::invalid_argument("product: insufficient source truncation");
    QExpansion out = QExpansion::zero(B);
    out.weight = Weight::three_half;
    out.level = std::lcm(g.level, 4 * d);
    out.character = 0;
    for (int n = 0; n <= B; ++n) {
        QNum acc;
        bool ok = true;
        for (long j = 0; d * j * j <= n; ++j) {
            long m = n - d * j * j;
            if (!g.known[size_t(m)]) { ok = false; break; }
            QNum term = g.c[size_t(m)];
            if (j > 0) term = term + term;
            acc = acc + term;
        }
        if (ok) out.set(n, acc);
        else out.known[size_t(n)] = 0;
    }
    return out;
}

QExpansion expand_4z(const QExpansion& g, int B) {
    if (4 * int64_t(g.B) < B) throw std::invalid_argument("expand_4z: insufficient source truncation");
    QExpansion out = QExpansion::zero(B);
    out.weight = g.weight;
    out.level = 4 * g.level;
    out.character = g.character;
    for (int n = 0; n <= B; ++n) {
        if (n % 4) continue;
        if (!g.known[size_t(n / 4)]) out.known[size_t(n)] = 0;
        else out.c[size_t(n)] = g.c[size_t(n / 4)];
    }
    return out;
}

bool kohnen_check(const QExpansion& f) {
    if (f.weight != Weight::three_half) throw std::invalid_argument("kohnen_check: weight must be 3/2");
    for (int n = 0; n <= f.B; ++n) {
        if (!f.known[size_t(n)]) continue;
        int r = n % 4;
        if ((r == 1 || r == 2) && !f.c[size_t(n)].is_zero()) return false;
    }
    return true;
}

QExpansion hecke_Tp2(const QExpansion& f, long p, int B_out) {
    if (f.level % p == 0) throw std::invalid_argument("hecke_Tp2: p divides the level");
    if (int64_t(p) * p * B_out > f.B)
        throw std::invalid_argument("hecke_Tp2: insufficient truncation");
    QExpansion out = QExpansion::zero(B_out);
    out.weight = f.weight;
    out.level = f.level;
    out.character = f.character;
    for (int m = 0; m <= B_out; ++m) {
        size_t hi = size_t(int64_t(p) * p * m);
        bool ok = f.known[hi] && f.known[size_t(m)];
        QNum b;
        if (ok) {
            b = f.c[hi];
            int chi = kronecker_symbol(Int(-m), Int(p));
            if (chi == 1) b = b + f.c[size_t(m)];
            else if (chi == -1) b = b - f.c[size_t(m)];
            if (m % (p * p) == 0) {
                if (!f.known[size_t(m / (p * p))]) ok = false;
                else {
                    QNum t = f.c[size_t(m / (p * p))];
                    b = b + QNum(Rat(p) * t.x, Rat(p) * t.y);
                }
            }
        }
        if (ok) out.set(m, b);
        else out.known[size_t(m)] = 0;
    }
    return out;
}

// ----------------------------------------------------- exact linear algebra

namespace {

// reduced row echelon form over Q(sqrt(-2)); returns pivot column list
std::vector<int> rref_inplace(std::vector<std::vector<QNum>>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < int(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (!rows[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        QNum inv = QNum(Rat(1), Rat(0)) / rows[r][c];
        for (auto& x : rows[r]) x = x * inv;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            QNum f = rows[i][c];
            for (int j = 0; j < int(rows[i].size()); ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::pair<int, std::vector<int>> rank_and_basis(const std::vector<QExpansion>& xs, int B) {
    for (const auto& x : xs)
        if (x.B < B) throw std::invalid_argument("rank_and_basis: truncation too short");
    int n = int(xs.size());
    // columns = series; row-reduce the transpose to find independent columns
    std::vector<std::vector<QNum>> rows;
    for (int m = 0; m <= B; ++m) {
        bool ok = true;
        for (const auto& x : xs)
            if (!x.known[size_t(m)]) { ok = false; break; }
        if (!ok) continue;
        std::vector<QNum> row(n);
        for (int j = 0; j < n; ++j) row[j] = xs[j].c[size_t(m)];
        rows.push_back(std::move(row));
    }
    auto piv = rref_inplace(rows, n);
    return {int(piv.size()), piv};
}

namespace {

std::vector<std::vector<QNum>> hecke_matrix_window(const std::vector<QExpansion>& basis, long p,
                                                   int B_express) {
    int n = int(basis.size());
    if (n == 0) throw std::invalid_argument("hecke_matrix: empty basis");
    int64_t need = int64_t(p) * p * B_express;
    for (const auto& b : basis)
        if (b.B < need) throw InsufficientPrecision("hecke_matrix: expansions shorter than p^2*B");
    // rows where every basis coefficient and every image coefficient is known
    std::vector<QExpansion> images;
    for (const auto& b : basis) images.push_back(hecke_Tp2(b, p, B_express));
    std::vector<int> window;
    for (int m = 1; m <= B_express; ++m) {
        bool ok = true;
        for (const auto& b : basis)
            if (!b.known[size_t(m)]) { ok = false; break; }
        for (const auto& im : images)
            if (ok && !im.known[size_t(m)]) ok = false;
        if (ok) window.push_back(m);
    }
    // solve [basis columns] x = image for each image, all at once
    std::vector<std::vector<QNum>> aug;
    for (int m : window) {
        std::vector<QNum> row(n + n);
        for (int j = 0; j < n; ++j) row[j] = basis[j].c[size_t(m)];
        for (int j = 0; j < n; ++j) row[n + j] = images[j].c[size_t(m)];
        aug.push_back(std::move(row));
    }
    auto piv = rref_inplace(aug, n);
    if (int(piv.size()) < n)
        throw InsufficientPrecision("hecke_matrix: basis not independent on the window (rank " +
                                    std::to_string(piv.size()) + " of " + std::to_string(n) + ")");
    std::vector<std::vector<QNum>> M(n, std::vector<QNum>(n));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) M[piv[r]][j] = aug[r][n + j];
    // verify on the whole window: T(b_j) = sum_i M[i][j] b_i coefficientwise
    for (int j = 0; j < n; ++j)
        for (int m : window) {
            QNum acc;
            for (int i = 0; i < n; ++i) acc = acc + M[i][j] * basis[i].c[size_t(m)];
            if (!(acc == images[j].c[size_t(m)])) throw NotInSpan(j, m);
        }
    return M;
}

}  // namespace

std::vector<std::vector<QNum>> hecke_matrix(const std::vector<QExpansion>& basis, long p,
                                            int B_express) {
    // underdetermined windows retry at doubled width while the truncations allow
    int be = B_express;
    while (true) {
        try {
            return hecke_matrix_window(basis, p, be);
        } catch (const InsufficientPrecision&) {
            int64_t need = int64_t(p) * p * 2 * be;
            bool can_grow = true;
            for (const auto& b : basis)
                if (b.B < need) can_grow = false;
            if (!can_grow) throw;
            be *= 2;
        }
    }
}

EigenformResult eigenform_search(const std::vector<QExpansion>& basis, const WeierstrassCurve& E,
                                 const std::vector<long>& primes, const QNum& leading) {
    int n = int(basis.size());
    if (n == 0) throw std::invalid_argument("eigenform_search: empty basis");
    int Bavail = basis[0].B;
    for (const auto& b : basis) Bavail = std::min(Bavail, b.B);
    // joint system over all primes: (T_{p^2} - a_p) (sum x_i b_i) = 0 on known rows
    std::vector<std::vector<QNum>> rows;
    for (long p : primes) {
        long lam = ap(E, Int(p));
        int Bm = int(Bavail / (p * p));
        std::vector<QExpansion> images;
        for (const auto& b : basis) images.push_back(hecke_Tp2(b, p, Bm));
        for (int m = 1; m <= Bm; ++m) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                ok = basis[j].known[size_t(m)] && images[j].known[size_t(m)];
            if (!ok) continue;
            std::vector<QNum> row(n);
            for (int j = 0; j < n; ++j)
                row[j] = images[j].c[size_t(m)] - QNum(Rat(lam), Rat(0)) * basis[j].c[size_t(m)];
            rows.push_back(std::move(row));
        }
    }
    auto piv = rref_inplace(rows, n);
    int nullity = n - int(piv.size());
    if (nullity == 0)
        throw std::runtime_error("eigenform_search: empty eigenspace intersection");
    if (nullity > 1)
        throw std::runtime_error("eigenform_search: eigenspace dimension " +
                                 std::to_string(nullity) + " > 1 (needs more primes)");
    int free_col = 0;
    {
        std::vector<bool> isp(n, false);
        for (int c : piv) isp[size_t(c)] = true;
        for (int c = 0; c < n; ++c)
            if (!isp[size_t(c)]) { free_col = c; break; }
    }
    std::vector<QNum> x(n);
    x[size_t(free_col)] = QNum(Rat(1), Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) x[size_t(piv[r])] = QNum() - rows[r][size_t(free_col)];
    // expansion
    QExpansion out = QExpansion::zero(Bavail);
    out.weight = basis[0].weight;
    out.level = basis[0].level;
    for (const auto& b : basis) out.level = std::lcm(out.level, b.level);
    out.character = 0;
    for (int m = 0; m <= Bavail; ++m) {
        bool ok = true;
        QNum acc;
        for (int j = 0; j < n; ++j) {
            if (x[size_t(j)].is_zero()) continue;
            if (!basis[j].known[size_t(m)]) { ok = false; break; }
            acc = acc + x[size_t(j)] * basis[j].c[size_t(m)];
        }
        if (ok) out.set(m, acc);
        else out.known[size_t(m)] = 0;
    }
    // normalize: first nonzero known coefficient = leading
    QNum scale;
    bool found = false;
    for (int m = 0; m <= Bavail; ++m) {
        if (!out.known[size_t(m)]) continue;
        if (!out.c[size_t(m)].is_zero()) {
            scale = leading / out.c[size_t(m)];
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("eigenform_search: zero eigenvector");
    for (int m = 0; m <= Bavail; ++m)
        if (out.known[size_t(m)]) out.c[size_t(m)] = out.c[size_t(m)] * scale;
    for (auto& xi : x) xi = xi * scale;
    return {x, out};
}

std::string qexpansion_to_json(const QExpansion& q, int upto) {
    if (upto < 0 || upto > q.B) upto = q.B;
    std::ostringstream os;
    os << "[";
    for (int n = 0; n <= upto; ++n) {
        if (n) os << ",";
        if (!q.known[size_t(n)]) os << "null";
        else {
            Rat x = q.c[size_t(n)].x, y = q.c[size_t(n)].y;
            os << "[\"" << x.get_str() << "\",\"" << y.get_str() << "\"]";
        }
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------- dimensions

long gamma0_index(long N) {
    long mu = N;
    Int nn(N);
    for (auto& [p, e] : factor_integer(nn)) {
        long pl = p.get_si();
        mu = mu / pl * (pl + 1);
    }
    return mu;
}

long gamma0_cusp_count(long N) {
    long c = 0;
    for (long d = 1; d <= N; ++d) {
        if (N % d) continue;
        long g = std::gcd(d, N / d);
        // Euler phi(g)
        long phi = g;
        Int gg(g);
        if (g > 1)
            for (auto& [p, e] : factor_integer(gg)) {
                long pl = p.get_si();
                phi = phi / pl * (pl - 1);
            }
        c += phi;
    }
    return c;
}

long gamma0_genus(long N) {
    long mu = gamma0_index(N);
    long nu2;
    if (N % 4 == 0) nu2 = 0;
    else {
        nu2 = 1;
        for (auto& [p, e] : factor_integer(Int(N))) {
            if (p == 2) continue;
            nu2 *= 1 + kronecker_symbol(Int(-1), p);
        }
    }
    long nu3;
    if (N % 9 == 0) nu3 = 0;
    else {
        nu3 = 1;
        for (auto& [p, e] : factor_integer(Int(N))) {
            if (p == 3) { nu3 *= 1; continue; }
            nu3 *= 1 + kronecker_symbol(Int(-3), p);
        }
    }
    long nuinf = gamma0_cusp_count(N);
    // g = 1 + mu/12 - nu2/4 - nu3/3 - nuinf/2
    long num = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * nuinf;
    if (num % 12) throw std::runtime_error("gamma0_genus: non-integral result");
    return num / 12;
}

long dim_weight_3_2(long level) {
    if (level % 4 != 0) throw std::invalid_argument("dim_weight_3_2: level not divisible by 4");
    long g = gamma0_genus(level);
    long nuinf = gamma0_cusp_count(level);
    // constraint divisor from the theta multiplication into weight 2:
    // ceil(width/4) at each cusp a/d with v2(d) = 1
    long D = 0;
    for (long d = 1; d <= level; ++d) {
        if (level % d) continue;
        long v2 = 0, dd = d;
        while (dd % 2 == 0) { dd /= 2; ++v2; }
        if (v2 != 1) continue;
        long gcd_ = std::gcd(d, level / d);
        long width = level / (d * gcd_);
        long cnt = gcd_;  // phi(gcd)
        Int gg(gcd_);
        if (gcd_ > 1)
            for (auto& [p, e] : factor_integer(gg)) {
                long pl = p.get_si();
                cnt = cnt / pl * (pl - 1);
            }
        D += cnt * ((width + 3) / 4);
    }
    return g + nuinf - 1 - D;
}

}  // namespace octmf
