#include "octmf/arith.hpp"
#include "octmf/modpoly.hpp"

#include <algorithm>
#include <sstream>

namespace octmf {

// ---------------------------------------------------------------- integers

std::vector<uint32_t> primes_upto(uint32_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<uint32_t> out;
    if (n < 2) return out;
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(uint32_t(i));
        for (uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

std::map<Int, unsigned> factor_integer(const Int& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    static const std::vector<uint32_t> small = primes_upto(1000000);
    for (uint32_t q : small) {
        if (Int(q) * q > m) break;
        if (m % q == 0) {
            unsigned e = 0;
            while (m % q == 0) { m /= q; ++e; }
            out[Int(q)] += e;
        }
    }
    while (m > 1) {
        if (is_prime(m)) {
            out[m] += 1;
            break;
        }
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            std::map<Int, unsigned> sub = factor_integer(r);
            for (auto& [p, e] : sub) out[p] += 2 * e;
            break;
        }
        // try small perfect powers m = r^k
        bool found = false;
        for (unsigned k = 3; k <= 64 && !found; ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                std::map<Int, unsigned> sub = factor_integer(r);
                for (auto& [p, e] : sub) out[p] += k * e;
                found = true;
            }
        }
        if (found) break;
        throw std::runtime_error("factor_integer: cofactor out of reach: " + m.get_str());
    }
    return out;
}

int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

static int legendre_unit(const Int& u, const Int& p) {
    // (u/p) for odd prime p, p not dividing u
    Int um = u % p;
    if (um < 0) um += p;
    return mpz_legendre(um.get_mpz_t(), p.get_mpz_t());
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    // squares do not matter: represent a by num*den
    Int A = a.get_num() * a.get_den();
    Int B = b.get_num() * b.get_den();
    unsigned long alpha = mpz_remove(A.get_mpz_t(), A.get_mpz_t(), p.get_mpz_t());
    unsigned long beta = mpz_remove(B.get_mpz_t(), B.get_mpz_t(), p.get_mpz_t());
    if (p == 2) {
        auto eps = [](const Int& u) { return unsigned(mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0)); };
        auto omega = [](const Int& u) { return unsigned(mpz_tstbit(Int((u * u - 1) / 8).get_mpz_t(), 0)); };
        unsigned e = eps(A) * eps(B) + (alpha % 2) * omega(B) + (beta % 2) * omega(A);
        return (e % 2) ? -1 : 1;
    }
    int s = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta % 2) s *= legendre_unit(A, p);
    if (alpha % 2) s *= legendre_unit(B, p);
    return s;
}

Int squarefree_part(const Rat& r) {
    if (r == 0) throw std::invalid_argument("squarefree_part: zero");
    Int n = r.get_num() * r.get_den();
    int sign = (n < 0) ? -1 : 1;
    Int m = abs(n);
    Int out = sign;
    static const std::vector<uint32_t> small = primes_upto(1000000);
    for (uint32_t q : small) {
        if (Int(q) * q > m) break;
        if (m % q == 0) {
            unsigned e = 0;
            while (m % q == 0) { m /= q; ++e; }
            if (e % 2) out *= q;
        }
    }
    // cofactor: all prime factors exceed 10^6.  Only the exponent parities
    // matter, so perfect-square parts are dropped without factoring them.
    while (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) break;  // contributes nothing
        if (is_prime(m)) {
            out *= m;
            break;
        }
        bool found = false;
        for (unsigned k = 3; k <= 64 && !found; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                // m = root^k: odd k keeps the parity of root's factors
                m = (k % 2) ? root : Int(1);
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("squarefree_part: cofactor out of reach: " + m.get_str());
    }
    return out;
}

// ------------------------------------------------------------- polynomials

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    return a + Rat(-1) * b;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

RationalPoly operator*(const Rat& s, const RationalPoly& a) {
    RationalPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

RationalPoly monic(const RationalPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    return Rat(1) / f.lc() * f;
}

std::vector<Int> integral_model(const RationalPoly& f) {
    Int den = 1;
    for (const Rat& x : f.c) den = lcm(den, Int(x.get_den()));
    std::vector<Int> out;
    Int content = 0;
    for (const Rat& x : f.c) {
        Rat v = x * den;
        out.push_back(Int(v.get_num()));
        content = gcd(content, out.back());
    }
    if (content > 1)
        for (Int& v : out) v /= content;
    return out;
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rat av = abs(v);
        if (av != 1 || i == 0) os << av.get_str();
        if (i > 0) {
            if (av != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RationalPoly poly_from_coeff_string(const std::string& s) {
    // whitespace/comma separated rationals, ascending degree
    std::istringstream is(s);
    std::vector<Rat> cs;
    std::string tok;
    while (is >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        cs.push_back(rat_from_string(tok));
    }
    return RationalPoly(cs);
}

// Bareiss fraction-free determinant of the Sylvester matrix.
Rat resultant(const RationalPoly& f, const RationalPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    int n = f.degree(), m = g.degree();
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= f.c[0];
        return r;
    }
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= g.c[0];
        return r;
    }
    // clear denominators; adjust at the end
    Int df = 1, dg = 1;
    for (const Rat& x : f.c) df = lcm(df, Int(x.get_den()));
    for (const Rat& x : g.c) dg = lcm(dg, Int(x.get_den()));
    size_t N = size_t(n + m);
    std::vector<std::vector<Int>> M(N, std::vector<Int>(N, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) { Rat v = f.c[size_t(n - j)] * df; M[i][i + j] = Int(v.get_num()); }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) { Rat v = g.c[size_t(m - j)] * dg; M[m + i][i + j] = Int(v.get_num()); }
    Int denom = 1, prev = 1;
    int sign = 1;
    for (size_t k = 0; k < N; ++k) {
        size_t piv = k;
        while (piv < N && M[piv][k] == 0) ++piv;
        if (piv == N) return Rat(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j) {
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    Rat det = make_rat(M[N - 1][N - 1] * sign, 1);
    // undo scaling: each f-row was scaled by df (m rows), each g-row by dg (n rows)
    Rat scale(1);
    for (int i = 0; i < m; ++i) scale *= Rat(df);
    for (int i = 0; i < n; ++i) scale *= Rat(dg);
    return det / scale;
}

Rat poly_discriminant(const RationalPoly& f) {
    int n = f.degree();
    if (n < 2) throw std::invalid_argument("poly_discriminant: degree < 2");
    Rat res = resultant(f, f.derivative());
    Rat d = res / f.lc();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

// ------------------------------------------------------------ mod-p kernel

static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (unsigned __int128)a * b % p;
}
static uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
static uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

ModPoly mp_make(uint64_t p, const std::vector<uint64_t>& coeffs) {
    ModPoly f{p, coeffs};
    for (auto& x : f.c) x %= p;
    f.trim();
    return f;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    }
    r.trim();
    return r;
}

ModPoly mp_rem(ModPoly a, const ModPoly& b) {
    uint64_t p = a.p;
    uint64_t binv = invmod(b.c.back(), p);
    while (a.degree() >= b.degree() && !a.c.empty()) {
        uint64_t c = mulmod(a.c.back(), binv, p);
        size_t d = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i) {
            uint64_t sub = mulmod(c, b.c[i], p);
            a.c[i + d] = (a.c[i + d] + p - sub) % p;
        }
        a.trim();
    }
    return a;
}

ModPoly mp_quo(ModPoly a, const ModPoly& b) {
    uint64_t p = a.p;
    ModPoly q{p, std::vector<uint64_t>(std::max<size_t>(1, a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 1), 0)};
    uint64_t binv = invmod(b.c.back(), p);
    while (a.degree() >= b.degree() && !a.c.empty()) {
        uint64_t c = mulmod(a.c.back(), binv, p);
        size_t d = a.c.size() - b.c.size();
        q.c[d] = c;
        for (size_t i = 0; i < b.c.size(); ++i) {
            uint64_t sub = mulmod(c, b.c[i], p);
            a.c[i + d] = (a.c[i + d] + p - sub) % p;
        }
        a.trim();
    }
    q.trim();
    return q;
}

ModPoly mp_monic(ModPoly a) {
    if (a.c.empty()) return a;
    uint64_t inv = invmod(a.c.back(), a.p);
    for (auto& x : a.c) x = mulmod(x, inv, a.p);
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.c.empty()) {
        ModPoly r = mp_rem(a, b);
        a = b;
        b = r;
    }
    return mp_monic(a);
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly d{a.p, {}};
    for (size_t i = 1; i < a.c.size(); ++i) d.c.push_back(mulmod(a.c[i], i % a.p, a.p));
    d.trim();
    return d;
}

ModPoly mp_powmod_xq(const ModPoly& mod, uint64_t p, unsigned e) {
    // x^(p^e) mod `mod` by e rounds of x -> x^p
    ModPoly r = mp_rem(ModPoly{mod.p, {0, 1}}, mod);
    for (unsigned round = 0; round < e; ++round) {
        // r = r^p mod `mod` via square-and-multiply over exponent p
        ModPoly acc{mod.p, {1}};
        ModPoly base = r;
        uint64_t ee = p;
        while (ee) {
            if (ee & 1) acc = mp_rem(mp_mul(acc, base), mod);
            base = mp_rem(mp_mul(base, base), mod);
            ee >>= 1;
        }
        r = acc;
    }
    return r;
}

std::vector<int> mp_ddf_degrees(ModPoly f) {
    std::vector<int> out;
    f = mp_monic(f);
    int d = 1;
    while (f.degree() >= 2 * d) {
        ModPoly xq = mp_powmod_xq(f, f.p, unsigned(d));
        // xq - x
        ModPoly sub = xq;
        if (sub.c.size() < 2) sub.c.resize(2, 0);
        sub.c[1] = (sub.c[1] + f.p - 1) % f.p;
        sub.trim();
        ModPoly g = mp_gcd(f, sub);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
            f = mp_quo(f, g);
        }
        ++d;
    }
    if (f.degree() > 0) out.push_back(f.degree());
    std::sort(out.begin(), out.end());
    return out;
}

// Squarefree decomposition over F_p (Geddes et al.), then DDF per layer.
static void sfd(ModPoly f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    uint64_t p = f.p;
    if (f.degree() <= 0) return;
    f = mp_monic(f);
    ModPoly d = mp_derivative(f);
    if (d.c.empty()) {
        ModPoly g{p, {}};
        for (size_t i = 0; i < f.c.size(); i += size_t(p)) g.c.push_back(f.c[i]);
        g.trim();
        sfd(g, mult * int(p), out);
        return;
    }
    ModPoly a = mp_gcd(f, d);
    ModPoly w = mp_quo(f, a);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = mp_gcd(w, a);
        ModPoly z = mp_quo(w, y);
        if (z.degree() > 0) out.emplace_back(z, mult * i);
        w = y;
        a = mp_quo(a, y);
        ++i;
    }
    if (a.degree() > 0) {
        ModPoly g{p, {}};
        for (size_t j = 0; j < a.c.size(); j += size_t(p)) g.c.push_back(a.c[j]);
        g.trim();
        sfd(g, mult * int(p), out);
    }
}

std::vector<std::pair<int, int>> mp_factor_shape(ModPoly f) {
    std::vector<std::pair<ModPoly, int>> layers;
    sfd(f, 1, layers);
    std::vector<std::pair<int, int>> shape;
    for (auto& [z, mult] : layers)
        for (int d : mp_ddf_degrees(z)) shape.emplace_back(d, mult);
    std::sort(shape.begin(), shape.end());
    return shape;
}

// ----------------------------------------------------- pattern entry points

static ModPoly reduce_integral(const RationalPoly& f, const Int& p) {
    std::vector<Int> zf = integral_model(f);
    if (zf.empty()) throw std::invalid_argument("pattern: zero polynomial");
    if (zf.back() % p == 0) throw std::runtime_error("bad reduction at p = " + p.get_str());
    uint64_t pp = p.get_ui();
    std::vector<uint64_t> c;
    c.reserve(zf.size());
    for (const Int& v : zf) {
        Int r = v % p;
        if (r < 0) r += p;
        c.push_back(r.get_ui());
    }
    return mp_make(pp, c);
}

FactorizationPattern factorization_pattern_mod_p(const RationalPoly& f, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("pattern: p not prime");
    ModPoly fp = reduce_integral(f, p);
    auto shape = mp_factor_shape(fp);
    FactorizationPattern out;
    out.squarefree = true;
    for (auto& [d, m] : shape) {
        out.degrees.push_back(d);
        if (m != 1) out.squarefree = false;
    }
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

std::vector<std::pair<int, int>> factor_shape_mod_p(const RationalPoly& f, const Int& p) {
    return mp_factor_shape(reduce_integral(f, p));
}

}  // namespace octmf
