#include "octmf/octahedral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace octmf {

// ------------------------------------------------------------- FiniteGroup

void FiniteGroup::finish() {
    if (n <= 0 || int(mul.size()) != n) throw std::invalid_argument("group: bad table");
    for (auto& row : mul)
        if (int(row.size()) != n) throw std::invalid_argument("group: ragged table");
    // identity at 0
    for (int g = 0; g < n; ++g)
        if (mul[0][g] != g || mul[g][0] != g) throw std::invalid_argument("group: identity not at 0");
    // closure bounds
    for (auto& row : mul)
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group: closure");
    // associativity, exhaustive
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("group: associativity fails");
    inv.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (mul[g][h] == 0) { inv[g] = h; break; }
    for (int g = 0; g < n; ++g)
        if (inv[g] < 0) throw std::invalid_argument("group: missing inverse");
}

int FiniteGroup::order_of(int g) const {
    int e = g, o = 1;
    while (e != 0) { e = mul[e][g]; ++o; }
    return o;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int g = 0; g < n; ++g) {
        if (cls[g] >= 0) continue;
        std::set<int> orbit;
        for (int h = 0; h < n; ++h) orbit.insert(mul[mul[h][g]][inv[h]]);
        std::vector<int> v(orbit.begin(), orbit.end());
        for (int x : v) cls[x] = int(out.size());
        out.push_back(v);
    }
    return out;
}

bool Cocycle2::is_cocycle(const FiniteGroup& G) const {
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                uint8_t lhs = (*this)(g, h) ^ (*this)(G.mul[g][h], k);
                uint8_t rhs = (*this)(h, k) ^ (*this)(g, G.mul[h][k]);
                if (lhs != rhs) return false;
            }
    return true;
}

// ------------------------------------------------------------------ GL2F3

namespace {

std::array<int, 4> mat_mul3(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
}

FiniteGroup group_from_perms4(const std::vector<std::array<int, 4>>& perms) {
    FiniteGroup G;
    G.n = int(perms.size());
    std::map<std::array<int, 4>, int> idx;
    for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = int(i);
    G.mul.assign(G.n, std::vector<int>(G.n));
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            std::array<int, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(x) = a(b(x))
            G.mul[a][b] = idx.at(c);
        }
    G.finish();
    return G;
}

std::vector<int> perm_cycle_type(const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> ct;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
        ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end());
    return ct;
}

Gl2F3 build_gl2f3_impl() {
    Gl2F3 out;
    // enumerate invertible matrices, identity first
    std::vector<std::array<int, 4>> mats;
    mats.push_back({1, 0, 0, 1});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    if ((a * d - b * c) % 3 == 0) continue;
                    std::array<int, 4> m{a, b, c, d};
                    if (m == mats[0]) continue;
                    mats.push_back(m);
                }
    out.mats = mats;
    std::map<std::array<int, 4>, int> idx;
    for (size_t i = 0; i < mats.size(); ++i) idx[mats[i]] = int(i);
    out.G.n = int(mats.size());
    out.G.mul.assign(out.G.n, std::vector<int>(out.G.n));
    for (int i = 0; i < out.G.n; ++i)
        for (int j = 0; j < out.G.n; ++j) out.G.mul[i][j] = idx.at(mat_mul3(mats[i], mats[j]));
    out.G.finish();
    out.minus_identity = idx.at({2, 0, 0, 2});

    // action on P^1(F3): points [1:0],[0:1],[1:1],[1:2]
    const std::array<std::pair<int, int>, 4> pts = {{{1, 0}, {0, 1}, {1, 1}, {1, 2}}};
    auto normalize = [&](int x, int y) {
        if (x % 3 != 0) {
            int inv = (x % 3 == 1) ? 1 : 2;
            return std::pair<int, int>(1, (y * inv) % 3);
        }
        return std::pair<int, int>(0, 1);
    };
    std::vector<std::array<int, 4>> perms(out.G.n);
    for (int g = 0; g < out.G.n; ++g) {
        const auto& m = mats[g];
        for (int i = 0; i < 4; ++i) {
            auto [x, y] = pts[i];
            auto w = normalize((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
            int j = int(std::find(pts.begin(), pts.end(), w) - pts.begin());
            perms[g][i] = j;
        }
    }
    // S4 = set of distinct permutations, identity first
    std::vector<std::array<int, 4>> s4;
    s4.push_back({0, 1, 2, 3});
    for (auto& p : perms)
        if (std::find(s4.begin(), s4.end(), p) == s4.end()) s4.push_back(p);
    if (s4.size() != 24) throw std::runtime_error("gl2f3: projection image wrong size");
    out.S4 = group_from_perms4(s4);
    out.s4_perms = s4;
    out.proj.resize(out.G.n);
    for (int g = 0; g < out.G.n; ++g)
        out.proj[g] = int(std::find(s4.begin(), s4.end(), perms[g]) - s4.begin());
    return out;
}

}  // namespace

int Gl2F3::index_of_matrix(const std::array<int, 4>& m) const {
    std::array<int, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = ((m[i] % 3) + 3) % 3;
    auto it = std::find(mats.begin(), mats.end(), r);
    if (it == mats.end()) throw std::invalid_argument("not an invertible matrix mod 3");
    return int(it - mats.begin());
}

const Gl2F3& gl2f3() {
    static Gl2F3 g = build_gl2f3_impl();
    return g;
}

bool s3_subgroup_check() {
    const Gl2F3& g = gl2f3();
    int a = g.index_of_matrix({0, 1, 1, 0});
    int b = g.index_of_matrix({1, 2, 0, 2});
    std::set<int> sub{0, a, b};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(sub.begin(), sub.end());
        for (int x : cur)
            for (int y : cur)
                if (sub.insert(g.G.mul[x][y]).second) grew = true;
    }
    if (sub.size() != 6) return false;
    // nonabelian
    return g.G.mul[a][b] != g.G.mul[b][a];
}

bool extension_splits() {
    const Gl2F3& g = gl2f3();
    // generators of S4: a transposition and a 4-cycle
    int ta = -1, tb = -1;
    for (int s = 0; s < 24; ++s) {
        auto ct = perm_cycle_type(std::vector<int>(g.s4_perms[s].begin(), g.s4_perms[s].end()));
        if (ta < 0 && ct == std::vector<int>{1, 1, 2}) ta = s;
        if (tb < 0 && ct == std::vector<int>{4}) tb = s;
    }
    std::vector<int> lifts_a, lifts_b;
    for (int x = 0; x < g.G.n; ++x) {
        if (g.proj[x] == ta) lifts_a.push_back(x);
        if (g.proj[x] == tb) lifts_b.push_back(x);
    }
    for (int la : lifts_a)
        for (int lb : lifts_b) {
            std::set<int> sub{0, la, lb};
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<int> cur(sub.begin(), sub.end());
                for (int x : cur)
                    for (int y : cur)
                        if (sub.insert(g.G.mul[x][y]).second) grew = true;
            }
            if (sub.size() == 24) return true;
        }
    return false;
}

// --------------------------------------------------------------- semidirect

namespace {

// S3 as permutations of {0,1,2} <-> linear action on the nonzero vectors 1,2,3 of F2^2
const int S3N = 6;
std::array<std::array<int, 3>, 6> s3_perms() {
    std::array<std::array<int, 3>, 6> p{};
    int idx = 0;
    std::array<int, 3> base{0, 1, 2};
    std::sort(base.begin(), base.end());
    do { p[idx++] = base; } while (std::next_permutation(base.begin(), base.end()));
    // ensure identity first
    for (int i = 0; i < 6; ++i)
        if (p[i] == std::array<int, 3>{0, 1, 2}) std::swap(p[0], p[i]);
    return p;
}

// act on F2^2 value v in {0..3}: nonzero values 1,2,3 correspond to slots 0,1,2
int s3_act_v2(const std::array<int, 3>& sigma, int v) {
    if (v == 0) return 0;
    return 1 + sigma[v - 1];
}

SemidirectG build_semidirect_impl() {
    SemidirectG out;
    auto perms = s3_perms();
    auto compose = [&](int a, int b) {
        // (ab)(i) = a(b(i))
        std::array<int, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return int(std::find(perms.begin(), perms.end(), c) - perms.begin());
    };
    // G = pairs (sigma, v) with v in 0..15 = (u, w) two F2^2 values; identity first
    for (int s = 0; s < S3N; ++s)
        for (int v = 0; v < 16; ++v) out.elems.emplace_back(s, v);
    out.G.n = 96;
    out.G.mul.assign(96, std::vector<int>(96));
    auto act = [&](int s, int v) {
        int u = v >> 2, w = v & 3;
        return (s3_act_v2(perms[s], u) << 2) | s3_act_v2(perms[s], w);
    };
    auto eid = [&](int s, int v) { return s * 16 + v; };
    for (int i = 0; i < 96; ++i)
        for (int j = 0; j < 96; ++j) {
            auto [s1, v1] = out.elems[i];
            auto [s2, v2] = out.elems[j];
            out.G.mul[i][j] = eid(compose(s1, s2), v1 ^ act(s1, v2));
        }
    out.G.finish();

    // target S4 presented the same way on F2^2, then identified with the
    // permutation S4 of gl2f3 through its action on the 4 cosets of S3 x {0}
    struct Small {
        std::vector<std::pair<int, int>> elems;
        std::vector<std::vector<int>> mul;
    } T;
    for (int s = 0; s < S3N; ++s)
        for (int v = 0; v < 4; ++v) T.elems.emplace_back(s, v);
    T.mul.assign(24, std::vector<int>(24));
    auto tid = [&](int s, int v) { return s * 4 + v; };
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            auto [s1, v1] = T.elems[i];
            auto [s2, v2] = T.elems[j];
            T.mul[i][j] = tid(compose(s1, s2), v1 ^ s3_act_v2(perms[s1], v2));
        }
    // left cosets xH of H = {(s, 0)}; left multiplication is a left action,
    // matching the (ab)(i) = a(b(i)) composition of the permutation group
    std::vector<int> coset(24, -1);
    int nco = 0;
    for (int i = 0; i < 24; ++i) {
        if (coset[i] >= 0) continue;
        for (int s = 0; s < S3N; ++s) {
            int j = T.mul[i][tid(s, 0)];
            coset[j] = nco;
        }
        ++nco;
    }
    if (nco != 4) throw std::runtime_error("semidirect: coset count");
    auto coset_perm = [&](int g) {
        // left multiplication: coset(x) -> coset(g*x)
        std::array<int, 4> pm{-1, -1, -1, -1};
        for (int x = 0; x < 24; ++x) pm[coset[x]] = coset[T.mul[g][x]];
        return pm;
    };
    const Gl2F3& gg = gl2f3();
    std::vector<int> t_to_s4(24);
    for (int g = 0; g < 24; ++g) {
        auto pm = coset_perm(g);
        auto it = std::find(gg.s4_perms.begin(), gg.s4_perms.end(), pm);
        if (it == gg.s4_perms.end()) throw std::runtime_error("semidirect: coset action not in S4");
        t_to_s4[g] = int(it - gg.s4_perms.begin());
    }
    // faithful?
    {
        std::set<int> img(t_to_s4.begin(), t_to_s4.end());
        if (img.size() != 24) throw std::runtime_error("semidirect: coset action not faithful");
    }
    out.S4 = gg.S4;
    out.pi1.resize(96);
    out.pi2.resize(96);
    out.pi3.resize(96);
    for (int i = 0; i < 96; ++i) {
        auto [s, v] = out.elems[i];
        int u = v >> 2, w = v & 3;
        out.pi1[i] = t_to_s4[tid(s, u)];
        out.pi2[i] = t_to_s4[tid(s, w)];
        out.pi3[i] = t_to_s4[tid(s, u ^ w)];
    }
    // verify the projections are homomorphisms
    for (auto* pi : {&out.pi1, &out.pi2, &out.pi3})
        for (int i = 0; i < 96; ++i)
            for (int j = 0; j < 96; ++j)
                if ((*pi)[out.G.mul[i][j]] != out.S4.mul[(*pi)[i]][(*pi)[j]])
                    throw std::runtime_error("semidirect: projection not a homomorphism");
    return out;
}

}  // namespace

const SemidirectG& semidirect_group() {
    static SemidirectG g = build_semidirect_impl();
    return g;
}

std::vector<std::vector<int>> normal_order4_subgroups() {
    const SemidirectG& sg = semidirect_group();
    const FiniteGroup& G = sg.G;
    // enumerate subgroups of order 4: generated by pairs of elements
    std::set<std::vector<int>> subs;
    for (int a = 1; a < G.n; ++a) {
        for (int b = a; b < G.n; ++b) {
            std::set<int> sub{0, a, b};
            bool grew = true;
            while (grew && sub.size() <= 4) {
                grew = false;
                std::vector<int> cur(sub.begin(), sub.end());
                for (int x : cur)
                    for (int y : cur)
                        if (sub.insert(G.mul[x][y]).second) grew = true;
            }
            if (sub.size() != 4) continue;
            subs.insert(std::vector<int>(sub.begin(), sub.end()));
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& sub : subs) {
        bool normal = true;
        for (int g = 0; g < G.n && normal; ++g)
            for (int x : sub)
                if (!std::binary_search(sub.begin(), sub.end(), G.mul[G.mul[g][x]][G.inv[g]])) {
                    normal = false;
                    break;
                }
        if (normal) out.push_back(sub);
    }
    return out;
}

std::vector<int> s3_orbit_sizes_on_v4() {
    auto perms = s3_perms();
    std::vector<int> sizes;
    std::vector<bool> seen(16, false);
    for (int v = 0; v < 16; ++v) {
        if (seen[v]) continue;
        std::set<int> orbit;
        for (int s = 0; s < S3N; ++s) {
            int u = v >> 2, w = v & 3;
            orbit.insert((s3_act_v2(perms[s], u) << 2) | s3_act_v2(perms[s], w));
        }
        for (int x : orbit) seen[x] = true;
        sizes.push_back(int(orbit.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool five_subgroup_check() {
    // subgroups of (Z/2)^4 of order 4 = 2-dimensional subspaces
    std::vector<std::vector<int>> spaces;
    for (int a = 1; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) {
            if (b == (a ^ b) || a == (a ^ b)) continue;
            std::vector<int> sp{0, a, b, a ^ b};
            std::sort(sp.begin(), sp.end());
            if (std::find(spaces.begin(), spaces.end(), sp) == spaces.end()) spaces.push_back(sp);
        }
    if (spaces.size() != 35) return false;
    auto triv = [](const std::vector<int>& x, const std::vector<int>& y) {
        for (int v : x)
            if (v && std::find(y.begin(), y.end(), v) != y.end()) return false;
        return true;
    };
    // the five distinguished subgroups: vectors (x,y,z,w) -> ((x,y) << 2) | (z,w) with
    // F2^2 value (a,b) = 2a + b
    auto enc = [](int x, int y, int z, int w) { return ((2 * x + y) << 2) | (2 * z + w); };
    std::vector<std::vector<int>> five = {
        {0, enc(1, 0, 0, 0), enc(0, 1, 0, 0), enc(1, 1, 0, 0)},
        {0, enc(0, 0, 1, 0), enc(0, 0, 0, 1), enc(0, 0, 1, 1)},
        {0, enc(1, 0, 1, 0), enc(0, 1, 0, 1), enc(1, 1, 1, 1)},
        {0, enc(1, 0, 0, 1), enc(0, 1, 1, 1), enc(1, 1, 1, 0)},
        {0, enc(1, 1, 0, 1), enc(1, 0, 1, 1), enc(0, 1, 1, 0)},
    };
    for (auto& s : five) {
        std::sort(s.begin(), s.end());
        // must be closed
        for (int x : s)
            for (int y : s)
                if (std::find(s.begin(), s.end(), x ^ y) == s.end()) return false;
    }
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            if (!triv(five[i], five[j])) return false;
    // exhaustive: every pairwise-trivial triple admits exactly two completers
    for (size_t i = 0; i < spaces.size(); ++i)
        for (size_t j = i + 1; j < spaces.size(); ++j) {
            if (!triv(spaces[i], spaces[j])) continue;
            for (size_t k = j + 1; k < spaces.size(); ++k) {
                if (!triv(spaces[i], spaces[k]) || !triv(spaces[j], spaces[k])) continue;
                int completers = 0;
                for (size_t l = 0; l < spaces.size(); ++l) {
                    if (l == i || l == j || l == k) continue;
                    if (triv(spaces[i], spaces[l]) && triv(spaces[j], spaces[l]) &&
                        triv(spaces[k], spaces[l]))
                        ++completers;
                }
                if (completers < 2) return false;
            }
        }
    return true;
}

// ----------------------------------------------------------------- cocycles

Cocycle2 s4plus_cocycle(unsigned seed) {
    const Gl2F3& g = gl2f3();
    const int n = 24;
    // section: for each S4 element pick one of its two lifts
    std::vector<int> sec(n, -1);
    for (int x = 0; x < g.G.n; ++x) {
        int s = g.proj[x];
        if (sec[s] < 0) sec[s] = x;
        else if (seed) {
            // deterministic scramble: flip the choice when a hash bit says so
            unsigned h = (unsigned(s) * 2654435761u) ^ (seed * 40503u);
            if (h & 1) sec[s] = std::min(sec[s], x);
            else sec[s] = std::max(sec[s], x);
        }
    }
    sec[0] = 0;  // normalized: identity lifts to identity
    Cocycle2 c;
    c.n = n;
    c.c.assign(size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int prod = g.G.mul[sec[a]][sec[b]];
            int target = sec[g.S4.mul[a][b]];
            if (prod == target) c.c[size_t(a) * n + b] = 0;
            else if (prod == g.G.mul[g.minus_identity][target]) c.c[size_t(a) * n + b] = 1;
            else throw std::runtime_error("s4plus_cocycle: section incoherent");
        }
    if (!c.is_cocycle(g.S4)) throw std::runtime_error("s4plus_cocycle: not a cocycle");
    return c;
}

Cocycle2 pullback(const FiniteGroup& G, const std::vector<int>& phi, const Cocycle2& c) {
    Cocycle2 r;
    r.n = G.n;
    r.c.assign(size_t(G.n) * G.n, 0);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) r.c[size_t(a) * G.n + b] = c(phi[a], phi[b]);
    return r;
}

Cocycle2 cocycle_add(const Cocycle2& a, const Cocycle2& b) {
    if (a.n != b.n) throw std::invalid_argument("cocycle_add: size mismatch");
    Cocycle2 r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] ^= b.c[i];
    return r;
}

namespace {

// incremental F2 row space: rows indexed by leading bit; rhs carried as the
// bit at position `cols`
struct F2Basis {
    int cols;
    int words;
    std::vector<std::vector<uint64_t>> by_pivot;  // per column, empty if none
    int rank = 0;
    bool consistent = true;

    explicit F2Basis(int c) : cols(c), words((c + 1 + 63) / 64), by_pivot(size_t(c)) {}

    std::vector<uint64_t> make_row(const std::vector<int>& ones, int rhs) const {
        std::vector<uint64_t> r(words, 0);
        for (int c : ones) r[size_t(c) / 64] ^= (uint64_t(1) << (c % 64));
        if (rhs) r[size_t(cols) / 64] ^= (uint64_t(1) << (cols % 64));
        return r;
    }

    void add(std::vector<uint64_t> row) {
        while (true) {
            int lead = -1;
            for (int w = 0; w < words && lead < 0; ++w) {
                if (!row[w]) continue;
                int b = __builtin_ctzll(row[w]);
                int pos = w * 64 + b;
                if (pos >= cols) {  // only the rhs bit remains
                    consistent = false;
                    return;
                }
                lead = pos;
            }
            if (lead < 0) return;  // reduced to zero
            if (by_pivot[lead].empty()) {
                by_pivot[lead] = std::move(row);
                ++rank;
                return;
            }
            for (int w = 0; w < words; ++w) row[w] ^= by_pivot[lead][w];
        }
    }
};

}  // namespace

bool is_coboundary(const FiniteGroup& G, const Cocycle2& c) {
    if (!c.is_cocycle(G)) throw std::invalid_argument("is_coboundary: not a cocycle");
    for (int g = 0; g < G.n; ++g)
        if (c(0, g) || c(g, 0)) throw std::invalid_argument("is_coboundary: cocycle not normalized");
    // c(g,h) = b(g) + b(h) + b(gh), unknowns b(1..n-1), b(0) = 0 by normalization
    F2Basis basis(G.n - 1);
    for (int g = 1; g < G.n; ++g)
        for (int h = 1; h < G.n; ++h) {
            std::vector<int> ones;
            auto add = [&](int x) {
                if (x != 0) ones.push_back(x - 1);
            };
            add(g);
            add(h);
            add(G.mul[g][h]);
            std::sort(ones.begin(), ones.end());
            std::vector<int> red;
            for (size_t i = 0; i < ones.size();) {
                size_t j = i;
                while (j < ones.size() && ones[j] == ones[i]) ++j;
                if ((j - i) % 2) red.push_back(ones[i]);
                i = j;
            }
            basis.add(basis.make_row(red, c(g, h)));
            if (!basis.consistent) return false;
        }
    return basis.consistent;
}

int h2_dimension(const FiniteGroup& G) {
    int n = G.n;
    if (n == 1) return 0;
    int m = (n - 1) * (n - 1);  // normalized cochains c(g,h), g,h != e
    auto cidx = [&](int g, int h) { return (g - 1) * (n - 1) + (h - 1); };
    auto dedup = [](std::vector<int>& ones) {
        std::sort(ones.begin(), ones.end());
        std::vector<int> red;
        for (size_t i = 0; i < ones.size();) {
            size_t j = i;
            while (j < ones.size() && ones[j] == ones[i]) ++j;
            if ((j - i) % 2) red.push_back(ones[i]);
            i = j;
        }
        ones = red;
    };
    // rank of d2 over the cocycle-identity rows
    F2Basis zb(m);
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h)
            for (int k = 1; k < n; ++k) {
                std::vector<int> ones;
                auto add = [&](int a, int b) {
                    if (a != 0 && b != 0) ones.push_back(cidx(a, b));
                };
                add(g, h);
                add(G.mul[g][h], k);
                add(h, k);
                add(g, G.mul[h][k]);
                dedup(ones);
                if (!ones.empty()) zb.add(zb.make_row(ones, 0));
            }
    int dimZ = m - zb.rank;
    // rank of d1 (coboundaries of maps b with b(e) = 0)
    F2Basis bb(m);
    for (int g = 1; g < n; ++g) {
        std::vector<int> ones;
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                int bits = (a == g) + (b == g) + (G.mul[a][b] == g);
                if (bits % 2) ones.push_back(cidx(a, b));
            }
        dedup(ones);
        bb.add(bb.make_row(ones, 0));
    }
    return dimZ - bb.rank;
}

// ---------------------------------------------------------------- Dixon

namespace {

uint64_t pw(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

struct DixonResult {
    // per class: exact trace of the faithful 2-dim irrep as (x, y): x + y sqrt(-2)
    std::vector<std::pair<Rat, Rat>> trace;
};

DixonResult run_dixon() {
    const Gl2F3& gg = gl2f3();
    const FiniteGroup& G = gg.G;
    auto classes = G.conjugacy_classes();
    int nc = int(classes.size());
    // class index per element, class of inverses
    std::vector<int> cls(G.n);
    for (int i = 0; i < nc; ++i)
        for (int x : classes[i]) cls[x] = i;
    // exponent of the group
    int expo = 1;
    for (int gch = 0; gch < G.n; ++gch) expo = std::lcm(expo, G.order_of(gch));
    // prime p = 1 mod expo
    uint64_t p = expo + 1;
    while (true) {
        bool prime = p > 1;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (prime) break;
        p += expo;
    }
    // primitive root mod p
    uint64_t w = 2;
    for (;; ++w) {
        bool ok = true;
        for (uint64_t d = 2; d * d <= p - 1; ++d) {
            if ((p - 1) % d) continue;
            if (pw(w, d, p) == 1 || pw(w, (p - 1) / d, p) == 1) { ok = false; break; }
        }
        if (ok) break;
    }
    // class matrices: (A_i)[j][k] = #{(x,y) in C_i x C_j : xy = z_k}
    std::vector<std::vector<std::vector<uint64_t>>> A(
        nc, std::vector<std::vector<uint64_t>>(nc, std::vector<uint64_t>(nc, 0)));
    std::vector<int> rep(nc);
    for (int k = 0; k < nc; ++k) rep[k] = classes[k][0];
    for (int i = 0; i < nc; ++i)
        for (int x : classes[i])
            for (int j = 0; j < nc; ++j)
                for (int y : classes[j]) {
                    int z = G.mul[x][y];
                    // count only products landing on the representative
                    for (int k = 0; k < nc; ++k)
                        if (z == rep[k]) A[i][j][k] += 1;
                }
    // common eigenvectors over F_p: iterate splitting of the full space
    auto matvec = [&](const std::vector<std::vector<uint64_t>>& M, const std::vector<uint64_t>& v) {
        std::vector<uint64_t> r(nc, 0);
        for (int j = 0; j < nc; ++j) {
            uint64_t s = 0;
            for (int k = 0; k < nc; ++k) s = (s + M[j][k] * v[k]) % p;
            r[j] = s;
        }
        return r;
    };
    (void)matvec;
    // basis vectors as columns; work with subspaces spanned by explicit bases
    struct Space { std::vector<std::vector<uint64_t>> basis; };
    std::vector<Space> spaces;
    {
        Space all;
        for (int i = 0; i < nc; ++i) {
            std::vector<uint64_t> e(nc, 0);
            e[i] = 1;
            all.basis.push_back(e);
        }
        spaces.push_back(all);
    }
    auto mul_on_space = [&](const std::vector<std::vector<uint64_t>>& M, const Space& S) {
        // restrict M to span(S): returns matrix in the S-basis by solving
        int d = int(S.basis.size());
        // build matrix with columns = basis, solve M*b_i = sum c_ji b_j
        std::vector<std::vector<uint64_t>> out(d, std::vector<uint64_t>(d, 0));
        // gaussian solve for each image vector
        // assemble augmented [B | M b_i]
        for (int i = 0; i < d; ++i) {
            std::vector<uint64_t> img(nc, 0);
            for (int r = 0; r < nc; ++r) {
                uint64_t s = 0;
                for (int k = 0; k < nc; ++k) s = (s + M[r][k] * S.basis[i][k]) % p;
                img[r] = s;
            }
            // solve B c = img
            std::vector<std::vector<uint64_t>> aug(nc, std::vector<uint64_t>(d + 1, 0));
            for (int r = 0; r < nc; ++r) {
                for (int j = 0; j < d; ++j) aug[r][j] = S.basis[j][r];
                aug[r][d] = img[r];
            }
            int rr = 0;
            std::vector<int> pivot_col;
            for (int c = 0; c < d && rr < nc; ++c) {
                int pv = -1;
                for (int r2 = rr; r2 < nc; ++r2)
                    if (aug[r2][c]) { pv = r2; break; }
                if (pv < 0) continue;
                std::swap(aug[rr], aug[pv]);
                uint64_t inv = pw(aug[rr][c], p - 2, p);
                for (int j = 0; j <= d; ++j) aug[rr][j] = aug[rr][j] * inv % p;
                for (int r2 = 0; r2 < nc; ++r2) {
                    if (r2 == rr || !aug[r2][c]) continue;
                    uint64_t f = aug[r2][c];
                    for (int j = 0; j <= d; ++j)
                        aug[r2][j] = (aug[r2][j] + (p - f) * aug[rr][j]) % p;
                }
                pivot_col.push_back(c);
                ++rr;
            }
            for (int r2 = 0; r2 < rr; ++r2) out[pivot_col[r2]][i] = aug[r2][d];
        }
        return out;
    };
    auto split = [&](const Space& S, const std::vector<std::vector<uint64_t>>& M) {
        // eigen-split of M restricted to S
        int d = int(S.basis.size());
        auto R = mul_on_space(M, S);
        std::vector<Space> parts;
        for (uint64_t lam = 0; lam < p && int(parts.size()) < d; ++lam) {
            // kernel of R - lam I
            std::vector<std::vector<uint64_t>> K(d, std::vector<uint64_t>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) K[i][j] = (R[i][j] + (i == j ? p - lam % p : 0)) % p;
            // nullspace
            int rr = 0;
            std::vector<int> pivots(d, -1);
            for (int c = 0; c < d && rr < d; ++c) {
                int pv = -1;
                for (int r2 = rr; r2 < d; ++r2)
                    if (K[r2][c]) { pv = r2; break; }
                if (pv < 0) continue;
                std::swap(K[rr], K[pv]);
                uint64_t inv = pw(K[rr][c], p - 2, p);
                for (int j = 0; j < d; ++j) K[rr][j] = K[rr][j] * inv % p;
                for (int r2 = 0; r2 < d; ++r2) {
                    if (r2 == rr || !K[r2][c]) continue;
                    uint64_t f = K[r2][c];
                    for (int j = 0; j < d; ++j) K[r2][j] = (K[r2][j] + (p - f) * K[rr][j]) % p;
                }
                pivots[c] = rr;
                ++rr;
            }
            if (rr == d) continue;
            Space part;
            for (int c = 0; c < d; ++c) {
                if (pivots[c] >= 0) continue;
                std::vector<uint64_t> coef(d, 0);
                coef[c] = 1;
                for (int c2 = 0; c2 < d; ++c2)
                    if (pivots[c2] >= 0) coef[c2] = (p - K[pivots[c2]][c]) % p;
                std::vector<uint64_t> vec(nc, 0);
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < nc; ++k) vec[k] = (vec[k] + coef[j] * S.basis[j][k]) % p;
                part.basis.push_back(vec);
            }
            if (!part.basis.empty()) parts.push_back(part);
        }
        return parts;
    };
    bool done = false;
    for (int mi = 0; mi < nc && !done; ++mi) {
        std::vector<Space> next;
        for (auto& S : spaces) {
            if (S.basis.size() == 1) { next.push_back(S); continue; }
            auto parts = split(S, A[mi]);
            for (auto& pr : parts) next.push_back(pr);
        }
        spaces = next;
        done = true;
        for (auto& S : spaces)
            if (S.basis.size() > 1) done = false;
    }
    if (!done) throw std::runtime_error("dixon: failed to split into eigenlines");
    if (int(spaces.size()) != nc) throw std::runtime_error("dixon: wrong number of irreducibles");

    // for each eigenline: omega_i values; identity class index
    int idc = cls[0];
    std::vector<int> invcls(nc);
    for (int i = 0; i < nc; ++i) invcls[i] = cls[G.inv[rep[i]]];
    struct Char { uint64_t deg; std::vector<uint64_t> val; };
    std::vector<Char> chars;
    for (auto& S : spaces) {
        std::vector<uint64_t> v = S.basis[0];
        uint64_t inv0 = pw(v[idc], p - 2, p);
        for (auto& x : v) x = x * inv0 % p;  // omega at identity = 1
        // degree: d^2 = |G| / sum_i omega_i omega_{i'} / |C_i|
        uint64_t s = 0;
        for (int i = 0; i < nc; ++i) {
            uint64_t term = v[i] * v[invcls[i]] % p;
            term = term * pw(classes[i].size() % p, p - 2, p) % p;
            s = (s + term) % p;
        }
        uint64_t d2 = (uint64_t(G.n) % p) * pw(s, p - 2, p) % p;
        uint64_t d = 0;
        for (uint64_t t = 1; t <= 16; ++t)
            if (t * t % p == d2) { d = t; break; }
        if (!d) throw std::runtime_error("dixon: degree not found");
        Char ch;
        ch.deg = d;
        ch.val.resize(nc);
        for (int i = 0; i < nc; ++i)
            ch.val[i] = v[i] * d % p * pw(classes[i].size() % p, p - 2, p) % p;
        chars.push_back(ch);
    }
    // sanity: sum of squares of degrees
    {
        uint64_t s = 0;
        for (auto& ch : chars) s += ch.deg * ch.deg;
        if (s != uint64_t(G.n)) throw std::runtime_error("dixon: degree check failed");
    }
    // pick a faithful 2-dim: deg 2 and chi(-I) = -2 mod p
    int pick = -1;
    for (size_t i = 0; i < chars.size(); ++i) {
        if (chars[i].deg != 2) continue;
        if (chars[i].val[cls[gg.minus_identity]] == p - 2) { pick = int(i); break; }
    }
    if (pick < 0) throw std::runtime_error("dixon: no faithful 2-dim character");
    const Char& ch = chars[pick];
    // exact lift per class: chi(g) = sum_k m_k zeta_ord^k with
    // m_k = (1/ord) sum_j chi(g^j) zeta^{-jk}, exact small integers
    DixonResult out;
    out.trace.resize(nc);
    for (int i = 0; i < nc; ++i) {
        int g = rep[i];
        int ord = G.order_of(g);
        uint64_t zeta = pw(w, (p - 1) / uint64_t(ord), p);
        std::vector<uint64_t> m(ord, 0);
        for (int k = 0; k < ord; ++k) {
            uint64_t s = 0;
            int e = 0;  // g^j
            int gj = 0;
            for (int j = 0; j < ord; ++j) {
                uint64_t term = ch.val[cls[gj]] * pw(zeta, uint64_t(((ord - k) * j) % ord), p) % p;
                s = (s + term) % p;
                gj = G.mul[gj][g];
                ++e;
            }
            m[k] = s * pw(uint64_t(ord) % p, p - 2, p) % p;
            if (m[k] > 16) throw std::runtime_error("dixon: multiplicity lift failed");
        }
        // evaluate sum m_k zeta_ord^k numerically, then match exact candidates
        double re = 0, im = 0;
        for (int k = 0; k < ord; ++k) {
            re += double(m[k]) * std::cos(2 * M_PI * k / ord);
            im += double(m[k]) * std::sin(2 * M_PI * k / ord);
        }
        const double s2 = std::sqrt(2.0);
        struct Cand { double re, im; Rat x, y; };
        std::vector<Cand> cands = {
            {2, 0, Rat(2), Rat(0)},   {-2, 0, Rat(-2), Rat(0)}, {1, 0, Rat(1), Rat(0)},
            {-1, 0, Rat(-1), Rat(0)}, {0, 0, Rat(0), Rat(0)},   {0, s2, Rat(0), Rat(1)},
            {0, -s2, Rat(0), Rat(-1)},
        };
        bool hit = false;
        for (auto& cd : cands)
            if (std::abs(re - cd.re) < 1e-6 && std::abs(im - cd.im) < 1e-6) {
                out.trace[i] = {cd.x, cd.y};
                hit = true;
                break;
            }
        if (!hit) throw std::runtime_error("dixon: trace value outside expected set");
    }
    // exact second-orthogonality check over the lifted values: sum |C_i| |chi|^2 = |G|
    {
        Rat s(0);
        for (int i = 0; i < nc; ++i) {
            auto [x, y] = out.trace[i];
            s += Rat(long(classes[i].size())) * (x * x + 2 * y * y);
        }
        if (s != Rat(G.n)) throw std::runtime_error("dixon: lifted values fail orthogonality");
    }
    return out;
}

}  // namespace

std::optional<ClassData> FrobeniusTable::by_pattern24(const std::vector<int>& p24) const {
    for (const auto& c : classes)
        if (c.pattern24 == p24) return c;
    return std::nullopt;
}

std::vector<ClassData> FrobeniusTable::by_pattern4(const std::vector<int>& p4) const {
    std::vector<ClassData> out;
    for (const auto& c : classes)
        if (c.pattern4 == p4) out.push_back(c);
    return out;
}

std::vector<ClassData> FrobeniusTable::by_pattern12(const std::vector<int>& p12) const {
    std::vector<ClassData> out;
    for (const auto& c : classes)
        if (c.pattern12 == p12) out.push_back(c);
    return out;
}

std::string FrobeniusTable::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    std::map<int, char> letter;
    for (const auto& c : classes) {
        nlohmann::json e;
        char suffix = 'a' + letter[c.order]++;
        e["label"] = std::to_string(c.order) + suffix;
        e["order"] = c.order;
        e["size"] = c.size;
        e["quartic_pattern"] = c.pattern4;
        e["degree24_pattern"] = c.pattern24;
        e["trace"] = c.ambiguous ? "+-sqrt(-2)" : c.trace.get_str();
        j.push_back(e);
    }
    return j.dump(2);
}

const FrobeniusTable& frobenius_table() {
    static FrobeniusTable table = [] {
        const Gl2F3& gg = gl2f3();
        const FiniteGroup& G = gg.G;
        auto classes = G.conjugacy_classes();
        DixonResult dx = run_dixon();
        // coset space: 24 cosets of <j> for a noncentral involution j
        int invol = -1;
        for (int x = 1; x < G.n; ++x)
            if (G.order_of(x) == 2 && x != gg.minus_identity) { invol = x; break; }
        // j must project to a transposition
        {
            auto pm = gg.s4_perms[gg.proj[invol]];
            auto ct = perm_cycle_type(std::vector<int>(pm.begin(), pm.end()));
            if (ct != std::vector<int>{1, 1, 2})
                throw std::runtime_error("frobenius_table: involution not over a transposition");
        }
        // cosets {x, jx}
        std::vector<int> coset(G.n, -1);
        int nco = 0;
        for (int x = 0; x < G.n; ++x) {
            if (coset[x] >= 0) continue;
            coset[x] = nco;
            coset[G.mul[invol][x]] = nco;
            ++nco;
        }
        // 12 cosets of a transposition subgroup of S4 (the coset space of the
        // degree-12 field of gamma)
        const FiniteGroup& S4 = gg.S4;
        int transp = -1;
        for (int s = 1; s < 24; ++s) {
            auto ct = perm_cycle_type(std::vector<int>(gg.s4_perms[size_t(s)].begin(),
                                                       gg.s4_perms[size_t(s)].end()));
            if (ct == std::vector<int>{1, 1, 2}) { transp = s; break; }
        }
        std::vector<int> coset12(24, -1);
        int nco12 = 0;
        for (int x = 0; x < 24; ++x) {
            if (coset12[x] >= 0) continue;
            coset12[x] = nco12;
            coset12[S4.mul[x][transp]] = nco12;  // right coset xH
            ++nco12;
        }
        FrobeniusTable t;
        for (size_t i = 0; i < classes.size(); ++i) {
            int g = classes[i][0];
            ClassData cd;
            cd.order = G.order_of(g);
            cd.size = int(classes[i].size());
            auto pm = gg.s4_perms[gg.proj[g]];
            cd.pattern4 = perm_cycle_type(std::vector<int>(pm.begin(), pm.end()));
            std::vector<int> cperm(nco);
            for (int x = 0; x < G.n; ++x) cperm[coset[x]] = coset[G.mul[x][g]];
            cd.pattern24 = perm_cycle_type(cperm);
            std::vector<int> cperm12(nco12);
            int gs4 = gg.proj[g];
            for (int x = 0; x < 24; ++x) cperm12[coset12[x]] = coset12[S4.mul[gs4][x]];
            cd.pattern12 = perm_cycle_type(cperm12);
            auto [x, y] = dx.trace[i];
            cd.ambiguous = (y != 0);
            cd.trace = x;
            if (cd.ambiguous && x != 0)
                throw std::runtime_error("frobenius_table: unexpected mixed trace");
            t.classes.push_back(cd);
        }
        std::sort(t.classes.begin(), t.classes.end(), [](const ClassData& a, const ClassData& b) {
            if (a.order != b.order) return a.order < b.order;
            if (a.size != b.size) return a.size < b.size;
            return a.pattern24 < b.pattern24;
        });
        return t;
    }();
    return table;
}

}  // namespace octmf
