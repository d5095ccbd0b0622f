// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "octmf/octahedral.hpp"
#include "octmf/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace octmf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start;
    bool ok = true;
    std::string note;

    explicit Criterion(std::string n) : name(std::move(n)), start(Clock::now()) {}
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
    ~Criterion() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%-4s %-58s [%6.1fs]%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                    note.empty() ? "" : "  -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

const WeierstrassCurve& curve(const std::string& l) { return curve_registry().at(l).curve; }

}  // namespace

static void criterion1() {
    Criterion c("1. halving quartics match the printed polynomials");
    c.check(halving_quartic(curve("43A"), CurvePoint::affine(Rat(0), Rat(0))) ==
                RationalPoly({-1, -2, 0, 0, 1}),
            "43A");
    c.check(halving_quartic(curve("563A"), CurvePoint::affine(Rat(2), Rat(-1))) ==
                RationalPoly({-1, -14, 19, -8, 1}),
            "563A");
    RationalPoly raw = halving_quartic(curve("643A"), CurvePoint::affine(Rat(-1), Rat(3)));
    RationalPoly printed({1, -2, 0, -1, 1});
    bool literal = (raw == printed);
    bool same_field = same_field_certificate(raw, printed);
    c.check(literal, std::string("643A literal equality fails (duplication formula gives "
                                 "x^4+4x^3+9x^2-40x+25; printed polynomial is a reduced generator"
                                 " of the same field: certificate ") +
                         (same_field ? "PASSES)" : "FAILS)"));
}

static void criterion2() {
    Criterion c("2. group law on 643A: [1,0] + [2,1] = [-1,3]");
    c.check(add_points(curve("643A"), CurvePoint::affine(Rat(1), Rat(0)),
                       CurvePoint::affine(Rat(2), Rat(1))) ==
                CurvePoint::affine(Rat(-1), Rat(3)),
            "sum mismatch");
}

static void criterion3() {
    Criterion c("3. 643A obstruction pattern, Br2 sum, Witt-sum identity");
    RationalPoly q1 = halving_quartic(curve("643A"), CurvePoint::affine(Rat(1), Rat(0)));
    RationalPoly q2 = halving_quartic(curve("643A"), CurvePoint::affine(Rat(2), Rat(1)));
    RationalPoly q3 = halving_quartic(curve("643A"), CurvePoint::affine(Rat(-1), Rat(3)));
    Br2Element e1 = obstruction_class(q1), e2 = obstruction_class(q2), e3 = obstruction_class(q3);
    c.check(!e1.trivial(), "[1,0] should be nontrivial");
    c.check(!e2.trivial(), "[2,1] should be nontrivial");
    c.check(e3.trivial(), "[-1,3] should be trivial");
    c.check(br2_add(br2_add(e1, e2), e3).trivial(), "Br2 sum nonzero");
    Int DL = squarefree_part(curve("643A").discriminant());
    c.check(witt_sum_check(q1, q2, q3, DL), "Witt sum identity fails");
}

static void criterion4() {
    Criterion c("4. group-cohomology verifications");
    for (auto& [name, ok] : verify_group_report()) c.check(ok, name);
    // five random sections for the pullback-sum theorem
    const SemidirectG& sg = semidirect_group();
    for (unsigned seed : {0u, 3u, 9u, 21u, 33u}) {
        Cocycle2 cs = s4plus_cocycle(seed);
        Cocycle2 psi = cocycle_add(
            cocycle_add(pullback(sg.G, sg.pi1, cs), pullback(sg.G, sg.pi2, cs)),
            pullback(sg.G, sg.pi3, cs));
        c.check(is_coboundary(sg.G, psi), "pullback sum (seed " + std::to_string(seed) + ")");
        c.check(!is_coboundary(gl2f3().S4, cs), "s4plus coboundary (seed " + std::to_string(seed) + ")");
    }
}

static void criterion5() {
    Criterion c("5. ternary class enumeration matches the four tables");
    struct LevelCheck {
        long level;
        size_t count;
        bool kohnen;
    };
    for (const LevelCheck& s : {LevelCheck{172, 14, false}, LevelCheck{344, 18, false},
                                LevelCheck{2252, 33, true}, LevelCheck{2572, 30, true}}) {
        auto classes = enumerate_classes(Int(s.level), true, s.kohnen);
        auto table = load_table(s.level);
        c.check(classes.size() == s.count,
                "level " + std::to_string(s.level) + ": " + std::to_string(classes.size()) +
                    " classes (want " + std::to_string(s.count) + ")");
        c.check(table.size() == s.count, "table row count");
        // every row reproduces its caption level and a square discriminant
        for (const TernaryForm& t : table) {
            auto inv = ternary_invariants(t);
            Int r;
            mpz_sqrt(r.get_mpz_t(), inv.disc.get_mpz_t());
            c.check(inv.level == s.level, "row level");
            c.check(r * r == inv.disc, "row disc square");
        }
        // set equality up to isometry
        std::vector<bool> used(table.size(), false);
        bool all = true;
        for (const auto& cl : classes) {
            bool hit = false;
            for (size_t i = 0; i < table.size(); ++i) {
                if (used[i]) continue;
                if (ternary_invariants(cl).disc == ternary_invariants(table[i]).disc &&
                    is_equivalent(cl, table[i])) {
                    used[i] = true;
                    hit = true;
                    break;
                }
            }
            all = all && hit;
        }
        for (bool u : used) all = all && u;
        c.check(all, "level " + std::to_string(s.level) + " set equality");
    }
}

static void criterion6() {
    Criterion c("6. 32 theta series have rank 21; the listed 21 independent");
    std::vector<QExpansion> thetas;
    for (long lvl : {172L, 344L})
        for (const TernaryForm& t : load_table(lvl)) thetas.push_back(ternary_theta(t, 260));
    auto [rank, piv] = rank_and_basis(thetas, 250);
    c.check(rank == 21, "rank " + std::to_string(rank));
    // the listed basis: level-172 rows 1..11 and level-344 rows 1..9 and 11
    std::vector<int> listed{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 16, 17, 18, 19, 20, 21, 22, 24};
    std::vector<QExpansion> sub;
    for (int i : listed) sub.push_back(thetas[size_t(i)]);
    auto [r2, piv2] = rank_and_basis(sub, 250);
    c.check(r2 == 21, "listed 21 not independent");
}

static void criterion7() {
    Criterion c("7. weight-3/2 space dimensions 25 / 143 / 163");
    c.check(dim_weight_3_2(344) == 25, "level 344");
    c.check(dim_weight_3_2(2252) == 143, "level 2252");
    c.check(dim_weight_3_2(2572) == 163, "level 2572");
}

static void criterion8() {
    Criterion c("8. degree-24 reconstruction from gamma (c = 1)");
    for (const std::string name : {"563", "643"}) {
        const CaseConfig& cfg = case_config(name);
        GammaExpression g = GammaExpression::parse([&] {
            std::ifstream in(data_dir() + "/" + cfg.gamma_file);
            std::ostringstream os;
            os << in.rdbuf();
            return os.str();
        }());
        auto conj = gamma_conjugates(cfg.kpoly, g, 200);
        RationalPoly computed = minpoly_sqrt_gamma(conj, Rat(1), 200);
        RationalPoly printed = load_poly_file("golden/poly24_" + name + ".txt");
        bool literal = (computed == printed);
        bool field = same_field_certificate(computed, printed, 200);
        c.check(literal, name + ": literal equality fails (prod(t^2 - g_i) is even in t, the "
                                "printed polynomial has odd terms: a reduced generator; "
                                "same-field certificate " +
                             std::string(field ? "PASSES" : "FAILS"));
        // discriminant properties hold for both the printed and computed polynomials
        for (const RationalPoly* poly : {&computed, &printed}) {
            Rat disc = poly_discriminant(*poly);
            Int p = (name == "563") ? 563 : 643;
            c.check(squarefree_part(disc) == -p, name + ": disc squarefree part");
            Int num = Int(disc.get_num());
            unsigned long v = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
            c.check(v >= 11 && v % 2 == 1, name + ": p-adic valuation " + std::to_string(v));
        }
    }
}

static void criterion9() {
    Criterion c("9. printed 50-coefficient eigenforms reproduced end to end");
    RunOptions opt;
    opt.jobs = 4;
    for (const std::string name : {"43", "563", "643"}) {
        CaseRun run = run_case(name, opt);
        for (size_t i = 0; i < run.golden_match.size(); ++i)
            c.check(run.golden_match[i], run.cfg.golden_labels[i]);
        for (const auto& eig : run.eigenforms) {
            c.check(eig.expansion.known[0] && eig.expansion.c[0].is_zero(),
                    "constant term nonzero");
            c.check(eig.expansion.is_rational(), "expansion not rational");
        }
        if (name == "43") {
            // the 23-element span (21 thetas + the two weight-1 products) is
            // closed under T_9
            try {
                auto M = hecke_matrix(run.basis, 3, 50);
                c.check(M.size() == run.basis.size(), "hecke matrix size");
            } catch (const std::exception& e) {
                c.check(false, std::string("level-344 span closure: ") + e.what());
            }
        }
        // T_{p^2} F = a_p(E) F for every good p <= 20 on the available window
        for (size_t i = 0; i < run.eigenforms.size(); ++i) {
            const WeierstrassCurve& E = curve(run.cfg.golden_curves[i]);
            const QExpansion& F = run.eigenforms[i].expansion;
            for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
                if (F.level % p == 0) continue;
                long lam = ap(E, Int(p));
                int Bm = int(F.B / (p * p));
                int checked = 0;
                for (int m = 1; m <= Bm; ++m) {
                    if (!F.known[size_t(p * p * m)] || !F.known[size_t(m)]) continue;
                    QNum b = F.c[size_t(p * p * m)];
                    int chi = kronecker_symbol(Int(-m), Int(p));
                    if (chi == 1) b = b + F.c[size_t(m)];
                    else if (chi == -1) b = b - F.c[size_t(m)];
                    if (m % (p * p) == 0) {
                        if (!F.known[size_t(m / (p * p))]) continue;
                        b = b + QNum(Rat(p), Rat(0)) * F.c[size_t(m / (p * p))];
                    }
                    ++checked;
                    if (!(b == QNum(Rat(lam), Rat(0)) * F.c[size_t(m)])) {
                        c.check(false, run.cfg.golden_labels[i] + " Hecke identity at p=" +
                                           std::to_string(p) + " m=" + std::to_string(m));
                        break;
                    }
                }
                c.check(checked > 0, "no checkable coefficients at p=" + std::to_string(p));
            }
        }
    }
}

static void criterion10() {
    Criterion c("10. property suites");
    // Hilbert reciprocity over 1000 random pairs
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 1000) {
        long an = long(rng() % 10000) + 1, ad = long(rng() % 10000) + 1;
        long bn = long(rng() % 10000) + 1, bd = long(rng() % 10000) + 1;
        if (rng() & 1) an = -an;
        if (rng() & 1) bn = -bn;
        Rat a = make_rat(an, ad), b = make_rat(bn, bd);
        if (a == 0 || b == 0) continue;
        std::set<Int> places{2};
        for (auto& [p, e] : factor_integer(Int(a.get_num()) * Int(a.get_den()))) places.insert(p);
        for (auto& [p, e] : factor_integer(Int(b.get_num()) * Int(b.get_den()))) places.insert(p);
        int prod = hilbert_symbol(a, b, Place::inf());
        for (const Int& p : places) prod *= hilbert_symbol(a, b, Place{false, p});
        if (prod != 1) {
            c.check(false, "Hilbert reciprocity");
            break;
        }
        ++done;
    }
    // Hasse invariance: 100 forms x 20 transforms
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            std::vector<Rat> diag;
            for (int j = 0; j < 3; ++j) {
                long v = long(rng() % 19) - 9;
                if (v == 0) v = 3;
                diag.emplace_back(v);
            }
            QuadraticForm q = QuadraticForm::diagonal(diag);
            int e2 = hasse_invariant(q, Place::prime(2));
            int e3 = hasse_invariant(q, Place::prime(3));
            for (int t = 0; t < 20 && ok; ++t) {
                std::vector<std::vector<Rat>> s(3, std::vector<Rat>(3));
                do {
                    for (auto& row : s)
                        for (auto& x : row) x = Rat(long(rng() % 5) - 2);
                } while (QuadraticForm{s}.det() == 0);
                QuadraticForm q2;
                q2.gram.assign(3, std::vector<Rat>(3, Rat(0)));
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2) {
                        Rat acc(0);
                        for (int k = 0; k < 3; ++k)
                            for (int l = 0; l < 3; ++l) acc += s[k][a2] * q.gram[k][l] * s[l][b2];
                        q2.gram[a2][b2] = acc;
                    }
                ok = hasse_invariant(q2, Place::prime(2)) == e2 &&
                     hasse_invariant(q2, Place::prime(3)) == e3;
            }
        }
        c.check(ok, "Hasse basis-change invariance");
    }
    // discriminant identity on 50 random (curve, point) pairs
    {
        int pairs = 0;
        bool ok = true;
        while (pairs < 50 && ok) {
            WeierstrassCurve e{Rat(long(rng() % 2)), Rat(long(rng() % 5) - 2),
                               Rat(long(rng() % 2)), Rat(long(rng() % 11) - 5),
                               Rat(long(rng() % 11) - 5)};
            if (e.discriminant() >= 0) continue;
            for (long x = -8; x <= 8 && pairs < 50; ++x)
                for (long y = -30; y <= 30 && pairs < 50; ++y) {
                    CurvePoint p = CurvePoint::affine(Rat(x), Rat(y));
                    if (!e.on_curve(p)) continue;
                    if (add_points(e, p, p).infinity) continue;
                    RationalPoly q;
                    try {
                        q = halving_quartic(e, p);
                    } catch (const std::exception&) {
                        continue;
                    }
                    ok = ok && squarefree_part(poly_discriminant(q)) ==
                                   squarefree_part(e.discriminant());
                    ++pairs;
                }
        }
        c.check(ok, "halving discriminant identity");
        c.check(pairs == 50, "pair count " + std::to_string(pairs));
    }
    // halving-root residuals < 1e-40 (43A generator at 200 digits)
    {
        const WeierstrassCurve& e = curve("43A");
        RationalPoly q = halving_quartic(e, CurvePoint::affine(Rat(0), Rat(0)));
        auto roots = complex_roots(q, 200);
        mpfr_prec_t prec = digits_to_prec(200);
        bool ok = true;
        for (const MpComplex& r : roots) {
            auto ev = [&](const RationalPoly& f) {
                MpComplex acc(prec);
                for (size_t i = f.c.size(); i-- > 0;) {
                    MpComplex ci(prec);
                    ci.re = MpFloat::from_rat(f.c[i], prec);
                    acc = acc * r + ci;
                }
                return acc;
            };
            RationalPoly num({-e.b8(), -2 * e.b6(), -e.b4(), Rat(0), Rat(1)});
            RationalPoly den({e.b6(), 2 * e.b4(), e.b2(), Rat(4)});
            ok = ok && abs(ev(num) / ev(den)).to_double() < 1e-40;
        }
        c.check(ok, "halving-root residuals");
    }
    // Hecke commutativity on the level-344 theta span
    {
        std::vector<QExpansion> thetas;
        for (long lvl : {172L, 344L})
            for (const TernaryForm& t : load_table(lvl)) thetas.push_back(ternary_theta(t, 2452));
        auto [rank, piv] = rank_and_basis(thetas, 240);
        std::vector<QExpansion> basis;
        for (int i : piv) basis.push_back(thetas[size_t(i)]);
        auto M3 = hecke_matrix(basis, 3, 90);
        auto M5 = hecke_matrix(basis, 5, 90);
        bool comm = true;
        int n = int(basis.size());
        for (int i = 0; i < n && comm; ++i)
            for (int j = 0; j < n && comm; ++j) {
                QNum a, b;
                for (int k = 0; k < n; ++k) {
                    a = a + M3[i][k] * M5[k][j];
                    b = b + M5[i][k] * M3[k][j];
                }
                comm = (a == b);
            }
        c.check(comm, "T9 T25 commutator");
    }
    // obstruction supports always even
    {
        bool ok = true;
        int done2 = 0;
        while (done2 < 60) {
            std::vector<Rat> cs;
            for (int j = 0; j < 4; ++j) cs.emplace_back(long(rng() % 9) - 4);
            cs.emplace_back(1);
            RationalPoly f(cs);
            Rat d = poly_discriminant(f);
            if (d >= 0) continue;
            ok = ok && obstruction_class(f).support.size() % 2 == 0;
            ++done2;
        }
        c.check(ok, "even obstruction supports");
    }
}

int main() {
    std::printf("acceptance criteria\n-------------------\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("-------------------\n%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
