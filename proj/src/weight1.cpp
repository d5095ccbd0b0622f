#include "octmf/weight1.hpp"

#include "octmf/arith.hpp"
#include "octmf/octahedral.hpp"

#include <algorithm>
#include <future>

namespace octmf {

SignMonomial monomial_mul(const SignMonomial& a, const SignMonomial& b) {
    SignMonomial out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b) {
    if (!a.known || !b.known) return SymCoeff{false, {}};
    SymCoeff out = a;
    for (auto& [m, v] : b.t) {
        auto it = out.t.find(m);
        if (it == out.t.end()) out.t[m] = v;
        else {
            it->second = it->second + v;
            if (it->second.is_zero()) out.t.erase(it);
        }
    }
    return out;
}

SymCoeff sym_mul(const SymCoeff& a, const SymCoeff& b) {
    if (!a.known || !b.known) return SymCoeff{false, {}};
    SymCoeff out;
    for (auto& [ma, va] : a.t)
        for (auto& [mb, vb] : b.t) {
            SignMonomial m = monomial_mul(ma, mb);
            QNum v = va * vb;
            auto it = out.t.find(m);
            if (it == out.t.end()) out.t[m] = v;
            else {
                it->second = it->second + v;
                if (it->second.is_zero()) out.t.erase(it);
            }
        }
    return out;
}

SymCoeff sym_scale(const Rat& s, const SymCoeff& a) {
    if (!a.known) return a;
    if (s == 0) return SymCoeff{};
    SymCoeff out;
    for (auto& [m, v] : a.t) out.t[m] = QNum(s * v.x, s * v.y);
    return out;
}

namespace {

// S4-class data leaves the central sign open: {g, -g} collapse
PrimeTrace trace_from_s4_candidates(const std::vector<ClassData>& cands, const Int& p) {
    if (cands.empty())
        throw std::runtime_error("frobenius_trace_at: unknown pattern at p = " + p.get_str());
    bool all_same = true;
    for (auto& c : cands)
        if (c.ambiguous != cands[0].ambiguous || c.trace != cands[0].trace) all_same = false;
    if (all_same) {
        if (cands[0].ambiguous) return {PrimeTrace::pm_sqrt_m2, Rat(0)};
        return {PrimeTrace::rational, cands[0].trace};
    }
    // central ambiguity: traces come in a ± pair
    Rat mx(0);
    for (auto& c : cands) { Rat a = abs(c.trace); if (a > mx) mx = a; }
    for (auto& c : cands)
        if (abs(c.trace) != mx)
            throw std::runtime_error("frobenius_trace_at: unexpected collision at p = " + p.get_str());
    if (mx == 1) return {PrimeTrace::pm_one, Rat(0)};
    if (mx == 2) return {PrimeTrace::pm_two, Rat(0)};
    throw std::runtime_error("frobenius_trace_at: unexpected trace pair at p = " + p.get_str());
}

}  // namespace

PrimeTrace frobenius_trace_at(const RationalPoly& quartic, const RationalPoly& poly24,
                              const RationalPoly& poly12, const Int& D, const Int& p) {
    (void)D;
    const FrobeniusTable& tab = frobenius_table();
    FactorizationPattern p24 = factorization_pattern_mod_p(poly24, p);
    if (p24.squarefree) {
        auto cd = tab.by_pattern24(p24.degrees);
        if (!cd) throw std::runtime_error("frobenius_trace_at: unknown degree-24 pattern at p = " + p.get_str());
        if (cd->ambiguous) return {PrimeTrace::pm_sqrt_m2, Rat(0)};
        return {PrimeTrace::rational, cd->trace};
    }
    FactorizationPattern p4 = factorization_pattern_mod_p(quartic, p);
    if (p4.squarefree) return trace_from_s4_candidates(tab.by_pattern4(p4.degrees), p);
    if (!poly12.is_zero()) {
        FactorizationPattern p12 = factorization_pattern_mod_p(poly12, p);
        if (p12.squarefree) return trace_from_s4_candidates(tab.by_pattern12(p12.degrees), p);
    }
    return {PrimeTrace::unknown, Rat(0)};
}

Rat ramified_ap(const RationalPoly& poly24, const Int& p) {
    auto shape = factor_shape_mod_p(poly24, p);
    std::vector<int> unram;
    for (auto& [d, m] : shape)
        if (m == 1) unram.push_back(d);
    if (unram.empty())
        throw std::runtime_error("ramified_ap: no unramified part at p = " + p.get_str());
    for (int d : unram)
        if (d != unram[0])
            throw std::runtime_error("ramified_ap: mixed inertia degrees at p = " + p.get_str());
    if (unram[0] == 1) return Rat(1);
    if (unram[0] == 2) return Rat(-1);
    throw std::runtime_error("ramified_ap: inertia degree out of range at p = " + p.get_str());
}

Weight1Form weight1_coefficients(const RationalPoly& quartic, const RationalPoly& poly24,
                                 const RationalPoly& poly12, const Int& disc_char, long level,
                                 int B, const std::map<long, Rat>& ramified_overrides, int jobs,
                                 const std::map<long, PrimeTrace>& trace_overrides) {
    Weight1Form f;
    f.level = level;
    f.character_D = disc_char;
    auto ps = primes_upto(uint32_t(B));
    std::vector<PrimeTrace> traces(ps.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            long p = ps[i];
            if (auto ot = trace_overrides.find(p); ot != trace_overrides.end()) {
                traces[i] = ot->second;
            } else if (auto it = ramified_overrides.find(p); it != ramified_overrides.end()) {
                traces[i] = {PrimeTrace::rational, it->second};
            } else if (level % (p * p) == 0) {
                traces[i] = {PrimeTrace::rational, Rat(0)};
            } else if (level % p == 0) {
                traces[i] = {PrimeTrace::rational, ramified_ap(poly24, Int(p))};
            } else {
                traces[i] = frobenius_trace_at(quartic, poly24, poly12, disc_char, Int(p));
            }
        }
    };
    if (jobs <= 1) work(0, ps.size());
    else {
        std::vector<std::future<void>> fs;
        size_t chunk = (ps.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            size_t lo = std::min(ps.size(), j * chunk), hi = std::min(ps.size(), (j + 1) * chunk);
            if (lo < hi) fs.push_back(std::async(std::launch::async, work, lo, hi));
        }
        for (auto& fu : fs) fu.get();
    }
    for (size_t i = 0; i < ps.size(); ++i) {
        long p = ps[i];
        f.traces[p] = traces[i];
        if (traces[i].kind == PrimeTrace::pm_sqrt_m2 || traces[i].kind == PrimeTrace::pm_two ||
            traces[i].kind == PrimeTrace::pm_one)
            f.ambiguous_primes.push_back(p);
    }

    // a_{p^k} via the Hecke recurrence, then multiplicativity
    auto chi = [&](long p) -> Rat {
        if (level % p == 0) return Rat(0);
        return Rat(kronecker_symbol(disc_char, Int(p)));
    };
    std::map<std::pair<long, int>, SymCoeff> ppow;
    auto ap_sym = [&](long p) -> SymCoeff {
        const PrimeTrace& t = f.traces.at(p);
        SymCoeff c;
        switch (t.kind) {
            case PrimeTrace::rational:
                if (t.value != 0) c.t[SignMonomial{}] = QNum(t.value, Rat(0));
                return c;
            case PrimeTrace::pm_sqrt_m2:
                c.t[SignMonomial{p}] = QNum(Rat(0), Rat(1));
                return c;
            case PrimeTrace::pm_two:
                c.t[SignMonomial{p}] = QNum(Rat(2), Rat(0));
                return c;
            case PrimeTrace::pm_one:
                c.t[SignMonomial{p}] = QNum(Rat(1), Rat(0));
                return c;
            default:
                return SymCoeff{false, {}};
        }
    };
    std::function<SymCoeff(long, int)> prime_power = [&](long p, int k) -> SymCoeff {
        if (k == 0) {
            SymCoeff one;
            one.t[SignMonomial{}] = QNum(Rat(1), Rat(0));
            return one;
        }
        auto key = std::make_pair(p, k);
        if (auto it = ppow.find(key); it != ppow.end()) return it->second;
        SymCoeff r;
        if (k == 1) r = ap_sym(p);
        else
            r = sym_add(sym_mul(ap_sym(p), prime_power(p, k - 1)),
                        sym_scale(-chi(p), prime_power(p, k - 2)));
        ppow[key] = r;
        return r;
    };
    f.a.assign(size_t(B) + 1, SymCoeff{});
    if (B >= 1) f.a[1].t[SignMonomial{}] = QNum(Rat(1), Rat(0));
    for (long n = 2; n <= B; ++n) {
        SymCoeff val;
        val.t[SignMonomial{}] = QNum(Rat(1), Rat(0));
        long m = n;
        for (long p : ps) {
            if (int64_t(p) * p > m) break;
            if (m % p == 0) {
                int k = 0;
                while (m % p == 0) { m /= p; ++k; }
                val = sym_mul(val, prime_power(p, k));
            }
            if (m == 1) break;
        }
        if (m > 1) val = sym_mul(val, prime_power(m, 1));
        f.a[size_t(n)] = val;
    }
    return f;
}

namespace {

// substitute resolved signs into a monomial: returns (sign, leftover monomial)
std::pair<int, SignMonomial> subst(const SignMonomial& m, const std::map<long, int>& signs) {
    int s = 1;
    SignMonomial left;
    for (long q : m) {
        auto it = signs.find(q);
        if (it == signs.end()) left.push_back(q);
        else s *= it->second;
    }
    return {s, left};
}

}  // namespace

QExpansion collapse(const Weight1Form& f, const std::map<long, int>& signs, int B) {
    if (B >= int(f.a.size())) throw std::invalid_argument("collapse: truncation too large");
    QExpansion out = QExpansion::zero(B);
    out.weight = Weight::one;
    out.level = f.level;
    out.character = f.character_D.get_si();
    for (int n = 0; n <= B; ++n) {
        const SymCoeff& c = f.a[size_t(n)];
        if (!c.known) { out.known[size_t(n)] = 0; continue; }
        QNum acc;
        bool ok = true;
        for (auto& [m, v] : c.t) {
            auto [s, left] = subst(m, signs);
            if (!left.empty()) { ok = false; break; }
            acc = acc + (s > 0 ? v : QNum() - v);
        }
        if (ok) out.set(n, acc);
        else out.known[size_t(n)] = 0;
    }
    return out;
}

std::vector<SymCoeff> real_part_series(const Weight1Form& f) {
    std::vector<SymCoeff> out(f.a.size());
    for (size_t n = 0; n < f.a.size(); ++n) {
        if (!f.a[n].known) { out[n].known = false; continue; }
        for (auto& [m, v] : f.a[n].t)
            if (v.x != 0) out[n].t[m] = QNum(v.x, Rat(0));
    }
    return out;
}

std::vector<SymCoeff> imag_part_series(const Weight1Form& f) {
    // (sqrt(-2)/2)(a - conj a) = -2 y
    std::vector<SymCoeff> out(f.a.size());
    for (size_t n = 0; n < f.a.size(); ++n) {
        if (!f.a[n].known) { out[n].known = false; continue; }
        for (auto& [m, v] : f.a[n].t)
            if (v.y != 0) out[n].t[m] = QNum(-2 * v.y, Rat(0));
    }
    return out;
}

}  // namespace octmf
