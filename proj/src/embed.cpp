#include "octmf/embed.hpp"

#include "octmf/arith.hpp"

#include <cmath>
#include <sstream>

namespace octmf {

MpComplex GammaExpression::eval(const MpComplex& x1, const MpComplex& x2, mpfr_prec_t prec) const {
    // precompute powers
    int m1 = 0, m2 = 0;
    for (const Term& t : terms) {
        m1 = std::max(m1, t.d1);
        m2 = std::max(m2, t.d2);
    }
    std::vector<MpComplex> p1, p2;
    MpComplex one(prec);
    one.re = MpFloat::from_rat(Rat(1), prec);
    p1.push_back(one);
    p2.push_back(one);
    for (int i = 1; i <= m1; ++i) p1.push_back(p1.back() * x1);
    for (int i = 1; i <= m2; ++i) p2.push_back(p2.back() * x2);
    MpComplex acc(prec);
    for (const Term& t : terms) {
        MpComplex c(prec);
        c.re = MpFloat::from_rat(Rat(t.coeff), prec);
        acc = acc + c * p1[size_t(t.d1)] * p2[size_t(t.d2)];
    }
    MpComplex s(prec);
    s.re = MpFloat::from_rat(scalar, prec);
    return acc * s;
}

GammaExpression GammaExpression::parse(const std::string& text) {
    // line-oriented: "scalar <rat>" once, then "<coeff> <d1> <d2>" per term;
    // '#' starts a comment
    GammaExpression g;
    std::istringstream is(text);
    std::string line;
    bool have_scalar = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "scalar") {
            std::string v;
            ls >> v;
            g.scalar = rat_from_string(v);
            have_scalar = true;
        } else {
            Term t;
            t.coeff = Int(first);
            ls >> t.d1 >> t.d2;
            g.terms.push_back(t);
        }
    }
    if (!have_scalar) g.scalar = 1;
    if (g.terms.empty()) throw std::invalid_argument("GammaExpression: no terms");
    return g;
}

std::string GammaExpression::serialize() const {
    std::ostringstream os;
    os << "scalar " << scalar.get_str() << "\n";
    for (const Term& t : terms) os << t.coeff.get_str() << " " << t.d1 << " " << t.d2 << "\n";
    return os.str();
}

MpComplex det4_cofactor(const std::vector<std::vector<MpComplex>>& m) {
    mpfr_prec_t prec = m[0][0].prec();
    std::function<MpComplex(const std::vector<std::vector<MpComplex>>&)> go =
        [&](const std::vector<std::vector<MpComplex>>& a) -> MpComplex {
        size_t n = a.size();
        if (n == 1) return a[0][0];
        MpComplex acc(prec);
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<MpComplex>> sub;
            for (size_t i = 1; i < n; ++i) {
                std::vector<MpComplex> row;
                for (size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(a[i][k]);
                sub.push_back(row);
            }
            MpComplex term = a[0][j] * go(sub);
            if (j % 2) acc = acc - term;
            else acc = acc + term;
        }
        return acc;
    };
    return go(m);
}

MpComplex gamma_determinant(const std::vector<MpComplex>& roots,
                            const std::vector<std::vector<Rat>>& P, const Int& D, int digits) {
    if (roots.size() != 4) throw std::invalid_argument("gamma_determinant: need 4 roots");
    mpfr_prec_t prec = digits_to_prec(digits);
    // distinctness
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            MpFloat d = abs(roots[size_t(i)] - roots[size_t(j)]);
            if (d.to_double() < 1e-30) throw std::invalid_argument("gamma_determinant: repeated roots");
        }
    // P nonsingular (exact)
    {
        std::vector<std::vector<Rat>> m = P;
        Rat det(1);
        for (int k = 0; k < 4; ++k) {
            int piv = -1;
            for (int i = k; i < 4; ++i)
                if (m[size_t(i)][size_t(k)] != 0) { piv = i; break; }
            if (piv < 0) throw std::invalid_argument("gamma_determinant: singular P");
            std::swap(m[size_t(piv)], m[size_t(k)]);
            for (int i = k + 1; i < 4; ++i) {
                Rat f = m[size_t(i)][size_t(k)] / m[size_t(k)][size_t(k)];
                for (int j = k; j < 4; ++j) m[size_t(i)][size_t(j)] -= f * m[size_t(k)][size_t(j)];
            }
        }
    }
    auto C = [&](mpfr_prec_t pr) {
        // block matrix with 1, 1, 1/2 column and ±1/(2 sqrt(D))
        std::vector<std::vector<MpComplex>> c(4, std::vector<MpComplex>(4, MpComplex(pr)));
        auto set = [&](int i, int j, const Rat& v) { c[size_t(i)][size_t(j)].re = MpFloat::from_rat(v, pr); };
        set(0, 0, 1);
        set(1, 1, 1);
        set(2, 2, Rat(1, 2));
        set(2, 3, Rat(1, 2));
        // 1/(2 sqrt(D)); D may be negative
        MpComplex sd(pr);
        if (D >= 0) sd.re = sqrt(MpFloat::from_rat(Rat(D), pr));
        else sd.im = sqrt(MpFloat::from_rat(Rat(-D), pr));
        MpComplex two(pr);
        two.re = MpFloat::from_rat(Rat(2), pr);
        MpComplex one(pr);
        one.re = MpFloat::from_rat(Rat(1), pr);
        MpComplex inv = one / (two * sd);
        c[3][2] = inv;
        c[3][3] = MpComplex(pr) - inv;
        return c;
    };
    std::vector<std::vector<MpComplex>> V(4, std::vector<MpComplex>(4, MpComplex(prec)));
    for (int i = 0; i < 4; ++i) {
        MpComplex one(prec);
        one.re = MpFloat::from_rat(Rat(1), prec);
        V[size_t(i)][0] = one;
        for (int j = 1; j < 4; ++j) V[size_t(i)][size_t(j)] = V[size_t(i)][size_t(j - 1)] * roots[size_t(i)];
    }
    auto Pm = std::vector<std::vector<MpComplex>>(4, std::vector<MpComplex>(4, MpComplex(prec)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Pm[size_t(i)][size_t(j)].re = MpFloat::from_rat(P[size_t(i)][size_t(j)], prec);
    auto Cm = C(prec);
    auto mul = [&](const std::vector<std::vector<MpComplex>>& a,
                   const std::vector<std::vector<MpComplex>>& b) {
        std::vector<std::vector<MpComplex>> r(4, std::vector<MpComplex>(4, MpComplex(prec)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    r[size_t(i)][size_t(j)] = r[size_t(i)][size_t(j)] + a[size_t(i)][size_t(k)] * b[size_t(k)][size_t(j)];
        return r;
    };
    auto M = mul(mul(V, Pm), Cm);
    for (int i = 0; i < 4; ++i) {
        MpComplex one(prec);
        one.re = MpFloat::from_rat(Rat(1), prec);
        M[size_t(i)][size_t(i)] = M[size_t(i)][size_t(i)] + one;
    }
    return det4_cofactor(M);
}

std::vector<MpComplex> gamma_conjugates(const RationalPoly& quartic, const GammaExpression& gamma,
                                        int digits) {
    auto roots = complex_roots(quartic, digits);
    mpfr_prec_t prec = digits_to_prec(digits) * 2;
    std::vector<MpComplex> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            out.push_back(gamma.eval(roots[size_t(i)], roots[size_t(j)], prec));
        }
    for (const MpComplex& g : out)
        if (abs(g).to_double() < 1e-40) throw std::runtime_error("gamma_conjugates: degenerate gamma");
    return out;
}

RationalPoly minpoly_gamma(const std::vector<MpComplex>& conjugates, const Rat& c, int digits) {
    if (c == 0) throw std::invalid_argument("minpoly_gamma: c = 0");
    mpfr_prec_t prec = 0;
    for (const auto& g : conjugates) prec = std::max(prec, g.prec());
    std::vector<MpComplex> poly;
    MpComplex one(prec);
    one.re = MpFloat::from_rat(Rat(1), prec);
    poly.push_back(one);
    MpComplex cc(prec);
    cc.re = MpFloat::from_rat(c, prec);
    for (const MpComplex& g : conjugates) {
        std::vector<MpComplex> next(poly.size() + 1, MpComplex(prec));
        MpComplex cg = cc * g;
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - cg * poly[k];
        }
        poly = next;
    }
    std::vector<Rat> coeffs;
    double worst = 0;
    for (const MpComplex& co : poly) {
        Int n = co.re.round_to_int();
        MpFloat err = abs(co.re - MpFloat::from_rat(Rat(n), prec));
        worst = std::max(worst, err.to_double());
        worst = std::max(worst, std::abs(co.im.to_double()));
        coeffs.push_back(Rat(n));
    }
    double bound = std::min(1e-20, std::pow(10.0, -digits / 4.0));
    if (worst > bound)
        throw std::runtime_error("minpoly_gamma: rounding residual too large; retry at higher precision");
    return RationalPoly(coeffs);
}

RationalPoly minpoly_sqrt_gamma(const std::vector<MpComplex>& conjugates, const Rat& c, int digits) {
    if (c == 0) throw std::invalid_argument("minpoly_sqrt_gamma: c = 0");
    mpfr_prec_t prec = 0;
    for (const auto& g : conjugates) prec = std::max(prec, g.prec());
    // prod (t^2 - c*g_i)
    std::vector<MpComplex> poly;
    MpComplex one(prec);
    one.re = MpFloat::from_rat(Rat(1), prec);
    poly.push_back(one);
    MpComplex cc(prec);
    cc.re = MpFloat::from_rat(c, prec);
    for (const MpComplex& g : conjugates) {
        std::vector<MpComplex> next(poly.size() + 2, MpComplex(prec));
        MpComplex cg = cc * g;
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 2] = next[k + 2] + poly[k];
            next[k] = next[k] - cg * poly[k];
        }
        poly = next;
    }
    // round to integers; verify residual < 10^-20
    std::vector<Rat> coeffs;
    double worst = 0;
    for (const MpComplex& co : poly) {
        Int n = co.re.round_to_int();
        MpFloat err = abs(co.re - MpFloat::from_rat(Rat(n), prec));
        worst = std::max(worst, err.to_double());
        worst = std::max(worst, std::abs(co.im.to_double()));
        coeffs.push_back(Rat(n));
    }
    double bound = std::min(1e-20, std::pow(10.0, -digits / 4.0));
    if (worst > bound)
        throw std::runtime_error("minpoly_sqrt_gamma: rounding residual " + std::to_string(worst) +
                                 " too large; retry at higher precision");
    RationalPoly out(coeffs);
    if (poly_discriminant(out) == 0)
        throw std::runtime_error("minpoly_sqrt_gamma: result not squarefree");
    return out;
}

}  // namespace octmf
