#include "octmf/quadform.hpp"

#include <sstream>

namespace octmf {

QuadraticForm QuadraticForm::diagonal(const std::vector<Rat>& d) {
    QuadraticForm q;
    size_t n = d.size();
    q.gram.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) q.gram[i][i] = d[i];
    return q;
}

void QuadraticForm::check_symmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
}

Rat QuadraticForm::det() const {
    // plain fraction Gaussian elimination
    auto m = gram;
    int n = dim();
    Rat d(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) { std::swap(m[piv], m[k]); d = -d; }
        d *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

std::string Br2Element::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Place& p : support) {
        if (!first) os << ", ";
        os << p.str();
        first = false;
    }
    os << "}";
    return os.str();
}

Br2Element br2_add(const Br2Element& a, const Br2Element& b) {
    Br2Element r;
    for (const Place& p : a.support)
        if (!b.support.count(p)) r.support.insert(p);
    for (const Place& p : b.support)
        if (!a.support.count(p)) r.support.insert(p);
    return r;
}

QuadraticForm trace_form(const RationalPoly& quartic) {
    if (quartic.degree() != 4) throw std::invalid_argument("trace_form: degree != 4");
    RationalPoly f = monic(quartic);
    if (poly_discriminant(f) == 0) throw std::invalid_argument("trace_form: not squarefree");
    Rat e1 = -f.coeff(3), e2 = f.coeff(2), e3 = -f.coeff(1), e4 = f.coeff(0);
    std::vector<Rat> p(7);
    p[0] = 4;
    p[1] = e1;
    p[2] = e1 * p[1] - 2 * e2;
    p[3] = e1 * p[2] - e2 * p[1] + 3 * e3;
    p[4] = e1 * p[3] - e2 * p[2] + e3 * p[1] - 4 * e4;
    for (int k = 5; k <= 6; ++k)
        p[k] = e1 * p[k - 1] - e2 * p[k - 2] + e3 * p[k - 3] - e4 * p[k - 4];
    QuadraticForm q;
    q.gram.assign(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q.gram[i][j] = p[i + j];
    return q;
}

std::vector<Rat> diagonalize(const QuadraticForm& q0) {
    q0.check_symmetric();
    if (q0.det() == 0) throw std::invalid_argument("diagonalize: degenerate form");
    auto m = q0.gram;
    int n = q0.dim();
    std::vector<Rat> diag;
    int off = 0;
    while (off < n) {
        // ensure nonzero pivot at (off, off)
        if (m[off][off] == 0) {
            int k = -1;
            for (int i = off; i < n; ++i)
                if (m[i][i] != 0) { k = i; break; }
            if (k >= 0) {
                std::swap(m[off], m[k]);
                for (int i = off; i < n; ++i) std::swap(m[i][off], m[i][k]);
            } else {
                // all diagonal zero: pick m[off][j] != 0, add row/col j to off
                int j = -1;
                for (int jj = off + 1; jj < n; ++jj)
                    if (m[off][jj] != 0) { j = jj; break; }
                if (j < 0) throw std::invalid_argument("diagonalize: degenerate form");
                for (int t = off; t < n; ++t) m[off][t] += m[j][t];
                for (int t = off; t < n; ++t) m[t][off] += m[t][j];
            }
        }
        Rat d = m[off][off];
        diag.push_back(d);
        for (int i = off + 1; i < n; ++i) {
            if (m[i][off] == 0) continue;
            Rat f = m[i][off] / d;
            for (int j = off; j < n; ++j) m[i][j] -= f * m[off][j];
        }
        for (int j = off + 1; j < n; ++j) m[off][j] = 0;
        // symmetrize the trailing block (columns were not eliminated)
        for (int i = off + 1; i < n; ++i) m[i][off] = 0;
        for (int i = off + 1; i < n; ++i)
            for (int j = off + 1; j < i; ++j) m[j][i] = m[i][j];
        ++off;
    }
    return diag;
}

int hasse_invariant(const std::vector<Rat>& diag, const Place& v) {
    int e = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) e *= hilbert_symbol(diag[i], diag[j], v);
    return e;
}

int hasse_invariant(const QuadraticForm& q, const Place& v) {
    return hasse_invariant(diagonalize(q), v);
}

std::pair<int, int> signature(const QuadraticForm& q) {
    auto d = diagonalize(q);
    int pos = 0;
    for (const Rat& x : d)
        if (x > 0) ++pos;
    return {pos, int(d.size()) - pos};
}

std::vector<Place> witness_places(const std::vector<std::vector<Rat>>& diags) {
    std::set<Int> ps;
    ps.insert(2);
    for (const auto& d : diags)
        for (const Rat& x : d) {
            for (auto& [p, e] : factor_integer(Int(x.get_num()) * Int(x.get_den()))) ps.insert(p);
        }
    std::vector<Place> out;
    for (const Int& p : ps) out.push_back(Place{false, p});
    return out;
}

bool is_equivalent_over_Q(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.dim() != b.dim()) return false;
    auto da = diagonalize(a), db = diagonalize(b);
    if (squarefree_part(a.det()) != squarefree_part(b.det())) return false;
    int pa = 0, pb = 0;
    for (const Rat& x : da) pa += (x > 0);
    for (const Rat& x : db) pb += (x > 0);
    if (pa != pb) return false;
    for (const Place& v : witness_places({da, db}))
        if (hasse_invariant(da, v) != hasse_invariant(db, v)) return false;
    return true;
}

QuadraticForm reference_form(const Rat& D) {
    if (D == 0) throw std::invalid_argument("reference_form: D = 0");
    return QuadraticForm::diagonal({Rat(1), Rat(1), Rat(2), Rat(2) * D});
}

Br2Element obstruction_class(const RationalPoly& quartic) {
    RationalPoly f = monic(quartic);
    Rat disc = poly_discriminant(f);
    if (disc == 0) throw std::invalid_argument("obstruction_class: not squarefree");
    if (disc > 0) throw std::invalid_argument("signature mismatch case out of scope");
    auto dt = diagonalize(trace_form(f));
    auto dr = diagonalize(reference_form(Rat(squarefree_part(disc))));
    Br2Element out;
    for (const Place& v : witness_places({dt, dr}))
        if (hasse_invariant(dt, v) != hasse_invariant(dr, v)) out.support.insert(v);
    // infinite place: signatures match by construction, but record faithfully
    if (hasse_invariant(dt, Place::inf()) != hasse_invariant(dr, Place::inf()))
        out.support.insert(Place::inf());
    return out;
}

bool witt_sum_check(const RationalPoly& q1, const RationalPoly& q2,
                    const RationalPoly& q3, const Int& D_L) {
    Int d1 = squarefree_part(poly_discriminant(monic(q1)));
    Int d2 = squarefree_part(poly_discriminant(monic(q2)));
    Int d3 = squarefree_part(poly_discriminant(monic(q3)));
    if (d1 != D_L || d2 != D_L || d3 != D_L)
        throw std::invalid_argument("witt_sum_check: discriminant class mismatch");
    auto t1 = diagonalize(trace_form(q1));
    auto t2 = diagonalize(trace_form(q2));
    auto t3 = diagonalize(trace_form(q3));
    std::vector<Place> places = witness_places({t1, t2, t3, {Rat(2), Rat(D_L)}});
    places.push_back(Place::inf());
    for (const Place& v : places) {
        int lhs = hasse_invariant(t3, v);
        int rhs = hasse_invariant(t1, v) * hasse_invariant(t2, v) *
                  hilbert_symbol(Rat(2), Rat(D_L), v);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace octmf
