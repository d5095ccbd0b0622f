#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octmf/halfint.hpp"
#include "octmf/octahedral.hpp"
#include "octmf/pipeline.hpp"

namespace py = pybind11;
using namespace octmf;

namespace {

RationalPoly poly_from_list(const std::vector<std::string>& coeffs) {
    std::vector<Rat> cs;
    for (const auto& s : coeffs) cs.push_back(rat_from_string(s));
    return RationalPoly(cs);
}

std::vector<std::string> poly_to_list(const RationalPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.c) out.push_back(c.get_str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_octmf, m) {
    m.doc() = "exact ternary-theta / embedding-obstruction / weight-3/2 eigenform kernel";

    m.def("kronecker_symbol", [](long a, long n) { return kronecker_symbol(Int(a), Int(n)); });
    m.def("hilbert_symbol", [](const std::string& a, const std::string& b, const std::string& v) {
        Place pl = (v == "inf") ? Place::inf() : Place::prime(Int(v));
        return hilbert_symbol(rat_from_string(a), rat_from_string(b), pl);
    });
    m.def("squarefree_part",
          [](const std::string& r) { return squarefree_part(rat_from_string(r)).get_str(); });
    m.def("poly_discriminant", [](const std::vector<std::string>& coeffs) {
        return poly_discriminant(poly_from_list(coeffs)).get_str();
    });
    m.def("factorization_pattern", [](const std::vector<std::string>& coeffs, long p) {
        auto pat = factorization_pattern_mod_p(poly_from_list(coeffs), Int(p));
        return py::make_tuple(pat.degrees, pat.squarefree);
    });

    m.def("trace_form_gram", [](const std::vector<std::string>& coeffs) {
        QuadraticForm q = trace_form(poly_from_list(coeffs));
        std::vector<std::vector<std::string>> out;
        for (auto& row : q.gram) {
            std::vector<std::string> r;
            for (auto& x : row) r.push_back(x.get_str());
            out.push_back(r);
        }
        return out;
    });
    m.def("obstruction_support", [](const std::vector<std::string>& coeffs) {
        Br2Element e = obstruction_class(poly_from_list(coeffs));
        std::vector<std::string> out;
        for (const Place& p : e.support) out.push_back(p.str());
        return out;
    });

    py::class_<TernaryForm>(m, "TernaryForm")
        .def(py::init([](int64_t a1, int64_t a2, int64_t a3, int64_t a23, int64_t a13,
                         int64_t a12) {
            return TernaryForm{a1, a2, a3, a23, a13, a12};
        }))
        .def_readonly("a1", &TernaryForm::a1)
        .def_readonly("a2", &TernaryForm::a2)
        .def_readonly("a3", &TernaryForm::a3)
        .def_readonly("a23", &TernaryForm::a23)
        .def_readonly("a13", &TernaryForm::a13)
        .def_readonly("a12", &TernaryForm::a12)
        .def("__repr__", &TernaryForm::str);
    m.def("ternary_invariants", [](const TernaryForm& t) {
        auto inv = ternary_invariants(t);
        return py::make_tuple(inv.disc.get_si(), inv.level.get_si());
    });
    m.def("reduce_ternary", [](const TernaryForm& t) { return reduce(t); });
    m.def("is_equivalent", [](const TernaryForm& a, const TernaryForm& b) {
        return is_equivalent(a, b);
    });
    m.def("enumerate_classes",
          [](long level, bool square_disc, bool kohnen) {
              return enumerate_classes(Int(level), square_disc, kohnen);
          },
          py::arg("level"), py::arg("square_disc") = true, py::arg("kohnen") = false);
    m.def("theta_coefficients", [](const TernaryForm& t, int64_t B) {
        return theta_coefficients(t, B);
    });

    m.def("curve_labels", [] {
        std::vector<std::string> out;
        for (auto& [k, v] : curve_registry()) out.push_back(k);
        return out;
    });
    m.def("ap", [](const std::string& label, long p) {
        return ap(curve_registry().at(label).curve, Int(p));
    });
    m.def("halving_quartic", [](const std::string& label, const std::string& x,
                                const std::string& y) {
        const auto& rec = curve_registry().at(label);
        return poly_to_list(
            halving_quartic(rec.curve, CurvePoint::affine(rat_from_string(x), rat_from_string(y))));
    });
    m.def("add_points", [](const std::string& label, const std::string& x1, const std::string& y1,
                           const std::string& x2, const std::string& y2) {
        const auto& rec = curve_registry().at(label);
        CurvePoint r = add_points(rec.curve,
                                  CurvePoint::affine(rat_from_string(x1), rat_from_string(y1)),
                                  CurvePoint::affine(rat_from_string(x2), rat_from_string(y2)));
        if (r.infinity) return py::make_tuple();
        return py::make_tuple(r.x.get_str(), r.y.get_str());
    });

    m.def("dim_weight_3_2", &dim_weight_3_2);
    m.def("verify_group", [] {
        std::map<std::string, bool> out;
        for (auto& [name, ok] : verify_group_report()) out[name] = ok;
        return out;
    });
    m.def("reproduce_case", [](const std::string& name, int jobs) {
        RunOptions opt;
        opt.jobs = jobs;
        CaseRun run = run_case(name, opt);
        py::dict out;
        py::list labels, matches;
        for (size_t i = 0; i < run.golden_match.size(); ++i) {
            labels.append(run.cfg.golden_labels[i]);
            matches.append(bool(run.golden_match[i]));
        }
        out["labels"] = labels;
        out["matches"] = matches;
        out["log"] = run.log;
        return out;
    }, py::arg("name"), py::arg("jobs") = 2);

    m.attr("__version__") = "0.1.0";
}
