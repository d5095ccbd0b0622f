#pragma once

#include "octmf/elliptic.hpp"
#include "octmf/embed.hpp"
#include "octmf/halfint.hpp"
#include "octmf/quadform.hpp"
#include "octmf/ternary.hpp"
#include "octmf/weight1.hpp"

#include <map>
#include <optional>

namespace octmf {

std::string data_dir();  // OCTMF_DATA env override, else compiled-in default

struct CurveRecord {
    std::string label;
    WeierstrassCurve curve;
    std::vector<CurvePoint> points;
};

const std::map<std::string, CurveRecord>& curve_registry();

struct CaseConfig {
    std::string name;             // "43", "563", "643"
    std::string curve_label;      // eigenform target for the main case
    CurvePoint point;             // the distinguished rational point
    RationalPoly kpoly;           // quartic field polynomial as printed (registry data)
    std::string gamma_file;
    long w1_level;                // level of the weight-1 form
    Int disc_char;                // character discriminant (negative)
    int theta_d;                  // Theta_d multiplier
    bool four_z;                  // use f(4z)
    std::vector<long> theta_levels;   // levels whose table forms feed the span
    std::vector<std::string> golden;  // golden eigenform files
    std::vector<std::string> golden_labels;
    std::vector<std::string> golden_curves;  // curve per golden eigenform
    std::vector<QNum> leading;    // normalization of the first nonzero coefficient
};

const CaseConfig& case_config(const std::string& name);

// rows of the shipped table files (in the printed order)
std::vector<TernaryForm> load_table(long level);

// golden eigenform: map n -> rational coefficient
std::map<int, Rat> load_golden_expansion(const std::string& file);

RationalPoly load_poly_file(const std::string& file);

// same-field certificate: equal squarefree discriminant parts and equal
// factorization patterns at every prime < bound where both reductions are
// squarefree
bool same_field_certificate(const RationalPoly& a, const RationalPoly& b, long bound = 500);

struct SignState {
    std::map<long, int> signs;       // resolved: prime -> ±1 (first one is the gauge)
    std::vector<long> unresolved;    // ambiguous primes left masked
};

struct CaseRun {
    CaseConfig cfg;
    RationalPoly poly24;                 // computed from gamma (even polynomial)
    Weight1Form w1;
    SignState signstate;
    std::vector<QExpansion> basis;       // independent thetas + the weight-1 products
    std::vector<int> theta_rows_used;    // indices into the concatenated table rows
    std::vector<EigenformResult> eigenforms;  // one per golden target
    std::vector<bool> golden_match;
    std::string log;
};

struct RunOptions {
    int digits = 200;
    int B_big = 2452;       // source truncation for span work
    int B_express = 50;     // matching window
    int jobs = 1;
    bool use_cache = true;
};

CaseRun run_case(const std::string& name, const RunOptions& opt = {});

// obstruction report for the CLI
struct ObstructionReport {
    RationalPoly quartic;
    Br2Element cls;
    bool trivial;
};
ObstructionReport obstruction_report(const std::string& curve_label, const CurvePoint& p);

// group verification suite; returns pass/fail lines
std::vector<std::pair<std::string, bool>> verify_group_report();

}  // namespace octmf
