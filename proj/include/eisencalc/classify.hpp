#ifndef EISENCALC_CLASSIFY_HPP
#define EISENCALC_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <eisencalc/orbits.hpp>
#include <eisencalc/sweep.hpp>

namespace eisencalc
{

enum class Verdict {
    holomorphic_nonzero,
    at_most_simple_pole_realized,
    at_most_simple_pole_not_realized,
    holomorphic_by_case1,
};

// "HOLOMORPHIC_NONZERO", "AT_MOST_SIMPLE_POLE_REALIZED", ...
const char *to_string(Verdict v);
Verdict parse_verdict(const std::string &text);

inline const char *epsilon_assumption = "assumption: epsilon factors set to 1 (unramified data)";

struct Classification {
    int m = 1;
    int n = 1;
    Rational s;
    std::optional<int> alpha; // set at critical points
    bool char_equal = true;
    Verdict verdict = Verdict::holomorphic_nonzero;
    int max_order = 0;
    std::vector<OrbitReport> witnesses;
    std::vector<std::string> annotations;
};

// Critical point (m+n)/2 - s in [0, floor((m+n)/2)] when it is an integer; else nothing.
std::optional<int> critical_alpha(int m, int n, const Rational &s);

// Verdict at a critical point from the orbit sums. trunc <= 0 picks the default.
Classification classify(const CriticalPoint &pt, int trunc = 0, Execution ex = Execution::parallel);

// Verdict at an arbitrary s > 0 (or s = 0 when it is critical).
Classification classify_at(int m, int n, const Rational &s, bool char_equal, int trunc = 0,
                           Execution ex = Execution::parallel);

struct ConstantTermReport {
    Classification classification;
    std::vector<OrbitReport> orbits;
};

ConstantTermReport constant_term_report(const CriticalPoint &pt, int trunc = 0, Execution ex = Execution::parallel);

// Opaque intertwining-operator label of an orbit, keyed by its image of Lambda_s.
std::string operator_label(const OrbitReport &orbit);

// One row per orbit: representative, intervals, sum, pole order, operator label.
std::string render_markdown(const ConstantTermReport &report);

} // namespace eisencalc

#endif
