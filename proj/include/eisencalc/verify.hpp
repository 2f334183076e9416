#ifndef EISENCALC_VERIFY_HPP
#define EISENCALC_VERIFY_HPP

#include <string>
#include <vector>

#include <eisencalc/sweep.hpp>

namespace eisencalc
{

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Criteria over the grid m <= n, m+n <= max_rank (telescoping also takes m > n).
// Orbit criteria stop at min(max_rank, orbit_rank).
struct VerifyOptions {
    int max_rank = 8;
    int orbit_rank = 8;
    Execution execution = Execution::parallel;
};

CriterionResult check_telescoping(int max_rank, Execution ex);

// Pole-order oracle, maximal order on W_alpha, and the alpha = 0 singleton.
std::vector<CriterionResult> check_pole_orders(int max_rank, Execution ex);

// Orbit oracle and orbit-sum pole bounds.
std::vector<CriterionResult> check_orbits(int max_rank, Execution ex);

CriterionResult check_closed_forms(int max_rank, Execution ex);
CriterionResult check_w0_witness();
CriterionResult check_gl2();

// Criteria 1 through 9, ordered by id.
std::vector<CriterionResult> run_verification(const VerifyOptions &opts);

// "PASS 1 name: detail" per line, optionally after a timestamp header.
std::string render_verification(const std::vector<CriterionResult> &results, bool header);

} // namespace eisencalc

#endif
