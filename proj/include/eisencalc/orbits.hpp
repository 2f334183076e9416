#ifndef EISENCALC_ORBITS_HPP
#define EISENCALC_ORBITS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <eisencalc/laurent.hpp>
#include <eisencalc/norm_factors.hpp>
#include <eisencalc/weyl.hpp>

namespace eisencalc
{

// The block {start, ..., start+length-1} of first-block positions.
struct ChangeInterval {
    int start = 1;
    int length = 1;

    int last() const
    {
        return start + length - 1;
    }

    friend bool operator==(const ChangeInterval &, const ChangeInterval &) = default;
    friend auto operator<=>(const ChangeInterval &, const ChangeInterval &) = default;
};

std::string to_string(const ChangeInterval &iv);

class TruncationTooSmall : public Error
{
public:
    using Error::Error;
};

// Text key of the image of Lambda_s at the point; equal keys mean the same orbit.
std::string orbit_key(const Shuffle &w, const CriticalPoint &pt);

// All shuffles with the same image of Lambda_s at the point, by direct comparison.
std::vector<Shuffle> orbit_brute_force(const Shuffle &w, const CriticalPoint &pt,
                                       int cap = default_enumeration_cap);
std::vector<Shuffle> orbit_brute_force(const Shuffle &w, const CriticalPoint &pt, std::span<const Shuffle> all);

// Partition of all shuffles into orbits. Each orbit is sorted; orbits are ordered
// by their least member.
std::vector<std::vector<Shuffle>> orbit_partition(const CriticalPoint &pt, int cap = default_enumeration_cap);

// The two chains that make a swap of the block with its partner block legal.
// Comparisons that fall outside a block are dropped.
bool satisfies_change_conditions(const Shuffle &w, const ChangeInterval &iv, int offset);

// No proper prefix of the block is itself a legal swap.
bool satisfies_minimality(const Shuffle &w, const ChangeInterval &iv, int offset);

// Swaps every block in `blocks` with its partner block. Throws if the result is
// not a shuffle.
Shuffle swap_blocks(const Shuffle &w, std::span<const ChangeInterval> blocks, int offset);

// Minimal legal blocks scanned left to right from position 1.
std::vector<ChangeInterval> scan_intervals(const Shuffle &w, const CriticalPoint &pt);

struct IntervalDecomposition {
    Shuffle base;
    std::vector<ChangeInterval> intervals;
};

// Base point with w(i_j) < w(offset+i_j) at every interval start, and its intervals.
IntervalDecomposition change_intervals(const Shuffle &w, const CriticalPoint &pt);

// All 2^r swaps of unions of the intervals, sorted.
std::vector<Shuffle> constructive_orbit(const IntervalDecomposition &d, const CriticalPoint &pt);

// Sum over the members of the telescoped r^-1 expanded at s = pt.s + t through t^trunc.
// Throws TruncationTooSmall if the sum vanishes to that order.
LaurentSeries orbit_sum(std::span<const Shuffle> members, const CriticalPoint &pt, int trunc);

struct OrbitReport {
    Shuffle base;
    std::vector<ChangeInterval> intervals;
    std::vector<Shuffle> members;
    std::optional<LaurentSeries> sum; // absent for chi != mu
    PoleOrder pole;
    std::string key;
};

// Full analysis of the orbit of w. The interval structure must be the same from
// every member, and the constructive orbit must match the brute-force orbit.
OrbitReport analyze_orbit(std::span<const Shuffle> members, const CriticalPoint &pt, int trunc);

// Reports for every orbit at the point.
std::vector<OrbitReport> orbit_reports(const CriticalPoint &pt, int trunc, int cap = default_enumeration_cap);

// Sorted values of an interval and its partner block form consecutive integers whose
// runs alternate first block / partner block, begin with the first block, end with
// the partner block, and the partner count stays strictly behind until the last run.
bool check_run_layout(const Shuffle &base, const ChangeInterval &iv, int offset);

// For n > alpha: inside the interval, the base point has exactly one numerator pole,
// at i = start with argument 1, and the swapped point exactly one, at i = last with
// argument 0. The remaining unit factors agree up to the functional equation.
bool check_interval_poles(const Shuffle &base, const ChangeInterval &iv, const CriticalPoint &pt);

// B1/A * prod (a_j + b_j) built from the base point (n > alpha).
LaurentSeries factored_orbit_sum(const IntervalDecomposition &d, const CriticalPoint &pt, int trunc);

struct ClosedFormCheck {
    std::string case_name;
    LaurentSeries direct;
    LaurentSeries closed;
    bool equal = false;
};

// Sum over W_alpha against the closed form for the case of (m, n, alpha).
ClosedFormCheck closed_form_check(const CriticalPoint &pt, int trunc = 2);

} // namespace eisencalc

#endif
