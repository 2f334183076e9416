#ifndef EISENCALC_SWEEP_HPP
#define EISENCALC_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#include <eisencalc/orbits.hpp>

namespace eisencalc
{

enum class Execution { serial, parallel };

// Worker count: EISENCALC_THREADS when set to a positive integer, else the OpenMP default.
int worker_count();

// out[i] = f(i) for i in [0, count). The parallel form uses OpenMP with dynamic
// scheduling; results are identical to the serial form. The first exception thrown
// by any call is rethrown after the loop.
template <typename T, typename F>
std::vector<T> map_indexed(std::size_t count, F f, Execution ex)
{
    if (ex == Execution::serial) {
        std::vector<T> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(f(i));
        }
        return out;
    }
    std::vector<std::optional<T>> slots(count);
    std::exception_ptr failure;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
        } catch (...) {
#pragma omp critical(eisencalc_map_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

struct TelescopeCheck {
    std::vector<int> images;
    bool equal = false;
};

// Root-product and telescoped r^-1 compared after reduction, for every shuffle of (m, n).
std::vector<TelescopeCheck> telescope_cell(int m, int n, Execution ex, int cap = default_enumeration_cap);

struct PoleCheck {
    std::vector<int> images;
    int counted = 0;   // counting formula
    int expanded = 0;  // minus the valuation of the expansion
    bool in_w_alpha = false;
};

// Both pole-order routes for every shuffle at the point.
std::vector<PoleCheck> pole_cell(const CriticalPoint &pt, Execution ex, int cap = default_enumeration_cap);

// Orbit reports at the point, one task per orbit.
std::vector<OrbitReport> orbit_cell(const CriticalPoint &pt, int trunc, Execution ex,
                                    int cap = default_enumeration_cap);

} // namespace eisencalc

#endif
