#include <eisencalc/sweep.hpp>

#include <cstdlib>
#include <string>

#include <omp.h>

namespace eisencalc
{

int worker_count()
{
    if (const char *env = std::getenv("EISENCALC_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) {
                return n;
            }
        } catch (const std::exception &) {
        }
    }
    return omp_get_max_threads();
}

std::vector<TelescopeCheck> telescope_cell(int m, int n, Execution ex, int cap)
{
    const auto all = enumerate_shuffles(m, n, cap);
    return map_indexed<TelescopeCheck>(
        all.size(),
        [&](std::size_t i) {
            const Shuffle &w = all[i];
            return TelescopeCheck{w.one_based(),
                                  r_inverse_root_product(w).reduce() == r_inverse_telescoped(w).reduce()};
        },
        ex);
}

std::vector<PoleCheck> pole_cell(const CriticalPoint &pt, Execution ex, int cap)
{
    const auto all = enumerate_shuffles(pt.m(), pt.n(), cap);
    return map_indexed<PoleCheck>(
        all.size(),
        [&](std::size_t i) {
            const Shuffle &w = all[i];
            PoleCheck c{w.one_based(), pole_order_at(w, pt), 0, pt.char_equal() && in_w_alpha(w, pt)};
            if (pt.char_equal()) {
                // Valuations never exceed 1, so t^1 is enough to see the leading term.
                const auto series = expand_at(r_inverse_telescoped(w), pt.s(), 1);
                if (series.is_zero()) {
                    throw InvariantError("expansion of r^-1 vanishes through t^1 for " +
                                         format_images(w.one_based()));
                }
                c.expanded = -series.valuation();
            } else {
                c.expanded = r_inverse_telescoped(w, false).at(pt.s()).pole_order();
            }
            return c;
        },
        ex);
}

std::vector<OrbitReport> orbit_cell(const CriticalPoint &pt, int trunc, Execution ex, int cap)
{
    const auto orbits = orbit_partition(pt, cap);
    return map_indexed<OrbitReport>(
        orbits.size(), [&](std::size_t i) { return analyze_orbit(orbits[i], pt, trunc); }, ex);
}

} // namespace eisencalc
