#include <eisencalc/orbits.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace eisencalc
{

std::string to_string(const ChangeInterval &iv)
{
    if (iv.length == 1) {
        return "{" + std::to_string(iv.start) + "}";
    }
    return "{" + std::to_string(iv.start) + ".." + std::to_string(iv.last()) + "}";
}

std::string orbit_key(const Shuffle &w, const CriticalPoint &pt)
{
    const auto image = substitute(apply_weyl(w, LambdaTuple::induced(pt.m(), pt.n())), pt.s());
    std::string key;
    for (const auto &c : image) {
        if (!key.empty()) {
            key += ',';
        }
        if (!pt.char_equal()) {
            key += c.tag == CharTag::chi ? "chi:" : "mu:";
        }
        key += to_pq(c.exponent);
    }
    return key;
}

std::vector<Shuffle> orbit_brute_force(const Shuffle &w, const CriticalPoint &pt, std::span<const Shuffle> all)
{
    const std::string key = orbit_key(w, pt);
    std::vector<Shuffle> out;
    for (const auto &u : all) {
        if (orbit_key(u, pt) == key) {
            out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Shuffle> orbit_brute_force(const Shuffle &w, const CriticalPoint &pt, int cap)
{
    const auto all = enumerate_shuffles(pt.m(), pt.n(), cap);
    return orbit_brute_force(w, pt, all);
}

std::vector<std::vector<Shuffle>> orbit_partition(const CriticalPoint &pt, int cap)
{
    std::vector<std::vector<Shuffle>> orbits;
    std::unordered_map<std::string, std::size_t> index;
    for (auto &w : enumerate_shuffles(pt.m(), pt.n(), cap)) {
        auto [it, fresh] = index.try_emplace(orbit_key(w, pt), orbits.size());
        if (fresh) {
            orbits.emplace_back();
        }
        orbits[it->second].push_back(std::move(w));
    }
    return orbits;
}

namespace
{

bool block_in_range(const Shuffle &w, const ChangeInterval &iv, int offset)
{
    return iv.start >= 1 && iv.length >= 1 && iv.last() <= w.m() && offset + iv.start >= w.m() + 1 &&
           offset + iv.last() <= w.size();
}

// Partner side of the right end: the prefix ending at `last` can be swapped on its own.
bool right_end_holds(const Shuffle &w, int last, int offset)
{
    if (last + 1 <= w.m() && !(w(offset + last) < w(last + 1))) {
        return false;
    }
    if (offset + last + 1 <= w.size() && !(w(last) < w(offset + last + 1))) {
        return false;
    }
    return true;
}

bool left_end_holds(const Shuffle &w, int start, int offset)
{
    if (start > 1 && !(w(start - 1) < w(offset + start))) {
        return false;
    }
    if (offset + start - 1 >= w.m() + 1 && !(w(offset + start - 1) < w(start))) {
        return false;
    }
    return true;
}

} // namespace

bool satisfies_change_conditions(const Shuffle &w, const ChangeInterval &iv, int offset)
{
    return block_in_range(w, iv, offset) && left_end_holds(w, iv.start, offset) &&
           right_end_holds(w, iv.last(), offset);
}

bool satisfies_minimality(const Shuffle &w, const ChangeInterval &iv, int offset)
{
    for (int j = 0; j + 2 <= iv.length; ++j) {
        const int i = iv.start + j;
        if (!(w(offset + i) > w(i + 1) || w(i) > w(offset + i + 1))) {
            return false;
        }
    }
    return true;
}

Shuffle swap_blocks(const Shuffle &w, std::span<const ChangeInterval> blocks, int offset)
{
    auto images = w.one_based();
    for (const auto &iv : blocks) {
        if (!block_in_range(w, iv, offset)) {
            throw Error("change interval " + to_string(iv) + " out of range");
        }
        for (int i = iv.start; i <= iv.last(); ++i) {
            std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(offset + i - 1)]);
        }
    }
    return Shuffle(w.m(), w.n(), std::move(images));
}

std::vector<ChangeInterval> scan_intervals(const Shuffle &w, const CriticalPoint &pt)
{
    std::vector<ChangeInterval> out;
    if (!pt.char_equal()) {
        return out;
    }
    const int d = pt.partner_offset();
    const int limit = std::min(pt.m(), pt.alpha());
    int i = 1;
    while (i <= limit) {
        std::optional<ChangeInterval> found;
        if (left_end_holds(w, i, d)) {
            for (int k = 1; i + k - 1 <= limit; ++k) {
                if (right_end_holds(w, i + k - 1, d)) {
                    found = ChangeInterval{i, k};
                    break;
                }
            }
        }
        if (found) {
            out.push_back(*found);
            i += found->length;
        } else {
            ++i;
        }
    }
    return out;
}

IntervalDecomposition change_intervals(const Shuffle &w, const CriticalPoint &pt)
{
    const int d = pt.partner_offset();
    auto intervals = scan_intervals(w, pt);
    std::vector<ChangeInterval> flip;
    for (const auto &iv : intervals) {
        if (w(iv.start) > w(d + iv.start)) {
            flip.push_back(iv);
        }
    }
    Shuffle base = swap_blocks(w, flip, d);
    if (scan_intervals(base, pt) != intervals) {
        throw InvariantError("interval structure differs between " + format_images(w.one_based()) + " and " +
                             format_images(base.one_based()) + " at " + to_string(pt));
    }
    return {std::move(base), std::move(intervals)};
}

std::vector<Shuffle> constructive_orbit(const IntervalDecomposition &d, const CriticalPoint &pt)
{
    const std::size_t r = d.intervals.size();
    if (r > 24) {
        throw Error("too many change intervals: " + std::to_string(r));
    }
    std::vector<Shuffle> out;
    out.reserve(std::size_t{1} << r);
    std::vector<ChangeInterval> subset;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        subset.clear();
        for (std::size_t j = 0; j < r; ++j) {
            if (mask & (std::size_t{1} << j)) {
                subset.push_back(d.intervals[j]);
            }
        }
        out.push_back(swap_blocks(d.base, subset, pt.partner_offset()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

LaurentSeries orbit_sum(std::span<const Shuffle> members, const CriticalPoint &pt, int trunc)
{
    if (!pt.char_equal()) {
        throw ExpansionUnsupported("orbit sums are expanded for chi = mu only");
    }
    LaurentSeries sum = LaurentSeries::zero(trunc);
    for (const auto &w : members) {
        sum = sum + expand_at(r_inverse_telescoped(w), pt.s(), trunc);
    }
    if (sum.is_zero()) {
        throw TruncationTooSmall("orbit sum vanishes through t^" + std::to_string(trunc) + "; increase truncation");
    }
    return sum;
}

OrbitReport analyze_orbit(std::span<const Shuffle> members, const CriticalPoint &pt, int trunc)
{
    if (members.empty()) {
        throw Error("empty orbit");
    }
    OrbitReport report{members.front(), {}, {members.begin(), members.end()}, std::nullopt, {0, Certainty::certified},
                       orbit_key(members.front(), pt)};
    std::sort(report.members.begin(), report.members.end());
    if (!pt.char_equal()) {
        if (report.members.size() != 1) {
            throw InvariantError("orbit of size " + std::to_string(report.members.size()) + " with chi != mu");
        }
        return report;
    }
    auto d = change_intervals(report.members.front(), pt);
    auto built = constructive_orbit(d, pt);
    if (built != report.members) {
        throw InvariantError("constructive orbit of " + format_images(d.base.one_based()) + " differs from the " +
                             "brute-force orbit at " + to_string(pt));
    }
    report.base = std::move(d.base);
    report.intervals = std::move(d.intervals);
    constexpr int extra_rounds = 6;
    for (int round = 0;; ++round) {
        try {
            report.sum = orbit_sum(report.members, pt, trunc + round);
            break;
        } catch (const TruncationTooSmall &) {
            if (round == extra_rounds) {
                throw;
            }
        }
    }
    report.pole = report.sum->pole_order();
    return report;
}

std::vector<OrbitReport> orbit_reports(const CriticalPoint &pt, int trunc, int cap)
{
    std::vector<OrbitReport> out;
    for (const auto &members : orbit_partition(pt, cap)) {
        out.push_back(analyze_orbit(members, pt, trunc));
    }
    return out;
}

bool check_run_layout(const Shuffle &base, const ChangeInterval &iv, int offset)
{
    std::vector<std::pair<int, bool>> values; // (value, from partner block)
    for (int i = iv.start; i <= iv.last(); ++i) {
        values.emplace_back(base(i), false);
        values.emplace_back(base(offset + i), true);
    }
    std::sort(values.begin(), values.end());
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k].first != values[k - 1].first + 1) {
            return false;
        }
    }
    if (values.front().second || !values.back().second) {
        return false;
    }
    int first_count = 0, partner_count = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        (values[k].second ? partner_count : first_count) += 1;
        const bool run_ends = k + 1 == values.size() || values[k + 1].second != values[k].second;
        if (run_ends && values[k].second && k + 1 != values.size() && partner_count >= first_count) {
            return false;
        }
    }
    return true;
}

bool check_interval_poles(const Shuffle &base, const ChangeInterval &iv, const CriticalPoint &pt)
{
    if (pt.n() <= pt.alpha()) {
        throw Error("interval pole check needs n > alpha");
    }
    const Shuffle swapped = swap_blocks(base, std::span(&iv, 1), pt.partner_offset());
    const int shift = pt.n() - pt.alpha();
    struct Tally {
        int poles = 0;
        int where = 0;
        int arg = 0;
        std::vector<Rational> unit_bases;
    };
    auto tally = [&](const Shuffle &u) {
        Tally out;
        for (int i = iv.start; i <= iv.last(); ++i) {
            const int arg = shift + 2 * i - u(i);
            if (arg == 0 || arg == 1) {
                ++out.poles;
                out.where = i;
                out.arg = arg;
            } else {
                out.unit_bases.push_back(canonicalize_argument(Rational(arg)).base);
            }
        }
        std::sort(out.unit_bases.begin(), out.unit_bases.end());
        return out;
    };
    const Tally a = tally(base), b = tally(swapped);
    return a.poles == 1 && a.where == iv.start && a.arg == 1 && b.poles == 1 && b.where == iv.last() && b.arg == 0 &&
           a.unit_bases == b.unit_bases;
}

namespace
{

LFactor unit_shift(int constant)
{
    return {LChar::trivial, {Rational(1), Rational(constant)}};
}

// Expansion at t = 0 of the product of L(t + c) over the given constants.
LaurentSeries expand_constants(const std::vector<int> &num, const std::vector<int> &den, int trunc)
{
    ZetaProduct p;
    for (int c : num) {
        p.num.push_back(unit_shift(c));
    }
    for (int c : den) {
        p.den.push_back(unit_shift(c));
    }
    return expand_at(p, Rational(0), trunc);
}

// Evaluates build(inner) with inner raised until the result is known through t^trunc.
template <typename Build>
LaurentSeries with_enough_precision(int trunc, Build build)
{
    int inner = trunc;
    for (int round = 0; round < 16; ++round) {
        LaurentSeries out = build(inner);
        if (out.trunc() >= trunc) {
            return out.truncated(trunc);
        }
        inner += trunc - out.trunc();
    }
    throw Error("could not reach precision t^" + std::to_string(trunc));
}

LaurentSeries power(const LaurentSeries &x, int e)
{
    LaurentSeries out = LaurentSeries::one();
    for (int k = 0; k < e; ++k) {
        out = out * x;
    }
    return out;
}

} // namespace

LaurentSeries factored_orbit_sum(const IntervalDecomposition &d, const CriticalPoint &pt, int trunc)
{
    if (pt.n() <= pt.alpha()) {
        throw Error("factored orbit sum needs n > alpha");
    }
    const Shuffle &w = d.base;
    const int shift = pt.n() - pt.alpha();
    const int off = pt.partner_offset();
    std::vector<bool> covered(static_cast<std::size_t>(pt.m() + 1), false);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (const auto &iv : d.intervals) {
        auto &[a, b] = blocks.emplace_back();
        for (int i = iv.start; i <= iv.last(); ++i) {
            covered[static_cast<std::size_t>(i)] = true;
            a.push_back(shift + 2 * i - w(i));
            b.push_back(shift + 2 * i - w(off + i));
        }
    }
    std::vector<int> b1, den;
    for (int i = m_w(w); i <= pt.m(); ++i) {
        den.push_back(shift + i);
        if (!covered[static_cast<std::size_t>(i)]) {
            b1.push_back(shift + 2 * i - w(i));
        }
    }
    return with_enough_precision(trunc, [&](int inner) {
        LaurentSeries out = expand_constants(b1, den, inner);
        for (const auto &[a, b] : blocks) {
            out = out * (expand_constants(a, {}, inner) + expand_constants(b, {}, inner));
        }
        return out;
    });
}

ClosedFormCheck closed_form_check(const CriticalPoint &pt, int trunc)
{
    if (!pt.char_equal()) {
        throw Error("closed forms need chi = mu");
    }
    const int m = pt.m(), n = pt.n(), a = pt.alpha();
    ClosedFormCheck out{"", LaurentSeries::zero(trunc), LaurentSeries::zero(trunc), false};
    for (const auto &w : w_alpha_set(pt)) {
        out.direct = out.direct + expand_at(r_inverse_telescoped(w), pt.s(), trunc);
    }
    std::vector<int> a_args;
    for (int i = 1; i <= m; ++i) {
        a_args.push_back(n - a + i);
    }
    std::function<LaurentSeries(int)> build;
    if (n > a && m < a + 1) {
        out.case_name = "m < alpha+1 <= n: gamma^m / A";
        build = [&](int inner) { return power(gamma_series(inner), m) * expand_constants({}, a_args, inner); };
    } else if (n > a) {
        out.case_name = "alpha+1 <= m <= n: B * L(t+1) * gamma^alpha / A";
        std::vector<int> b_args{1};
        for (int i = 2; i <= m - a; ++i) {
            b_args.push_back(i);
        }
        build = [&, b_args](int inner) {
            return expand_constants(b_args, a_args, inner) * power(gamma_series(inner), a);
        };
    } else {
        out.case_name = "m = n = alpha: gamma^(m-1) / A1 * (1 + L(t)/L(-t))";
        std::vector<int> a1_args(a_args.begin() + 1, a_args.end());
        build = [&, a1_args](int inner) {
            const LaurentSeries ratio = LaurentSeries::one() + expand_constants({0}, {1}, inner);
            return power(gamma_series(inner), m - 1) * expand_constants({}, a1_args, inner) * ratio;
        };
    }
    out.closed = with_enough_precision(trunc, build);
    out.equal = out.direct == out.closed;
    return out;
}

} // namespace eisencalc
