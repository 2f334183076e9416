#include <eisencalc/classify.hpp>

#include <algorithm>
#include <array>

namespace eisencalc
{

namespace
{

constexpr std::array<std::pair<Verdict, const char *>, 4> verdict_names{{
    {Verdict::holomorphic_nonzero, "HOLOMORPHIC_NONZERO"},
    {Verdict::at_most_simple_pole_realized, "AT_MOST_SIMPLE_POLE_REALIZED"},
    {Verdict::at_most_simple_pole_not_realized, "AT_MOST_SIMPLE_POLE_NOT_REALIZED"},
    {Verdict::holomorphic_by_case1, "HOLOMORPHIC_BY_CASE1"},
}};

std::string intervals_text(const std::vector<ChangeInterval> &ivs)
{
    if (ivs.empty()) {
        return "-";
    }
    std::string out;
    for (const auto &iv : ivs) {
        out += (out.empty() ? "" : " ") + to_string(iv);
    }
    return out;
}

Classification case1(int m, int n, const Rational &s, std::optional<int> alpha)
{
    Classification c{m, n, s, alpha, false, Verdict::holomorphic_by_case1, 0, {}, {}};
    c.annotations.push_back(epsilon_assumption);
    c.annotations.push_back("unverified: the archimedean factor is holomorphic if chi_inf*mu_inf^-1 is not a sign "
                            "character, or if alpha <= m; that analysis is outside this engine");
    return c;
}

} // namespace

const char *to_string(Verdict v)
{
    for (const auto &[verdict, name] : verdict_names) {
        if (verdict == v) {
            return name;
        }
    }
    return "?";
}

Verdict parse_verdict(const std::string &text)
{
    for (const auto &[verdict, name] : verdict_names) {
        if (text == name) {
            return verdict;
        }
    }
    throw Error("unknown verdict: " + text);
}

std::optional<int> critical_alpha(int m, int n, const Rational &s)
{
    const Rational a = ratio(m + n, 2) - s;
    if (!is_integer(a) || a < 0 || 2 * a > m + n) {
        return std::nullopt;
    }
    return static_cast<int>(to_long(a));
}

Classification classify(const CriticalPoint &pt, int trunc, Execution ex)
{
    return constant_term_report(pt, trunc, ex).classification;
}

ConstantTermReport constant_term_report(const CriticalPoint &pt, int trunc, Execution ex)
{
    const int m = pt.m(), n = pt.n(), a = pt.alpha();
    if (trunc <= 0) {
        trunc = default_truncation(pt);
    }
    ConstantTermReport report;
    if (!pt.char_equal()) {
        for (const auto &check : pole_cell(pt, ex)) {
            if (check.counted != 0 || check.expanded != 0) {
                throw InvariantError("pole for chi != mu at " + format_images(check.images));
            }
        }
        report.classification = case1(m, n, pt.s(), a);
        report.orbits = orbit_cell(pt, trunc, ex);
        return report;
    }
    report.orbits = orbit_cell(pt, trunc, ex);
    Classification &c = report.classification;
    c = Classification{m, n, pt.s(), a, true, Verdict::at_most_simple_pole_not_realized, 0, {}, {}};
    for (const auto &orbit : report.orbits) {
        c.max_order = std::max(c.max_order, orbit.pole.order);
    }
    if (c.max_order > 1) {
        throw InvariantError("orbit sum with pole of order " + std::to_string(c.max_order) + " at " + to_string(pt));
    }
    if (c.max_order == 1) {
        c.verdict = Verdict::at_most_simple_pole_realized;
        for (const auto &orbit : report.orbits) {
            if (orbit.pole.order == 1) {
                c.witnesses.push_back(orbit);
            }
        }
    }
    c.annotations.push_back(epsilon_assumption);
    const bool expected_pole = a <= m - 1;
    if (c.verdict == Verdict::at_most_simple_pole_realized && a == 0) {
        c.annotations.push_back("alpha=0 discrepancy: the stated pole range 1 <= alpha <= m-1 excludes alpha = 0, "
                                "but the computed constant term has a simple pole here");
    } else if ((c.verdict == Verdict::at_most_simple_pole_realized) != expected_pole) {
        c.annotations.push_back("computed verdict departs from the stated pole range 1 <= alpha <= m-1");
    }
    if (pt.at_zero()) {
        c.annotations.push_back("s = 0 lies outside the critical set 0 <= alpha < (m+n)/2");
    }
    const Shuffle w0 = longest_shuffle(m, n);
    for (const auto &w : c.witnesses) {
        if (std::find(w.members.begin(), w.members.end(), w0) != w.members.end()) {
            c.annotations.push_back("the orbit of w0 = " + format_images(w0.one_based()) + " carries a simple pole");
        }
    }
    return report;
}

Classification classify_at(int m, int n, const Rational &s, bool char_equal, int trunc, Execution ex)
{
    if (m > n) {
        throw Error("classification assumes m <= n");
    }
    if (auto a = critical_alpha(m, n, s)) {
        return classify(CriticalPoint(m, n, *a, char_equal), trunc, ex);
    }
    if (s <= 0) {
        throw Error("non-critical points must have s > 0 (got s=" + to_short(s) + ")");
    }
    if (!char_equal) {
        return case1(m, n, s, std::nullopt);
    }
    for (const auto &w : enumerate_shuffles(m, n)) {
        const int order = r_inverse_telescoped(w).at(s).pole_order();
        if (order != 0) {
            throw InvariantError("normalizing factor of " + format_images(w.one_based()) + " has order " +
                                 std::to_string(order) + " at non-critical s=" + to_short(s));
        }
    }
    Classification c{m, n, s, std::nullopt, true, Verdict::holomorphic_nonzero, 0, {}, {}};
    c.annotations.push_back(epsilon_assumption);
    return c;
}

std::string operator_label(const OrbitReport &orbit)
{
    return "N(Lambda_s, w~)[" + orbit.key + "]";
}

std::string render_markdown(const ConstantTermReport &report)
{
    const auto &c = report.classification;
    std::string out = "# Constant term, m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
                      (c.alpha ? " alpha=" + std::to_string(*c.alpha) : "") + " s=" + to_short(c.s) +
                      (c.char_equal ? " (chi = mu)" : " (chi != mu)") + "\n\n";
    out += "verdict: " + std::string(to_string(c.verdict)) + "\n";
    for (const auto &note : c.annotations) {
        out += "- " + note + "\n";
    }
    out += "\n| base | members | intervals | orbit sum | pole | operator |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const auto &orbit : report.orbits) {
        out += "| " + format_images(orbit.base.one_based()) + " | " + std::to_string(orbit.members.size()) + " | " +
               intervals_text(orbit.intervals) + " | " + (orbit.sum ? orbit.sum->str() : "not expanded") + " | " +
               std::to_string(orbit.pole.order) + " " + to_string(orbit.pole.certainty) + " | " +
               operator_label(orbit) + " |\n";
    }
    return out;
}

} // namespace eisencalc
