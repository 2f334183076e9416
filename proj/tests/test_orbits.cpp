#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace testing_support;

namespace
{

// Orbits from the substituted exponent tuple lam[w^-1(i)], computed without the library's key.
std::vector<std::vector<Shuffle>> tuple_orbits(const CriticalPoint &pt)
{
    const int m = pt.m(), n = pt.n();
    std::vector<std::pair<bool, Rational>> base;
    for (int i = 1; i <= m; ++i) {
        base.emplace_back(true, (pt.s() - (m - 1)) / 2 + (i - 1));
    }
    for (int j = 1; j <= n; ++j) {
        base.emplace_back(false, (-pt.s() - (n - 1)) / 2 + (j - 1));
    }
    std::map<std::vector<std::pair<bool, Rational>>, std::vector<Shuffle>> groups;
    for (const auto &w : enumerate_shuffles(m, n)) {
        std::vector<std::pair<bool, Rational>> image(base.size());
        for (int i = 1; i <= m + n; ++i) {
            image[static_cast<std::size_t>(w(i) - 1)] = base[static_cast<std::size_t>(i - 1)];
        }
        if (pt.char_equal()) {
            for (auto &e : image) {
                e.first = true;
            }
        }
        groups[image].push_back(w);
    }
    std::vector<std::vector<Shuffle>> out;
    for (auto &[key, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return out;
}

std::vector<std::vector<Shuffle>> sorted_partition(const CriticalPoint &pt)
{
    auto parts = orbit_partition(pt);
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return parts;
}

LaurentSeries l_minus_t(int trunc)
{
    return expand(0, trunc).negate_variable();
}

} // namespace

TEST_SUITE("orbits")
{

TEST_CASE("brute-force orbit examples")
{
    const CriticalPoint pt(2, 2, 1);
    CHECK(orbit_brute_force(Shuffle::identity(2, 2), pt) == std::vector<Shuffle>{Shuffle::identity(2, 2)});
    CHECK(orbit_brute_force(sh(2, {3, 4, 1, 2}), pt) == std::vector<Shuffle>{sh(2, {2, 4, 1, 3}), sh(2, {3, 4, 1, 2})});
    const CriticalPoint apart(2, 2, 1, false);
    for (const auto &w : enumerate_shuffles(2, 2)) {
        CHECK(orbit_brute_force(w, apart) == std::vector<Shuffle>{w});
    }
}

TEST_CASE("partition matches the exponent-tuple oracle")
{
    for (const auto &pt : points_up_to(8)) {
        CHECK(sorted_partition(pt) == tuple_orbits(pt));
        const CriticalPoint apart(pt.m(), pt.n(), pt.alpha(), false);
        const auto parts = sorted_partition(apart);
        CHECK(parts == tuple_orbits(apart));
        CHECK(parts.size() == enumerate_shuffles(pt.m(), pt.n()).size());
    }
}

TEST_CASE("members share one image of Lambda_s")
{
    for (const auto &pt : points_up_to(7)) {
        const auto lam = LambdaTuple::induced(pt.m(), pt.n());
        for (const auto &orbit : orbit_partition(pt)) {
            const auto ref = substitute(apply_weyl(orbit.front(), lam), pt.s());
            for (const auto &w : orbit) {
                CHECK(same_at_point(substitute(apply_weyl(w, lam), pt.s()), ref, true));
                CHECK(orbit_key(w, pt) == orbit_key(orbit.front(), pt));
            }
        }
    }
}

TEST_CASE("change interval examples")
{
    const CriticalPoint pt(2, 2, 1);
    // The base has w(1) < w(4).
    const auto d = change_intervals(sh(2, {3, 4, 1, 2}), pt);
    CHECK(d.base == sh(2, {2, 4, 1, 3}));
    CHECK(d.intervals == std::vector<ChangeInterval>{{1, 1}});
    CHECK(change_intervals(sh(2, {2, 4, 1, 3}), pt).base == d.base);
    CHECK(swap_blocks(d.base, d.intervals, pt.partner_offset()) == sh(2, {3, 4, 1, 2}));
    CHECK(change_intervals(Shuffle::identity(2, 2), pt).intervals.empty());
    CHECK(to_string(ChangeInterval{2, 1}) == "{2}");
    CHECK(to_string(ChangeInterval{1, 3}) == "{1..3}");
}

TEST_CASE("distinguished elements carry singleton intervals")
{
    for (const auto &pt : points_up_to(9)) {
        if (pt.n() <= pt.alpha()) {
            continue;
        }
        const int top = std::min(pt.m(), pt.alpha() + 1);
        for (const auto &w : w_alpha_zero_set(pt)) {
            const auto d = change_intervals(w, pt);
            std::set<int> starts;
            for (const auto &iv : d.intervals) {
                if (iv.length == 1) {
                    starts.insert(iv.start);
                }
            }
            for (int i = 1; i < top; ++i) {
                CHECK(starts.count(i) == 1);
            }
        }
    }
}

TEST_CASE("interval decompositions")
{
    for (const auto &pt : points_up_to(8)) {
        const int d = pt.partner_offset();
        for (const auto &orbit : orbit_partition(pt)) {
            const auto dec = change_intervals(orbit.front(), pt);
            CHECK(std::binary_search(orbit.begin(), orbit.end(), dec.base));
            int last = 0;
            for (std::size_t j = 0; j < dec.intervals.size(); ++j) {
                const auto &iv = dec.intervals[j];
                CHECK(satisfies_change_conditions(dec.base, iv, d));
                CHECK(satisfies_minimality(dec.base, iv, d));
                CHECK(dec.base(iv.start) < dec.base(d + iv.start));
                CHECK(iv.start > last);
                if (j > 0) {
                    CHECK(iv.start == last + 1);
                }
                last = iv.last();
                CHECK(check_run_layout(dec.base, iv, d));
                if (pt.n() > pt.alpha()) {
                    CHECK(check_interval_poles(dec.base, iv, pt));
                }
            }
            for (const auto &w : orbit) {
                const auto other = change_intervals(w, pt);
                CHECK(other.base == dec.base);
                CHECK(other.intervals == dec.intervals);
            }
        }
    }
}

TEST_CASE("constructive orbits")
{
    for (const auto &pt : points_up_to(8)) {
        for (const auto &orbit : orbit_partition(pt)) {
            const auto dec = change_intervals(orbit.front(), pt);
            const auto built = constructive_orbit(dec, pt);
            CHECK(built == orbit);
            CHECK(built.size() == (std::size_t{1} << dec.intervals.size()));
        }
    }
}

TEST_CASE("orbit sum of w0 at m=n=2, alpha=1")
{
    const CriticalPoint pt(2, 2, 1);
    const auto members = orbit_brute_force(sh(2, {3, 4, 1, 2}), pt);
    const int trunc = 3;
    const auto sum = orbit_sum(members, pt, trunc);
    const auto expected = expand(1, trunc + 2) * gamma_series(trunc + 2) * (expand(2, trunc + 2) * expand(3, trunc + 2)).inverse();
    CHECK(sum.agrees_to(expected, trunc));
    CHECK(sum.pole_order() == PoleOrder{1, Certainty::certified});

    // Each member on its own.
    const auto a = expand(0, 5) * expand(1, 5) * (expand(2, 5) * expand(3, 5)).inverse();
    const auto b = expand(1, 5) * expand(1, 5) * (expand(2, 5) * expand(3, 5)).inverse();
    CHECK(sum.agrees_to(a + b, trunc));
}

TEST_CASE("orbit sum at m=n=alpha=1 vanishes")
{
    const CriticalPoint pt(1, 1, 1);
    const auto members = orbit_brute_force(Shuffle::identity(1, 1), pt);
    REQUIRE(members.size() == 2);
    const int trunc = 3;
    const auto sum = orbit_sum(members, pt, trunc);
    const auto expected = LaurentSeries::one() + expand(0, 6) * l_minus_t(6).inverse();
    CHECK(sum.agrees_to(expected, trunc));
    CHECK(sum.valuation() == 1);
    CHECK_THROWS_AS(orbit_sum(members, pt, 0), TruncationTooSmall);
}

TEST_CASE("factored sums")
{
    for (const auto &pt : points_up_to(7)) {
        if (pt.n() <= pt.alpha()) {
            continue;
        }
        const int trunc = default_truncation(pt);
        for (const auto &orbit : orbit_partition(pt)) {
            const auto dec = change_intervals(orbit.front(), pt);
            const auto direct = orbit_sum(orbit, pt, trunc);
            const auto factored = factored_orbit_sum(dec, pt, trunc);
            CHECK(direct.agrees_to(factored, trunc));
        }
    }
}

TEST_CASE("orbit-sum pole bounds")
{
    for (const auto &pt : points_up_to(7)) {
        for (const auto &r : orbit_reports(pt, default_truncation(pt))) {
            REQUIRE(r.sum);
            CHECK(r.pole.order <= 1);
            if (pt.n() > pt.alpha() && pt.alpha() + 1 > pt.m()) {
                CHECK(r.pole.order == 0);
            }
            if (pt.m() == pt.n() && pt.n() == pt.alpha() && r.members.size() > 1) {
                CHECK(r.sum->valuation() >= 1);
            }
        }
    }
}

TEST_CASE("distinct characters give singleton reports")
{
    const CriticalPoint pt(2, 3, 1, false);
    const auto reports = orbit_reports(pt, 3);
    CHECK(reports.size() == 10);
    for (const auto &r : reports) {
        CHECK(r.members.size() == 1);
        CHECK_FALSE(r.sum);
        CHECK(r.pole.order == 0);
        CHECK(r.key.find("chi:") != std::string::npos);
    }
}

TEST_CASE("closed form examples")
{
    const auto c221 = closed_form_check(CriticalPoint(2, 2, 1));
    CHECK(c221.equal);
    const auto w0 = expand(1, 4) * gamma_series(4) * (expand(2, 4) * expand(3, 4)).inverse();
    CHECK(c221.closed.agrees_to(w0, 2));

    const auto c132 = closed_form_check(CriticalPoint(1, 3, 2));
    CHECK(c132.equal);
    CHECK(c132.closed.agrees_to(gamma_series(4) * expand(2, 4).inverse(), 2));

    const auto c111 = closed_form_check(CriticalPoint(1, 1, 1));
    CHECK(c111.equal);
    CHECK(c111.closed.agrees_to(LaurentSeries::one() + expand(0, 5) * l_minus_t(5).inverse(), 2));
}

TEST_CASE("closed forms up to rank 7")
{
    std::set<std::string> cases;
    for (const auto &pt : points_up_to(7)) {
        const auto c = closed_form_check(pt);
        CHECK_MESSAGE(c.equal, to_string(pt));
        cases.insert(c.case_name);
    }
    CHECK(cases.size() >= 3);
}

}
