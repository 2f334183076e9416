#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <eisencalc/json_io.hpp>

namespace
{

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(EISENCALC_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string &text, const std::string &needle)
{
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli")
{

TEST_CASE("shuffles")
{
    const auto r = run("shuffles 2 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3,4,1,2\n"));
    CHECK(contains(r.out, "count 6"));
    const auto j = eisencalc::Json::parse(run("shuffles 1 2 --format json").out);
    CHECK(j["count"] == 3);
    CHECK(j["shuffles"][2].dump() == "[3,1,2]");
}

TEST_CASE("factor")
{
    const auto r = run("factor 2 2 --alpha 1 --w 3,4,1,2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pole order at m=2 n=2 alpha=1 s=1 chi=mu: 2"));
    CHECK(contains(r.out, "equal after reduction: yes"));
    const auto j = eisencalc::Json::parse(run("factor 2 2 --alpha 1 --w 3,4,1,2 --format json").out);
    CHECK(j["pole_order"] == 2);
    CHECK(j["equal"] == true);
    CHECK(j["expansion"]["valuation"] == -2);
}

TEST_CASE("classify")
{
    const auto r = run("classify 1 1 --alpha 0");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict AT_MOST_SIMPLE_POLE_REALIZED"));
    CHECK(contains(r.out, "witness [2,1]"));
    const auto j = eisencalc::Json::parse(run("classify 2 3 --s 7/3 --format json").out);
    CHECK(j["verdict"] == "HOLOMORPHIC_NONZERO");
    CHECK(j["s"] == "7/3");
    CHECK(run("classify 2 2 --s 1").out == run("classify 2 2 --alpha 1").out);
    CHECK(contains(run("classify 2 3 --alpha 1 --chi-ne-mu").out, "HOLOMORPHIC_BY_CASE1"));
}

TEST_CASE("orbits, sums, closed forms and reports")
{
    const auto orbits = run("orbits 2 2 --alpha 1");
    CHECK(orbits.code == 0);
    CHECK(contains(orbits.out, "orbit base 2,4,1,3, intervals {1}, 2 member(s): [2,4,1,3] [3,4,1,2]"));
    CHECK_FALSE(contains(orbits.out, "sum ="));
    const auto sum = run("sum 2 2 --alpha 1 --w 3,4,1,2");
    CHECK(sum.code == 0);
    CHECK(contains(sum.out, "pole order 1 CERTIFIED"));
    const auto closed = run("closed-form 2 3 --alpha 1");
    CHECK(closed.code == 0);
    CHECK(contains(closed.out, "equal: yes"));
    const auto report = run("report 1 1 --alpha 0");
    CHECK(report.code == 0);
    CHECK(contains(report.out, "| base | members |"));
    const auto j = eisencalc::Json::parse(run("report 2 2 --alpha 1 --format json").out);
    CHECK(j["orbits"].size() == 5);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run("classify 3 2 --alpha 0").code == 2);
    CHECK(run("classify 2 3 --alpha 4").code == 2);
    CHECK(run("classify 2 3 --alpha 1 --s 3/2").code == 2);
    CHECK(run("orbits 2 3 --s 1").code == 2);
    CHECK(run("factor 2 2 --alpha 1 --w 4,3,1,2").code == 2);
    CHECK(run("factor 2 2 --alpha 1").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("shuffles 12 12").code == 2);
    CHECK(run("shuffles 2 2 --format yaml").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("verify is deterministic")
{
    const auto a = run("verify --max-rank 5 --no-header");
    const auto b = run("verify --max-rank 5 --no-header --serial");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "PASS 1 telescoping oracle"));
    CHECK_FALSE(contains(a.out, "FAIL"));
    const auto h = run("verify --max-rank 4");
    CHECK(h.out.rfind("# eisencalc verify ", 0) == 0);
}

}
