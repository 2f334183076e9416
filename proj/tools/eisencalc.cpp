// eisencalc: constant terms of degenerate Eisenstein series on GL(m+n).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <eisencalc/json_io.hpp>
#include <eisencalc/verify.hpp>

using namespace eisencalc;

namespace
{

class UsageError : public Error
{
public:
    using Error::Error;
};

struct RunConfig {
    int m = 1;
    int n = 1;
    std::optional<int> alpha;
    std::string s_text;
    bool chi_ne_mu = false;
    int trunc = 0;
    int cap = default_enumeration_cap;
    std::string format = "text";
    std::string w_text;
    int max_rank = 8;
    bool no_header = false;
    bool serial = false;

    bool json() const
    {
        return format == "json";
    }
    bool char_equal() const
    {
        return !chi_ne_mu;
    }
    Execution execution() const
    {
        return serial ? Execution::serial : Execution::parallel;
    }
    std::optional<Rational> s() const
    {
        if (alpha) {
            return ratio(m + n, 2) - *alpha;
        }
        if (!s_text.empty()) {
            return parse_rational(s_text);
        }
        return std::nullopt;
    }
    void check_blocks() const
    {
        if (m < 1 || n < 1) {
            throw UsageError("m and n must be positive");
        }
        if (m > n) {
            throw UsageError("m <= n is required (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
        }
    }
    CriticalPoint point() const
    {
        check_blocks();
        std::optional<int> a = alpha;
        if (!a && !s_text.empty()) {
            a = critical_alpha(m, n, parse_rational(s_text));
            if (!a) {
                throw UsageError("s=" + s_text + " is not a critical point for m=" + std::to_string(m) +
                                 ", n=" + std::to_string(n));
            }
        }
        if (!a) {
            throw UsageError("--alpha or --s is required");
        }
        try {
            return CriticalPoint(m, n, *a, char_equal());
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    }
    int truncation(const CriticalPoint &pt) const
    {
        return trunc > 0 ? trunc : default_truncation(pt);
    }
    Shuffle shuffle() const
    {
        if (w_text.empty()) {
            throw UsageError("--w is required");
        }
        try {
            return Shuffle(m, n, parse_images(w_text));
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    }
};

void print(const RunConfig &cfg, const Json &j, const std::string &text)
{
    if (cfg.json()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string orbit_text(const OrbitReport &r)
{
    std::string out = "orbit base " + format_images(r.base.one_based()) + ", intervals";
    if (r.intervals.empty()) {
        out += " none";
    }
    for (const auto &iv : r.intervals) {
        out += " " + to_string(iv);
    }
    out += ", " + std::to_string(r.members.size()) + " member(s):";
    for (const auto &w : r.members) {
        out += " [" + format_images(w.one_based()) + "]";
    }
    out += "\n";
    if (r.sum) {
        out += "  sum = " + r.sum->str() + "\n  pole order " + std::to_string(r.pole.order) + " " +
               to_string(r.pole.certainty) + "\n";
    }
    return out;
}

int cmd_shuffles(const RunConfig &cfg)
{
    cfg.check_blocks();
    const auto all = enumerate_shuffles(cfg.m, cfg.n, cfg.cap);
    Json list = Json::array();
    std::string text;
    for (const auto &w : all) {
        list.push_back(to_json(w));
        text += format_images(w.one_based()) + "\n";
    }
    text += "count " + std::to_string(all.size()) + "\n";
    print(cfg, {{"m", cfg.m}, {"n", cfg.n}, {"count", all.size()}, {"shuffles", list}}, text);
    return 0;
}

int cmd_factor(const RunConfig &cfg)
{
    cfg.check_blocks();
    const Shuffle w = cfg.shuffle();
    const auto root = r_inverse_root_product(w, cfg.char_equal()).reduce();
    const auto tele = r_inverse_telescoped(w, cfg.char_equal());
    const bool equal = root == tele.reduce();
    Json j{{"w", to_json(w)}, {"root_product", to_json(root)}, {"telescoped", to_json(tele)}, {"equal", equal}};
    std::string text = "root product: " + to_string(root) + "\ntelescoped:   " + to_string(tele) +
                       "\nequal after reduction: " + (equal ? "yes" : "no") + "\n";
    if (cfg.s()) {
        const CriticalPoint pt = cfg.point();
        const int counted = pole_order_at(w, pt);
        j["point"] = to_json(pt);
        j["pole_order"] = counted;
        text += "pole order at " + to_string(pt) + ": " + std::to_string(counted) + "\n";
        if (pt.char_equal()) {
            const auto series = expand_at(tele, pt.s(), cfg.truncation(pt));
            j["expansion"] = to_json(series);
            text += "expansion: " + series.str() + "\n";
            if (!series.is_zero() && -series.valuation() != counted) {
                throw InvariantError("counted pole order " + std::to_string(counted) +
                                     " differs from the expansion");
            }
        }
    }
    print(cfg, j, text);
    if (!equal) {
        throw InvariantError("root-product and telescoped forms differ for " + format_images(w.one_based()));
    }
    return 0;
}

int cmd_orbits(const RunConfig &cfg, bool with_sums)
{
    const CriticalPoint pt = cfg.point();
    std::vector<OrbitReport> reports;
    if (!cfg.w_text.empty()) {
        const auto members = orbit_brute_force(cfg.shuffle(), pt, cfg.cap);
        reports.push_back(analyze_orbit(members, pt, cfg.truncation(pt)));
    } else {
        reports = orbit_cell(pt, cfg.truncation(pt), cfg.execution(), cfg.cap);
    }
    Json list = Json::array();
    std::string text = to_string(pt) + "\n";
    for (auto &r : reports) {
        if (!with_sums) {
            r.sum.reset();
        }
        list.push_back(to_json(r));
        text += orbit_text(r);
    }
    print(cfg, {{"point", to_json(pt)}, {"orbits", list}}, text);
    return 0;
}

int cmd_closed_form(const RunConfig &cfg)
{
    const CriticalPoint pt = cfg.point();
    if (!pt.char_equal()) {
        throw UsageError("closed forms need chi = mu");
    }
    const auto check = closed_form_check(pt, cfg.trunc > 0 ? cfg.trunc : 2);
    print(cfg,
          {{"point", to_json(pt)},
           {"case", check.case_name},
           {"direct", to_json(check.direct)},
           {"closed", to_json(check.closed)},
           {"equal", check.equal}},
          to_string(pt) + "\ncase " + check.case_name + "\ndirect: " + check.direct.str() +
              "\nclosed: " + check.closed.str() + "\nequal: " + (check.equal ? "yes" : "no") + "\n");
    if (!check.equal) {
        throw InvariantError("closed form differs from the direct sum at " + to_string(pt));
    }
    return 0;
}

int cmd_classify(const RunConfig &cfg)
{
    cfg.check_blocks();
    const auto s = cfg.s();
    if (!s) {
        throw UsageError("--alpha or --s is required");
    }
    Classification c;
    if (cfg.alpha) {
        c = classify(cfg.point(), cfg.trunc, cfg.execution());
    } else {
        try {
            c = classify_at(cfg.m, cfg.n, *s, cfg.char_equal(), cfg.trunc, cfg.execution());
        } catch (const InvariantError &) {
            throw;
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    }
    std::string text = "verdict " + std::string(to_string(c.verdict)) + "\n";
    for (const auto &w : c.witnesses) {
        text += "witness";
        for (const auto &u : w.members) {
            text += " [" + format_images(u.one_based()) + "]";
        }
        text += "\n";
    }
    for (const auto &a : c.annotations) {
        text += "note: " + a + "\n";
    }
    print(cfg, to_json(c), text);
    return 0;
}

int cmd_report(const RunConfig &cfg)
{
    const auto report = constant_term_report(cfg.point(), cfg.trunc, cfg.execution());
    print(cfg, to_json(report), render_markdown(report));
    return 0;
}

int cmd_verify(const RunConfig &cfg)
{
    if (cfg.max_rank < 2 || cfg.max_rank > 22) {
        throw UsageError("--max-rank must lie in [2, 22]");
    }
    VerifyOptions opts;
    opts.max_rank = cfg.max_rank;
    opts.execution = cfg.execution();
    const auto results = run_verification(opts);
    bool ok = true;
    Json list = Json::array();
    for (const auto &r : results) {
        ok = ok && r.passed;
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    print(cfg, {{"max_rank", cfg.max_rank}, {"criteria", list}}, render_verification(results, !cfg.no_header));
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Constant terms, pole orders and orbit sums of degenerate Eisenstein series on GL(m+n)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto blocks = [&](CLI::App *sub) {
        sub->add_option("m", cfg.m, "size of the first block")->required();
        sub->add_option("n", cfg.n, "size of the second block")->required();
        sub->add_option("--cap", cfg.cap, "largest m+n to enumerate")->check(CLI::Range(2, 40));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto point = [&](CLI::App *sub, bool required) {
        auto *a = sub->add_option("--alpha", cfg.alpha, "critical point s = (m+n)/2 - alpha");
        auto *s = sub->add_option("--s", cfg.s_text, "point s as p/q");
        a->excludes(s);
        if (required) {
            sub->require_option(1, 2);
        }
        sub->add_flag("--chi-ne-mu", cfg.chi_ne_mu, "characters differ (chi != mu)");
        sub->add_option("--trunc", cfg.trunc, "truncation degree (default max(2, b_alpha) + 1)")
            ->check(CLI::Range(1, 60));
        sub->add_flag("--serial", cfg.serial, "use the serial kernels");
    };

    auto *shuffles = app.add_subcommand("shuffles", "enumerate the shuffles of (m, n)");
    blocks(shuffles);
    auto *factor = app.add_subcommand("factor", "both forms of r^-1 for --w, with its pole order");
    blocks(factor);
    point(factor, false);
    factor->add_option("--w", cfg.w_text, "shuffle as comma-separated images")->required();
    auto *orbits = app.add_subcommand("orbits", "orbit partition with change intervals");
    blocks(orbits);
    point(orbits, false);
    orbits->add_option("--w", cfg.w_text, "only the orbit of this shuffle");
    auto *sum = app.add_subcommand("sum", "orbit sums as Laurent series");
    blocks(sum);
    point(sum, false);
    sum->add_option("--w", cfg.w_text, "only the orbit of this shuffle");
    auto *closed = app.add_subcommand("closed-form", "sum over W_alpha against its closed form");
    blocks(closed);
    point(closed, false);
    auto *cls = app.add_subcommand("classify", "pole verdict for the Eisenstein series");
    blocks(cls);
    point(cls, false);
    auto *report = app.add_subcommand("report", "constant-term table, one row per orbit");
    blocks(report);
    point(report, false);
    auto *verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--max-rank", cfg.max_rank, "largest m+n in the grid");
    verify->add_flag("--no-header", cfg.no_header, "omit the timestamp header");
    verify->add_flag("--serial", cfg.serial, "use the serial kernels");
    verify->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*shuffles) {
            return cmd_shuffles(cfg);
        }
        if (*factor) {
            return cmd_factor(cfg);
        }
        if (*orbits) {
            return cmd_orbits(cfg, false);
        }
        if (*sum) {
            return cmd_orbits(cfg, true);
        }
        if (*closed) {
            return cmd_closed_form(cfg);
        }
        if (*cls) {
            return cmd_classify(cfg);
        }
        if (*report) {
            return cmd_report(cfg);
        }
        return cmd_verify(cfg);
    } catch (const InvariantError &e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
