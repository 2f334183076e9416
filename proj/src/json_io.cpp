#include <eisencalc/json_io.hpp>

namespace eisencalc
{

namespace
{

Certainty parse_certainty(const std::string &text)
{
    if (text == "CERTIFIED") {
        return Certainty::certified;
    }
    if (text == "SYMBOLIC") {
        return Certainty::symbolic;
    }
    throw Error("unknown certainty: " + text);
}

std::vector<Shuffle> shuffles_from_json(const Json &j, int m)
{
    std::vector<Shuffle> out;
    for (const auto &w : j) {
        out.push_back(shuffle_from_json(w, m));
    }
    return out;
}

Json shuffles_to_json(const std::vector<Shuffle> &ws)
{
    Json out = Json::array();
    for (const auto &w : ws) {
        out.push_back(to_json(w));
    }
    return out;
}

} // namespace

Json to_json(const Shuffle &w)
{
    return Json(w.one_based());
}

Shuffle shuffle_from_json(const Json &j, int m)
{
    const auto images = j.get<std::vector<int>>();
    return Shuffle(m, static_cast<int>(images.size()) - m, images);
}

Json to_json(const LambdaTuple &lam)
{
    Json out = Json::array();
    for (const auto &c : lam.entries()) {
        out.push_back({{"tag", c.tag == CharTag::chi ? "CHI" : "MU"},
                       {"s_coeff", to_pq(c.exponent.s_coeff)},
                       {"const", to_pq(c.exponent.constant)}});
    }
    return out;
}

LambdaTuple lambda_from_json(const Json &j)
{
    std::vector<Character> entries;
    for (const auto &e : j) {
        const auto tag = e.at("tag").get<std::string>();
        if (tag != "CHI" && tag != "MU") {
            throw Error("unknown character tag: " + tag);
        }
        entries.push_back({tag == "CHI" ? CharTag::chi : CharTag::mu,
                           {parse_rational(e.at("s_coeff").get<std::string>()),
                            parse_rational(e.at("const").get<std::string>())}});
    }
    return LambdaTuple(std::move(entries));
}

Json to_json(const LaurentSeries &x)
{
    Json coeffs = Json::array();
    if (!x.is_zero()) {
        for (int d = x.valuation(); d <= x.top_degree(); ++d) {
            const auto c = x.coeff(d);
            coeffs.push_back({{"num", c.num().str()}, {"den", c.den().str()}});
        }
    }
    Json out;
    out["valuation"] = x.is_zero() ? Json(nullptr) : Json(x.valuation());
    out["coeffs"] = std::move(coeffs);
    out["trunc"] = x.is_exact() ? Json(nullptr) : Json(x.trunc());
    return out;
}

LaurentSeries series_from_json(const Json &j)
{
    const int trunc = j.at("trunc").is_null() ? LaurentSeries::exact : j.at("trunc").get<int>();
    if (j.at("valuation").is_null()) {
        return LaurentSeries::zero(trunc);
    }
    std::vector<SymbolFraction> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.emplace_back(parse_polynomial(c.at("num").get<std::string>()),
                            parse_polynomial(c.at("den").get<std::string>()));
    }
    const int valuation = j.at("valuation").get<int>();
    if (trunc != LaurentSeries::exact) {
        // Trailing zeros up to the truncation are implicit in the stored form.
        coeffs.resize(static_cast<std::size_t>(trunc - valuation + 1));
    }
    return LaurentSeries::from_coeffs(valuation, std::move(coeffs), trunc);
}

Json to_json(const ZetaProduct &p)
{
    auto side = [](const std::vector<LFactor> &fs) {
        Json out = Json::array();
        for (const auto &f : fs) {
            out.push_back({{"arg", to_string(f.argument)},
                           {"char", f.character == LChar::trivial ? "trivial" : "nontrivial"}});
        }
        return out;
    };
    Json out;
    out["num"] = side(p.num);
    out["den"] = side(p.den);
    out["point"] = p.point ? Json(to_pq(*p.point)) : Json(nullptr);
    return out;
}

ZetaProduct product_from_json(const Json &j)
{
    auto side = [](const Json &arr) {
        std::vector<LFactor> out;
        for (const auto &f : arr) {
            const auto ch = f.at("char").get<std::string>();
            if (ch != "trivial" && ch != "nontrivial") {
                throw Error("unknown L-character: " + ch);
            }
            out.push_back({ch == "trivial" ? LChar::trivial : LChar::nontrivial,
                           parse_affine(f.at("arg").get<std::string>())});
        }
        return out;
    };
    ZetaProduct p;
    p.num = side(j.at("num"));
    p.den = side(j.at("den"));
    if (!j.at("point").is_null()) {
        p.point = parse_rational(j.at("point").get<std::string>());
    }
    return p;
}

Json to_json(const CriticalPoint &pt)
{
    return {{"m", pt.m()}, {"n", pt.n()}, {"alpha", pt.alpha()}, {"char_equal", pt.char_equal()}, {"s", to_pq(pt.s())}};
}

CriticalPoint point_from_json(const Json &j)
{
    return CriticalPoint(j.at("m").get<int>(), j.at("n").get<int>(), j.at("alpha").get<int>(),
                         j.at("char_equal").get<bool>());
}

Json to_json(const ChangeInterval &iv)
{
    return {{"start", iv.start}, {"len", iv.length}};
}

ChangeInterval interval_from_json(const Json &j)
{
    return {j.at("start").get<int>(), j.at("len").get<int>()};
}

Json to_json(const OrbitReport &r)
{
    Json intervals = Json::array();
    for (const auto &iv : r.intervals) {
        intervals.push_back(to_json(iv));
    }
    Json out;
    out["m"] = r.base.m();
    out["n"] = r.base.n();
    out["base"] = to_json(r.base);
    out["intervals"] = std::move(intervals);
    out["members"] = shuffles_to_json(r.members);
    out["sum"] = r.sum ? to_json(*r.sum) : Json(nullptr);
    out["pole"] = {{"order", r.pole.order}, {"certainty", to_string(r.pole.certainty)}};
    out["key"] = r.key;
    return out;
}

OrbitReport orbit_from_json(const Json &j)
{
    const int m = j.at("m").get<int>();
    OrbitReport r{shuffle_from_json(j.at("base"), m),
                  {},
                  shuffles_from_json(j.at("members"), m),
                  std::nullopt,
                  {j.at("pole").at("order").get<int>(), parse_certainty(j.at("pole").at("certainty").get<std::string>())},
                  j.at("key").get<std::string>()};
    for (const auto &iv : j.at("intervals")) {
        r.intervals.push_back(interval_from_json(iv));
    }
    if (!j.at("sum").is_null()) {
        r.sum = series_from_json(j.at("sum"));
    }
    return r;
}

Json to_json(const Classification &c)
{
    Json witnesses = Json::array();
    for (const auto &w : c.witnesses) {
        witnesses.push_back(to_json(w));
    }
    Json out;
    out["m"] = c.m;
    out["n"] = c.n;
    out["s"] = to_pq(c.s);
    out["alpha"] = c.alpha ? Json(*c.alpha) : Json(nullptr);
    out["char_equal"] = c.char_equal;
    out["verdict"] = to_string(c.verdict);
    out["max_order"] = c.max_order;
    out["witnesses"] = std::move(witnesses);
    out["annotations"] = c.annotations;
    return out;
}

Classification classification_from_json(const Json &j)
{
    Classification c;
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    c.s = parse_rational(j.at("s").get<std::string>());
    if (!j.at("alpha").is_null()) {
        c.alpha = j.at("alpha").get<int>();
    }
    c.char_equal = j.at("char_equal").get<bool>();
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.max_order = j.at("max_order").get<int>();
    for (const auto &w : j.at("witnesses")) {
        c.witnesses.push_back(orbit_from_json(w));
    }
    c.annotations = j.at("annotations").get<std::vector<std::string>>();
    return c;
}

Json to_json(const ConstantTermReport &r)
{
    Json orbits = Json::array();
    for (const auto &o : r.orbits) {
        Json row = to_json(o);
        row["operator"] = operator_label(o);
        orbits.push_back(std::move(row));
    }
    return {{"classification", to_json(r.classification)}, {"orbits", std::move(orbits)}};
}

} // namespace eisencalc
