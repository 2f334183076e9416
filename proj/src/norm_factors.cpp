#include <eisencalc/norm_factors.hpp>

#include <algorithm>
#include <tuple>

namespace eisencalc
{

namespace
{

// Cancellation key of a factor; see ZetaProduct::reduce.
std::tuple<LChar, AffineExponent> cancel_key(const LFactor &f)
{
    if (!f.substituted() || f.character != LChar::trivial) {
        return {f.character, f.argument};
    }
    const Rational x = f.value();
    if (x == 0 || x == 1) {
        return {f.character, f.argument};
    }
    return {f.character, {Rational(0), canonicalize_argument(x).base}};
}

} // namespace

ZetaProduct ZetaProduct::reduce() const
{
    ZetaProduct out;
    out.point = point;
    auto by_key = [](const LFactor &a, const LFactor &b) {
        auto ka = cancel_key(a), kb = cancel_key(b);
        if (ka != kb) {
            return ka < kb;
        }
        return a < b;
    };
    auto num_sorted = num, den_sorted = den;
    std::sort(num_sorted.begin(), num_sorted.end(), by_key);
    std::sort(den_sorted.begin(), den_sorted.end(), by_key);
    auto i = num_sorted.begin(), j = den_sorted.begin();
    while (i != num_sorted.end() && j != den_sorted.end()) {
        auto ki = cancel_key(*i), kj = cancel_key(*j);
        if (ki < kj) {
            out.num.push_back(*i++);
        } else if (kj < ki) {
            out.den.push_back(*j++);
        } else {
            ++i;
            ++j;
        }
    }
    out.num.insert(out.num.end(), i, num_sorted.end());
    out.den.insert(out.den.end(), j, den_sorted.end());
    std::sort(out.num.begin(), out.num.end());
    std::sort(out.den.begin(), out.den.end());
    return out;
}

ZetaProduct ZetaProduct::at(const Rational &s) const
{
    ZetaProduct out;
    out.point = s;
    for (const auto &f : num) {
        out.num.push_back(f.at(s));
    }
    for (const auto &f : den) {
        out.den.push_back(f.at(s));
    }
    return out;
}

int ZetaProduct::pole_order() const
{
    int order = 0;
    for (const auto &f : num) {
        order -= order_at(f).order;
    }
    for (const auto &f : den) {
        order += order_at(f).order;
    }
    return order;
}

bool operator==(const ZetaProduct &a, const ZetaProduct &b)
{
    if (a.point != b.point || a.num.size() != b.num.size() || a.den.size() != b.den.size()) {
        return false;
    }
    auto an = a.num, bn = b.num, ad = a.den, bd = b.den;
    std::sort(an.begin(), an.end());
    std::sort(bn.begin(), bn.end());
    std::sort(ad.begin(), ad.end());
    std::sort(bd.begin(), bd.end());
    return an == bn && ad == bd;
}

std::string to_string(const ZetaProduct &p)
{
    auto side = [](const std::vector<LFactor> &fs) {
        if (fs.empty()) {
            return std::string("1");
        }
        std::string out;
        for (const auto &f : fs) {
            out += (out.empty() ? "" : "*") + to_string(f);
        }
        return out;
    };
    if (p.den.empty()) {
        return side(p.num);
    }
    return side(p.num) + " / " + side(p.den);
}

CriticalPoint::CriticalPoint(int m, int n, int alpha, bool char_equal) : m_(m), n_(n), alpha_(alpha), char_equal_(char_equal)
{
    if (m < 1 || n < 1) {
        throw Error("block sizes must be positive");
    }
    if (m > n) {
        throw Error("critical points assume m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
    if (alpha < 0 || 2 * alpha > m + n) {
        throw Error("alpha must lie in [0, floor((m+n)/2)] (got " + std::to_string(alpha) + ")");
    }
}

std::string to_string(const CriticalPoint &pt)
{
    return "m=" + std::to_string(pt.m()) + " n=" + std::to_string(pt.n()) + " alpha=" + std::to_string(pt.alpha()) +
           " s=" + to_short(pt.s()) + (pt.char_equal() ? " chi=mu" : " chi!=mu");
}

ZetaProduct r_inverse_root_product(const Shuffle &w, bool char_equal)
{
    const LChar ch = char_equal ? LChar::trivial : LChar::nontrivial;
    const Rational shift = ratio(w.m() + w.n(), 2);
    ZetaProduct p;
    for (auto [i, j] : inversion_pairs(w)) {
        AffineExponent arg{Rational(1), shift + i - j};
        p.num.push_back({ch, arg});
        p.den.push_back({ch, arg + Rational(1)});
    }
    return p;
}

ZetaProduct r_inverse_telescoped(const Shuffle &w, bool char_equal)
{
    const LChar ch = char_equal ? LChar::trivial : LChar::nontrivial;
    const Rational shift = ratio(w.n() - w.m(), 2);
    ZetaProduct p;
    for (int i = m_w(w); i <= w.m(); ++i) {
        p.num.push_back({ch, {Rational(1), shift + 2 * i - w(i)}});
        p.den.push_back({ch, {Rational(1), shift + i}});
    }
    return p;
}

int pole_order_at(const Shuffle &w, const CriticalPoint &pt)
{
    if (!pt.char_equal()) {
        return 0;
    }
    const int mw = m_w(w);
    const int lo = pt.n() - pt.alpha() - 1;
    const int hi = pt.n() - pt.alpha();
    int count = 0;
    for (int i = mw; i <= w.m(); ++i) {
        const int d = w(i) - 2 * i;
        if (lo <= d && d <= hi) {
            ++count;
        }
    }
    if (pt.alpha() == pt.m() && pt.m() == pt.n() && mw == 1) {
        --count;
    }
    return count;
}

LaurentSeries expand_at(const ZetaProduct &p, const Rational &s0, int trunc)
{
    auto valuation_of = [&](const LFactor &f) { return order_at(f.at(s0)).order; };
    int total = 0;
    for (const auto &f : p.num) {
        total += valuation_of(f);
    }
    for (const auto &f : p.den) {
        total -= valuation_of(f);
    }
    // Every factor needs relative precision trunc - total.
    const int rel = std::max(0, trunc - total);
    auto factor_series = [&](const LFactor &f) {
        if (f.argument.s_coeff != 1) {
            throw Error("expansion expects arguments of the form s + c: " + to_string(f));
        }
        return laurent_expand(f.at(s0), std::max(0, valuation_of(f) + rel));
    };
    LaurentSeries num = LaurentSeries::one();
    for (const auto &f : p.num) {
        num = num * factor_series(f);
    }
    LaurentSeries den = LaurentSeries::one();
    for (const auto &f : p.den) {
        den = den * factor_series(f);
    }
    LaurentSeries out = p.den.empty() ? num : num * den.inverse();
    return out.truncated(trunc);
}

int b_alpha(const CriticalPoint &pt)
{
    const int mu = std::min(pt.m(), pt.alpha() + 1);
    if (pt.alpha() == pt.m() && pt.m() == pt.n()) {
        return mu - 1;
    }
    return mu;
}

bool in_w_alpha(const Shuffle &w, const CriticalPoint &pt)
{
    const int mu = std::min(pt.m(), pt.alpha() + 1);
    for (int i = 1; i <= mu; ++i) {
        const int eps = 2 * i + pt.n() - pt.alpha() - w(i);
        if (eps != 0 && eps != 1) {
            return false;
        }
    }
    return true;
}

bool in_w_alpha_zero(const Shuffle &w, const CriticalPoint &pt)
{
    if (!in_w_alpha(w, pt)) {
        return false;
    }
    const int mu = std::min(pt.m(), pt.alpha() + 1);
    for (int i = 1; i < mu; ++i) {
        if (w(i) != 2 * i + pt.n() - pt.alpha() - 1) {
            return false;
        }
    }
    return true;
}

bool matches_distinguished_layout(const Shuffle &w, const CriticalPoint &pt)
{
    const int m = pt.m(), n = pt.n(), a = pt.alpha();
    const int mu = std::min(m, a + 1);
    for (int j = 1; j <= n - a; ++j) {
        if (w(m + j) != j) {
            return false;
        }
    }
    for (int i = 1; i < mu; ++i) {
        if (w(i) != n - a + 2 * i - 1 || w(m + n - a + i) != n - a + 2 * i) {
            return false;
        }
    }
    const int eps = 2 * mu + n - a - w(mu);
    return eps == 0 || eps == 1;
}

namespace
{

std::vector<Shuffle> filter_shuffles(const CriticalPoint &pt, int cap, bool (*keep)(const Shuffle &, const CriticalPoint &))
{
    if (!pt.char_equal()) {
        throw Error("distinguished sets are defined for chi = mu only");
    }
    std::vector<Shuffle> out;
    for (auto &w : enumerate_shuffles(pt.m(), pt.n(), cap)) {
        if (keep(w, pt)) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace

std::vector<Shuffle> w_alpha_set(const CriticalPoint &pt, int cap)
{
    return filter_shuffles(pt, cap, &in_w_alpha);
}

std::vector<Shuffle> w_alpha_zero_set(const CriticalPoint &pt, int cap)
{
    return filter_shuffles(pt, cap, &in_w_alpha_zero);
}

Shuffle longest_shuffle(int m, int n)
{
    std::vector<int> images;
    for (int i = 1; i <= m; ++i) {
        images.push_back(n + i);
    }
    for (int j = 1; j <= n; ++j) {
        images.push_back(j);
    }
    return Shuffle(m, n, std::move(images));
}

int default_truncation(const CriticalPoint &pt)
{
    return std::max(2, b_alpha(pt)) + 1;
}

} // namespace eisencalc
