#include <eisencalc/laurent.hpp>

#include <algorithm>

namespace eisencalc
{

const char *to_string(Certainty c)
{
    return c == Certainty::certified ? "CERTIFIED" : "SYMBOLIC";
}

namespace
{

int saturating_add(int a, int b)
{
    if (a >= LaurentSeries::exact || b >= LaurentSeries::exact) {
        return LaurentSeries::exact;
    }
    long r = static_cast<long>(a) + b;
    return r >= LaurentSeries::exact ? LaurentSeries::exact : static_cast<int>(r);
}

} // namespace

void LaurentSeries::strip()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const auto &c) { return !c.is_zero(); });
    valuation_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (is_exact()) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }
    if (coeffs_.empty()) {
        valuation_ = 0;
    }
}

LaurentSeries LaurentSeries::zero(int trunc)
{
    LaurentSeries s;
    s.trunc_ = std::min(trunc, exact);
    return s;
}

LaurentSeries LaurentSeries::constant(SymbolFraction c, int trunc)
{
    return monomial(std::move(c), 0, trunc);
}

LaurentSeries LaurentSeries::monomial(SymbolFraction c, int degree, int trunc)
{
    LaurentSeries s;
    s.trunc_ = std::min(trunc, exact);
    if (degree > s.trunc_ || c.is_zero()) {
        return s;
    }
    s.valuation_ = degree;
    s.coeffs_.push_back(std::move(c));
    if (!s.is_exact()) {
        s.coeffs_.resize(static_cast<std::size_t>(s.trunc_ - degree + 1));
    }
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(int valuation, std::vector<SymbolFraction> coeffs, int trunc)
{
    LaurentSeries s;
    s.trunc_ = std::min(trunc, exact);
    s.valuation_ = valuation;
    s.coeffs_ = std::move(coeffs);
    if (!s.is_exact()) {
        if (valuation + static_cast<int>(s.coeffs_.size()) - 1 != s.trunc_) {
            if (valuation > s.trunc_) {
                s.coeffs_.clear();
            } else {
                throw Error("coefficient count does not match truncation " + std::to_string(trunc));
            }
        }
    }
    s.strip();
    return s;
}

SymbolFraction LaurentSeries::coeff(int degree) const
{
    if (degree > trunc_) {
        throw Error("coefficient of t^" + std::to_string(degree) + " lies beyond the truncation O(t^" +
                    std::to_string(trunc_ + 1) + ")");
    }
    if (is_zero() || degree < valuation_ || degree > top_degree()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(degree - valuation_)];
}

const SymbolFraction &LaurentSeries::leading() const
{
    if (is_zero()) {
        throw Error("the zero series has no leading coefficient");
    }
    return coeffs_.front();
}

LaurentSeries operator+(const LaurentSeries &x, const LaurentSeries &y)
{
    LaurentSeries r;
    r.trunc_ = std::min(x.trunc_, y.trunc_);
    if (x.is_zero() && y.is_zero()) {
        return r;
    }
    int lo = std::min(x.is_zero() ? LaurentSeries::infinity : x.valuation_,
                      y.is_zero() ? LaurentSeries::infinity : y.valuation_);
    int hi = r.is_exact() ? std::max(x.is_zero() ? lo : x.top_degree(), y.is_zero() ? lo : y.top_degree()) : r.trunc_;
    if (lo > hi) {
        return r;
    }
    r.valuation_ = lo;
    r.coeffs_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) {
        r.coeffs_.push_back(x.coeff(d) + y.coeff(d));
    }
    r.strip();
    return r;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r(*this);
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LaurentSeries operator-(const LaurentSeries &x, const LaurentSeries &y)
{
    return x + (-y);
}

LaurentSeries operator*(const LaurentSeries &x, const LaurentSeries &y)
{
    LaurentSeries r;
    r.trunc_ = std::min(saturating_add(x.trunc_, y.valuation()), saturating_add(y.trunc_, x.valuation()));
    if (x.is_zero() || y.is_zero()) {
        return r;
    }
    int lo = x.valuation_ + y.valuation_;
    int hi = r.is_exact() ? x.top_degree() + y.top_degree() : r.trunc_;
    if (lo > hi) {
        return r;
    }
    r.valuation_ = lo;
    r.coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    const int nx = static_cast<int>(x.coeffs_.size());
    const int ny = static_cast<int>(y.coeffs_.size());
    for (int k = 0; k <= hi - lo; ++k) {
        SymbolFraction acc;
        for (int i = std::max(0, k - ny + 1); i <= std::min(k, nx - 1); ++i) {
            const auto &a = x.coeffs_[static_cast<std::size_t>(i)];
            const auto &b = y.coeffs_[static_cast<std::size_t>(k - i)];
            if (!a.is_zero() && !b.is_zero()) {
                acc = acc + a * b;
            }
        }
        r.coeffs_[static_cast<std::size_t>(k)] = std::move(acc);
    }
    r.strip();
    return r;
}

LaurentSeries LaurentSeries::scaled(const SymbolFraction &c) const
{
    return *this * constant(c);
}

LaurentSeries LaurentSeries::inverse() const
{
    if (is_zero()) {
        throw Error("division by zero series");
    }
    if (is_exact()) {
        if (coeffs_.size() != 1) {
            throw Error("inverting an exact multi-term series needs an explicit truncation");
        }
        return monomial(coeffs_.front().inverse(), -valuation_);
    }
    return inverse(trunc_ - 2 * valuation_);
}

LaurentSeries LaurentSeries::inverse(int trunc) const
{
    if (is_zero()) {
        throw Error("division by zero series");
    }
    const int v = valuation_;
    // Relative precision available from this series.
    const int rel = std::min(trunc + v, is_exact() ? exact : trunc_ - v);
    const int out_trunc = -v + rel;
    if (rel < 0) {
        return zero(out_trunc);
    }
    const SymbolFraction inv0 = coeffs_.front().inverse();
    std::vector<SymbolFraction> b;
    b.reserve(static_cast<std::size_t>(rel + 1));
    b.push_back(inv0);
    const int na = static_cast<int>(coeffs_.size());
    for (int k = 1; k <= rel; ++k) {
        SymbolFraction acc;
        for (int j = 1; j <= std::min(k, na - 1); ++j) {
            const auto &a = coeffs_[static_cast<std::size_t>(j)];
            if (!a.is_zero()) {
                acc = acc + a * b[static_cast<std::size_t>(k - j)];
            }
        }
        b.push_back(-(acc * inv0));
    }
    return from_coeffs(-v, std::move(b), out_trunc);
}

LaurentSeries LaurentSeries::negate_variable() const
{
    LaurentSeries r(*this);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if ((r.valuation_ + static_cast<int>(i)) % 2 != 0) {
            r.coeffs_[i] = -r.coeffs_[i];
        }
    }
    return r;
}

LaurentSeries LaurentSeries::truncated(int degree) const
{
    if (degree >= trunc_) {
        return *this;
    }
    LaurentSeries r;
    r.trunc_ = degree;
    if (is_zero() || degree < valuation_) {
        return r;
    }
    r.valuation_ = valuation_;
    for (int d = valuation_; d <= degree; ++d) {
        r.coeffs_.push_back(coeff(d));
    }
    r.strip();
    return r;
}

PoleOrder LaurentSeries::pole_order() const
{
    if (is_zero()) {
        return {0, Certainty::certified};
    }
    if (valuation_ >= 0) {
        return {0, Certainty::certified};
    }
    return {-valuation_, coeffs_.front().certified_nonzero() ? Certainty::certified : Certainty::symbolic};
}

bool LaurentSeries::agrees_to(const LaurentSeries &other, int degree) const
{
    if (degree > trunc_ || degree > other.trunc_) {
        throw Error("comparison degree " + std::to_string(degree) + " exceeds a truncation");
    }
    int lo = std::min(valuation(), other.valuation());
    for (int d = lo; d <= degree; ++d) {
        if (!(coeff(d) == other.coeff(d))) {
            return false;
        }
    }
    return true;
}

bool operator==(const LaurentSeries &x, const LaurentSeries &y)
{
    if (x.trunc_ != y.trunc_ || x.is_zero() != y.is_zero()) {
        return false;
    }
    if (x.is_zero()) {
        return true;
    }
    if (x.valuation_ != y.valuation_ || x.coeffs_.size() != y.coeffs_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (!(x.coeffs_[i] == y.coeffs_[i])) {
            return false;
        }
    }
    return true;
}

std::string LaurentSeries::str() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto &c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const int d = valuation_ + static_cast<int>(i);
        std::string cs = c.str();
        bool single = c.den().is_constant() && c.num().is_monomial();
        bool negative = single && cs.front() == '-';
        if (negative) {
            cs.erase(0, 1);
        }
        if (!single) {
            cs = "(" + cs + ")";
        }
        if (d != 0) {
            if (cs == "1") {
                cs.clear();
            } else {
                cs += " * ";
            }
            cs += d == 1 ? "t" : "t^" + std::to_string(d);
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + cs;
        } else {
            out += (negative ? " - " : " + ") + cs;
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (!is_exact()) {
        out += " + O(t^" + std::to_string(trunc_ + 1) + ")";
    }
    return out;
}

} // namespace eisencalc
