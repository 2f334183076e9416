#ifndef EISENCALC_LAURENT_HPP
#define EISENCALC_LAURENT_HPP

#include <climits>
#include <string>
#include <vector>

#include <eisencalc/poly.hpp>

namespace eisencalc
{

enum class Certainty { certified, symbolic };

struct PoleOrder {
    int order = 0;
    Certainty certainty = Certainty::certified;

    friend bool operator==(const PoleOrder &, const PoleOrder &) = default;
};

const char *to_string(Certainty c);

// Truncated Laurent series in t over Q(symbols).
//
// Coefficients are known exactly for every degree <= trunc(); the remainder is
// O(t^(trunc()+1)). A series with trunc() == exact has no remainder. A series
// with no nonzero coefficient up to trunc() is the zero series; its valuation
// is the +infinity marker.
class LaurentSeries
{
public:
    static constexpr int exact = INT_MAX / 4;
    static constexpr int infinity = INT_MAX / 4;

    // The exact zero series.
    LaurentSeries() = default;

    static LaurentSeries zero(int trunc = exact);
    static LaurentSeries constant(SymbolFraction c, int trunc = exact);
    static LaurentSeries one()
    {
        return constant(1);
    }
    // c * t^degree.
    static LaurentSeries monomial(SymbolFraction c, int degree, int trunc = exact);
    // Coefficients of degrees valuation, valuation+1, ...; leading zeros are stripped.
    // For an inexact series the vector must reach exactly degree `trunc`.
    static LaurentSeries from_coeffs(int valuation, std::vector<SymbolFraction> coeffs, int trunc);

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    bool is_exact() const
    {
        return trunc_ >= exact;
    }
    int valuation() const
    {
        return is_zero() ? infinity : valuation_;
    }
    int trunc() const
    {
        return trunc_;
    }
    // Highest stored degree (valuation() - 1 for the zero series).
    int top_degree() const
    {
        return valuation_ + static_cast<int>(coeffs_.size()) - 1;
    }
    // Coefficient of t^degree; throws when degree lies beyond the truncation.
    SymbolFraction coeff(int degree) const;
    const SymbolFraction &leading() const;

    friend LaurentSeries operator+(const LaurentSeries &x, const LaurentSeries &y);
    friend LaurentSeries operator-(const LaurentSeries &x, const LaurentSeries &y);
    friend LaurentSeries operator*(const LaurentSeries &x, const LaurentSeries &y);
    LaurentSeries operator-() const;
    LaurentSeries scaled(const SymbolFraction &c) const;

    // Multiplicative inverse to the same relative precision. An exact series
    // that is not a single term needs an explicit truncation.
    LaurentSeries inverse() const;
    LaurentSeries inverse(int trunc) const;

    // t -> -t.
    LaurentSeries negate_variable() const;
    // Forget every coefficient above `degree`.
    LaurentSeries truncated(int degree) const;

    PoleOrder pole_order() const;

    // Identical coefficients at every degree <= degree (both series must know them).
    bool agrees_to(const LaurentSeries &other, int degree) const;

    // Structural equality: same truncation and same coefficients.
    friend bool operator==(const LaurentSeries &x, const LaurentSeries &y);

    // "c[-1]^2 * t^-2 + (c[0] - c[1]) * t + O(t^3)".
    std::string str() const;

private:
    void strip();

    int valuation_ = 0;
    std::vector<SymbolFraction> coeffs_;
    int trunc_ = exact;
};

inline LaurentSeries series_add(const LaurentSeries &x, const LaurentSeries &y)
{
    return x + y;
}
inline LaurentSeries series_mul(const LaurentSeries &x, const LaurentSeries &y)
{
    return x * y;
}
inline LaurentSeries series_invert(const LaurentSeries &x)
{
    return x.inverse();
}
inline PoleOrder pole_order(const LaurentSeries &x)
{
    return x.pole_order();
}

} // namespace eisencalc

#endif
