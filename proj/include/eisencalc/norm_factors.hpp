#ifndef EISENCALC_NORM_FACTORS_HPP
#define EISENCALC_NORM_FACTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include <eisencalc/laurent.hpp>
#include <eisencalc/weyl.hpp>
#include <eisencalc/zeta.hpp>

namespace eisencalc
{

// Formal quotient of L-symbols. Holds the inverse normalizing factor r(Lambda_s, w)^-1
// with the epsilon factors set to 1.
struct ZetaProduct {
    std::vector<LFactor> num;
    std::vector<LFactor> den;
    std::optional<Rational> point;

    bool is_one() const
    {
        return num.empty() && den.empty();
    }

    // Sorts both sides and cancels common factors. Symbolic arguments cancel only
    // when identical. Substituted arguments cancel by character and canonical base
    // (x ~ 1-x), except at the poles 0 and 1, which cancel only when identical:
    // L(t)/L(1+t) tends to -1, not 1.
    ZetaProduct reduce() const;

    // Substitutes s; the result remembers the point.
    ZetaProduct at(const Rational &s) const;

    // Exact pole order at the substituted point from the per-factor bookkeeping.
    int pole_order() const;

    friend bool operator==(const ZetaProduct &a, const ZetaProduct &b);
};

std::string to_string(const ZetaProduct &p);

// s = (m+n)/2 - alpha with m <= n and 0 <= alpha <= floor((m+n)/2).
class CriticalPoint
{
public:
    CriticalPoint(int m, int n, int alpha, bool char_equal = true);

    int m() const
    {
        return m_;
    }
    int n() const
    {
        return n_;
    }
    int alpha() const
    {
        return alpha_;
    }
    bool char_equal() const
    {
        return char_equal_;
    }
    Rational s() const
    {
        return ratio(m_ + n_, 2) - alpha_;
    }
    // Partner offset for change intervals: position i pairs with m+n-alpha+i.
    int partner_offset() const
    {
        return m_ + n_ - alpha_;
    }
    // alpha = (m+n)/2, i.e. s = 0, outside the critical set of the main statements.
    bool at_zero() const
    {
        return 2 * alpha_ == m_ + n_;
    }

    friend bool operator==(const CriticalPoint &, const CriticalPoint &) = default;

private:
    int m_, n_, alpha_;
    bool char_equal_;
};

std::string to_string(const CriticalPoint &pt);

// Product over the inversions (i, j) of L(s+(m+n)/2+i-j) / L(s+(m+n)/2+i-j+1).
ZetaProduct r_inverse_root_product(const Shuffle &w, bool char_equal = true);

// Product over i = m_w..m of L(s+(n-m)/2+2i-w(i)) / L(s+(n-m)/2+i).
ZetaProduct r_inverse_telescoped(const Shuffle &w, bool char_equal = true);

// Counting formula: #{ i in [m_w, m] : n-alpha-1 <= w(i)-2i <= n-alpha }, less one
// when alpha = m = n and m_w = 1 (denominator pole). Zero when chi != mu.
int pole_order_at(const Shuffle &w, const CriticalPoint &pt);

// Laurent expansion in t of a symbolic product at s = s0 + t, known through t^trunc.
// Every factor must have the trivial character and an integer argument at s0.
LaurentSeries expand_at(const ZetaProduct &p, const Rational &s0, int trunc);

// Maximal pole order at the point.
int b_alpha(const CriticalPoint &pt);

// Shuffles with w(i) = 2i + n - alpha - eps_i, eps_i in {0, 1}, for i <= min(m, alpha+1).
std::vector<Shuffle> w_alpha_set(const CriticalPoint &pt, int cap = default_enumeration_cap);
bool in_w_alpha(const Shuffle &w, const CriticalPoint &pt);

// The subset with eps_i = 1 for every i < min(m, alpha+1).
std::vector<Shuffle> w_alpha_zero_set(const CriticalPoint &pt, int cap = default_enumeration_cap);
bool in_w_alpha_zero(const Shuffle &w, const CriticalPoint &pt);

// Explicit layout of a distinguished element: w(m+j) = j for j <= n-alpha, and
// w(i) = n-alpha+2i-1, w(m+n-alpha+i) = n-alpha+2i for i < min(m, alpha+1).
bool matches_distinguished_layout(const Shuffle &w, const CriticalPoint &pt);

// w0 = (n+1, ..., n+m, 1, ..., n).
Shuffle longest_shuffle(int m, int n);

// Default truncation degree max(2, b_alpha) + 1.
int default_truncation(const CriticalPoint &pt);

} // namespace eisencalc

#endif
