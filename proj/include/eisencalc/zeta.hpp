#ifndef EISENCALC_ZETA_HPP
#define EISENCALC_ZETA_HPP

#include <compare>
#include <string>

#include <eisencalc/laurent.hpp>
#include <eisencalc/rational.hpp>

namespace eisencalc
{

// Character of a completed L-function: trivial (chi = mu) or nontrivial.
enum class LChar { trivial, nontrivial };

// One completed L-symbol L(argument, character). The argument is affine in s;
// after substitution its s-coefficient is zero.
struct LFactor {
    LChar character = LChar::trivial;
    AffineExponent argument;

    bool substituted() const
    {
        return argument.s_coeff == 0;
    }
    // The factor with s replaced by a rational value.
    LFactor at(const Rational &s) const
    {
        return {character, {Rational(0), argument.at(s)}};
    }
    Rational value() const;

    friend bool operator==(const LFactor &, const LFactor &) = default;
    friend std::strong_ordering operator<=>(const LFactor &a, const LFactor &b)
    {
        if (a.character != b.character) {
            return a.character < b.character ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return a.argument <=> b.argument;
    }
};

// "L(s+3/2, chi*mu^-1)" symbolically, "L(2, 1)" once substituted.
std::string to_string(const LFactor &f);

enum class Vanishing { nonzero, unknown };

struct LOrder {
    int order = 0; // -1 for a simple pole
    Vanishing vanishing = Vanishing::nonzero;
};

// Pole/zero bookkeeping on the real line: simple poles exactly at 0 and 1 for the
// trivial character; nonvanishing everywhere except possibly inside (0, 1) for a
// nontrivial one. The argument must be substituted.
LOrder order_at(const LFactor &f);

struct CanonicalArgument {
    Rational base;
    int sign;
};

// Functional equation x -> 1-x: (x, +1) when x >= 1-x, else (1-x, -1).
// L(x + t) is the base series evaluated at sign * t.
CanonicalArgument canonicalize_argument(const Rational &x);

class ExpansionUnsupported : public Error
{
public:
    using Error::Error;
};

// Laurent expansion of L(x + t, 1) at t = 0 for integer x, known through t^trunc.
//   x = 0: sum_{k=-1}^{trunc} c[k] t^k
//   x = 1: sum c[k] (-t)^k
//   base b >= 2: sum_{k=0}^{trunc} v[b][k] (sign t)^k
LaurentSeries laurent_expand(const LFactor &f, int trunc);

// gamma(t) = L(t, 1) + L(1 + t, 1).
LaurentSeries gamma_series(int trunc);

} // namespace eisencalc

#endif
