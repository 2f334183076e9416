#ifndef EISENCALC_RATIONAL_HPP
#define EISENCALC_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eisencalc
{

using Rational = mpq_class;

// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A stated invariant failed to hold. The message names the invariant.
class InvariantError : public Error
{
public:
    using Error::Error;
};

// Canonical "p/q" form; the denominator is always written, so 2 is "2/1".
std::string to_pq(const Rational &q);

// Short form: "2", "-3/2".
std::string to_short(const Rational &q);

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &q);

// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational &q);

// p/q in lowest terms.
Rational ratio(long p, long q);

// Exact affine form s_coeff * s + constant.
struct AffineExponent {
    Rational s_coeff;
    Rational constant;

    AffineExponent() = default;
    AffineExponent(Rational s, Rational c) : s_coeff(std::move(s)), constant(std::move(c))
    {
        s_coeff.canonicalize();
        constant.canonicalize();
    }

    Rational at(const Rational &s) const
    {
        return s_coeff * s + constant;
    }
    AffineExponent operator+(const Rational &c) const
    {
        return {s_coeff, constant + c};
    }

    friend bool operator==(const AffineExponent &a, const AffineExponent &b)
    {
        return a.s_coeff == b.s_coeff && a.constant == b.constant;
    }
    friend std::strong_ordering operator<=>(const AffineExponent &a, const AffineExponent &b)
    {
        if (int c = cmp(a.s_coeff, b.s_coeff); c != 0) {
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        int c = cmp(a.constant, b.constant);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

// "s+3/2", "s-1", "s", "1/2*s+1", "5/2". The constant uses the short form.
std::string to_string(const AffineExponent &e);

// Inverse of to_string; also accepts the p/q constant form.
AffineExponent parse_affine(std::string_view text);

} // namespace eisencalc

#endif
