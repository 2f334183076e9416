#ifndef EISENCALC_POLY_HPP
#define EISENCALC_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <eisencalc/rational.hpp>
#include <eisencalc/symbol.hpp>

namespace eisencalc
{

// Product of symbol powers; (symbol id, exponent) pairs sorted by id, exponents > 0.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(Symbol s, int exponent = 1);

    bool is_one() const
    {
        return factors_.empty();
    }
    int degree() const;
    const std::vector<std::pair<std::uint32_t, int>> &factors() const
    {
        return factors_;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    // Componentwise minimum of exponents.
    static Monomial gcd(const Monomial &a, const Monomial &b);
    // Requires b | a.
    static Monomial quotient(const Monomial &a, const Monomial &b);
    bool divides(const Monomial &other) const;

    bool all_axiomatized_nonzero() const;
    std::string str() const;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::vector<std::pair<std::uint32_t, int>> factors_;
};

// Polynomial over Q in the zeta-constant symbols. Terms sorted by monomial,
// no zero coefficients stored.
class SymbolPolynomial
{
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term &, const Term &) = default;
    };

    SymbolPolynomial() = default;
    SymbolPolynomial(Rational c);
    SymbolPolynomial(int c) : SymbolPolynomial(Rational(c)) {}
    SymbolPolynomial(Symbol s) : SymbolPolynomial(Monomial(s), Rational(1)) {}
    SymbolPolynomial(Monomial mono, Rational coeff);

    bool is_zero() const
    {
        return terms_.empty();
    }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }
    bool is_monomial() const
    {
        return terms_.size() == 1;
    }
    const std::vector<Term> &terms() const
    {
        return terms_;
    }
    Rational constant_term() const;

    SymbolPolynomial operator-() const;
    friend SymbolPolynomial operator+(const SymbolPolynomial &a, const SymbolPolynomial &b);
    friend SymbolPolynomial operator-(const SymbolPolynomial &a, const SymbolPolynomial &b);
    friend SymbolPolynomial operator*(const SymbolPolynomial &a, const SymbolPolynomial &b);
    SymbolPolynomial scaled(const Rational &c) const;
    SymbolPolynomial times(const Monomial &m) const;
    // Requires m to divide every term.
    SymbolPolynomial divided(const Monomial &m) const;
    // Gcd of all term monomials (the monomial content).
    Monomial monomial_content() const;

    std::string str() const;

    friend bool operator==(const SymbolPolynomial &, const SymbolPolynomial &) = default;

private:
    void sort_terms();

    std::vector<Term> terms_;
};

SymbolPolynomial parse_polynomial(std::string_view text);

// Element of the fraction field Q(symbols). Equality is decided by cross-multiplication.
// Normal form: monomial content removed from num/den jointly, den leading coefficient 1.
class SymbolFraction
{
public:
    SymbolFraction() : num_(0), den_(1) {}
    SymbolFraction(SymbolPolynomial num) : num_(std::move(num)), den_(1) {}
    SymbolFraction(Rational c) : SymbolFraction(SymbolPolynomial(std::move(c))) {}
    SymbolFraction(int c) : SymbolFraction(SymbolPolynomial(c)) {}
    SymbolFraction(Symbol s) : SymbolFraction(SymbolPolynomial(s)) {}
    SymbolFraction(SymbolPolynomial num, SymbolPolynomial den);

    const SymbolPolynomial &num() const
    {
        return num_;
    }
    const SymbolPolynomial &den() const
    {
        return den_;
    }
    bool is_zero() const
    {
        return num_.is_zero();
    }
    // Nonzero rational multiple of a ratio of monomials in symbols axiomatized nonzero.
    bool certified_nonzero() const;

    SymbolFraction inverse() const;
    SymbolFraction operator-() const;
    friend SymbolFraction operator+(const SymbolFraction &a, const SymbolFraction &b);
    friend SymbolFraction operator-(const SymbolFraction &a, const SymbolFraction &b);
    friend SymbolFraction operator*(const SymbolFraction &a, const SymbolFraction &b);
    friend SymbolFraction operator/(const SymbolFraction &a, const SymbolFraction &b)
    {
        return a * b.inverse();
    }
    SymbolFraction scaled(const Rational &c) const;

    friend bool operator==(const SymbolFraction &a, const SymbolFraction &b);

    std::string str() const;

private:
    void normalize();

    SymbolPolynomial num_;
    SymbolPolynomial den_;
};

} // namespace eisencalc

#endif
