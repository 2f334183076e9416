#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

namespace
{

const Symbol pool[] = {Symbol::c(0), Symbol::c(1), Symbol::v(2, 0), Symbol::v(2, 1)};

SymbolPolynomial random_polynomial()
{
    std::uniform_int_distribution<int> terms(1, 3), pick(0, 3), expo(0, 2), num(-4, 4), den(1, 3);
    SymbolPolynomial p;
    const int count = terms(rng());
    for (int k = 0; k < count; ++k) {
        Monomial mono;
        for (int f = expo(rng()); f > 0; --f) {
            mono = mono * Monomial(pool[pick(rng())]);
        }
        p = p + SymbolPolynomial(mono, ratio(num(rng()), den(rng())));
    }
    return p;
}

SymbolFraction random_fraction(bool nonzero)
{
    std::uniform_int_distribution<int> coin(0, 3);
    if (!nonzero && coin(rng()) == 0) {
        return SymbolFraction(0);
    }
    SymbolPolynomial num = random_polynomial();
    while (num.is_zero()) {
        num = random_polynomial();
    }
    if (coin(rng()) == 0) {
        // A monomial denominator keeps inversion well defined.
        return SymbolFraction(num, SymbolPolynomial(Monomial(pool[2]), Rational(1)));
    }
    return SymbolFraction(num);
}

LaurentSeries random_series(int trunc)
{
    std::uniform_int_distribution<int> val(-2, 1);
    const int v = std::min(val(rng()), trunc);
    std::vector<SymbolFraction> coeffs;
    for (int d = v; d <= trunc; ++d) {
        coeffs.push_back(random_fraction(d == v));
    }
    return LaurentSeries::from_coeffs(v, std::move(coeffs), trunc);
}

// A series whose leading coefficient is a monomial, so it is certainly a unit.
LaurentSeries random_unit(int trunc)
{
    auto x = random_series(trunc);
    std::vector<SymbolFraction> coeffs;
    for (int d = x.valuation(); d <= trunc; ++d) {
        coeffs.push_back(d == x.valuation() ? SymbolFraction(pool[0]) : x.coeff(d));
    }
    return LaurentSeries::from_coeffs(x.valuation(), std::move(coeffs), trunc);
}

int common_degree(const LaurentSeries &a, const LaurentSeries &b)
{
    return std::min(a.trunc(), b.trunc());
}

} // namespace

TEST_SUITE("laurent")
{

TEST_CASE("polynomial arithmetic")
{
    const SymbolPolynomial x(Symbol::c(0)), y(Symbol::v(2, 0));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK(parse_polynomial((x * y + Rational(3)).str()) == x * y + Rational(3));
    CHECK(parse_polynomial("-2*c[-1]^2*v[3][1] + 1/2") ==
          SymbolPolynomial(Monomial(Symbol::c(-1), 2) * Monomial(Symbol::v(3, 1)), Rational(-2)) + ratio(1, 2));
}

TEST_CASE("fraction equality is cross-multiplied")
{
    const SymbolPolynomial x(Symbol::c(0)), y(Symbol::v(2, 0)), z(Symbol::c(1));
    CHECK(SymbolFraction(x * z, y * z) == SymbolFraction(x, y));
    CHECK(SymbolFraction(x * x - y * y, x + y) == SymbolFraction(x - y));
    CHECK_FALSE(SymbolFraction(x, y) == SymbolFraction(y, x));
}

TEST_CASE("addition examples")
{
    const auto sum = expand(0, 3) + expand(1, 3);
    CHECK(sum.valuation() == 0);
    CHECK(sum.coeff(0) == SymbolFraction(Symbol::c(0)).scaled(2));
    const auto x = expand(0, 3);
    CHECK(x + LaurentSeries::zero() == x);
    const auto pole = LaurentSeries::monomial(Symbol::c(-1), -1);
    CHECK((pole + (-pole)).is_zero());
}

TEST_CASE("multiplication examples")
{
    const auto prod = expand(0, 2) * expand(1, 2);
    CHECK(prod.valuation() == -2);
    CHECK(prod.leading() == -SymbolFraction(SymbolPolynomial(Monomial(Symbol::c(-1), 2), Rational(1))));
    CHECK(prod.pole_order() == PoleOrder{2, Certainty::certified});
    const auto x = expand(3, 2);
    CHECK(x * LaurentSeries::one() == x);
    const auto g = gamma_series(4);
    const auto g2 = g * g;
    CHECK(g2.valuation() == 0);
    CHECK(g2.coeff(0) == SymbolFraction(SymbolPolynomial(Monomial(Symbol::c(0), 2), Rational(4))));
    CHECK(g2.negate_variable() == g2);
}

TEST_CASE("truncation of products")
{
    const auto x = expand(0, 3);  // valuation -1, known through t^3
    const auto y = expand(2, 2);  // valuation 0, known through t^2
    CHECK((x * y).trunc() == std::min(3 + 0, 2 - 1));
    CHECK((x + y).trunc() == 2);
}

TEST_CASE("inversion examples")
{
    CHECK(LaurentSeries::one().inverse() == LaurentSeries::one());
    const auto inv2 = expand(2, 3).inverse();
    CHECK(inv2.valuation() == 0);
    CHECK(inv2.leading() == SymbolFraction(Symbol::v(2, 0)).inverse());
    const auto inv0 = expand(0, 3).inverse();
    CHECK(inv0.valuation() == 1);
    CHECK(inv0.leading() == SymbolFraction(Symbol::c(-1)).inverse());
    CHECK_THROWS_AS(LaurentSeries::zero(3).inverse(), Error);
}

TEST_CASE("pole order certainty")
{
    CHECK(gamma_series(3).pole_order() == PoleOrder{0, Certainty::certified});
    CHECK(LaurentSeries::zero(2).pole_order() == PoleOrder{0, Certainty::certified});
    const SymbolPolynomial open = SymbolPolynomial(Symbol::c(0)) - SymbolPolynomial(Symbol::c(1));
    const auto x = LaurentSeries::from_coeffs(-1, {SymbolFraction(open), SymbolFraction(1)}, 0);
    CHECK(x.pole_order() == PoleOrder{1, Certainty::symbolic});
    const auto y = LaurentSeries::from_coeffs(0, {SymbolFraction(open)}, 0);
    CHECK(y.pole_order() == PoleOrder{0, Certainty::certified});
}

TEST_CASE("ring axioms on random series")
{
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> tr(0, 4);
        const auto x = random_series(tr(rng()));
        const auto y = random_series(tr(rng()));
        const auto z = random_series(tr(rng()));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        const auto l = (x * y) * z;
        const auto r = x * (y * z);
        CHECK(l.agrees_to(r, common_degree(l, r)));
        const auto d1 = x * (y + z);
        const auto d2 = x * y + x * z;
        CHECK(d1.agrees_to(d2, common_degree(d1, d2)));
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("units invert")
{
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> tr(0, 4);
        const auto x = random_unit(tr(rng()));
        const auto p = x * x.inverse();
        CHECK(p.agrees_to(LaurentSeries::one(), p.trunc()));
        CHECK(x.inverse().valuation() == -x.valuation());
    }
}

TEST_CASE("t -> -t is an involutive homomorphism")
{
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> tr(0, 4);
        const auto x = random_series(tr(rng()));
        const auto y = random_series(tr(rng()));
        CHECK(x.negate_variable().negate_variable() == x);
        CHECK((x * y).negate_variable() == x.negate_variable() * y.negate_variable());
        CHECK((x + y).negate_variable() == x.negate_variable() + y.negate_variable());
    }
    CHECK(gamma_series(5).negate_variable() == gamma_series(5));
    CHECK(expand(0, 4).negate_variable() == expand(1, 4));
}

TEST_CASE("coefficientwise and cross-multiplied equality agree")
{
    // L(t)/L(2+t) written two ways.
    const auto a = expand(0, 3) * expand(2, 4).inverse();
    const auto b = (expand(0, 3) * expand(3, 4)) * (expand(2, 4) * expand(3, 4)).inverse();
    CHECK(a.agrees_to(b, std::min(a.trunc(), b.trunc())));
    for (int d = a.valuation(); d <= std::min(a.trunc(), b.trunc()); ++d) {
        const auto &x = a.coeff(d);
        const auto &y = b.coeff(d);
        CHECK(x.num() * y.den() == y.num() * x.den());
    }
}

}
