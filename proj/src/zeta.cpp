#include <eisencalc/zeta.hpp>

#include <vector>

namespace eisencalc
{

Rational LFactor::value() const
{
    if (!substituted()) {
        throw Error("argument of " + to_string(*this) + " still depends on s");
    }
    return argument.constant;
}

std::string to_string(const LFactor &f)
{
    return "L(" + to_string(f.argument) + ", " + (f.character == LChar::trivial ? "1" : "chi*mu^-1") + ")";
}

LOrder order_at(const LFactor &f)
{
    const Rational x = f.value();
    if (f.character == LChar::trivial) {
        return {(x == 0 || x == 1) ? -1 : 0, Vanishing::nonzero};
    }
    const bool inside = x > 0 && x < 1;
    return {0, inside ? Vanishing::unknown : Vanishing::nonzero};
}

CanonicalArgument canonicalize_argument(const Rational &x)
{
    Rational reflected = 1 - x;
    if (x >= reflected) {
        return {x, +1};
    }
    return {reflected, -1};
}

LaurentSeries laurent_expand(const LFactor &f, int trunc)
{
    if (f.character != LChar::trivial) {
        throw ExpansionUnsupported("expansion unsupported for nontrivial character: " + to_string(f));
    }
    const Rational x = f.value();
    if (!is_integer(x)) {
        throw ExpansionUnsupported("expansion needs an integer argument: " + to_string(f));
    }
    if (trunc < 0 || trunc > Symbol::max_index) {
        throw Error("expansion truncation out of range: " + std::to_string(trunc));
    }
    const auto [base, sign] = canonicalize_argument(x);
    std::vector<SymbolFraction> coeffs;
    if (base == 1) {
        // L(1 + sign t) = L(-sign t), expanded with the c[k] around t = 0.
        const int inner = -sign;
        for (int k = -1; k <= trunc; ++k) {
            SymbolFraction c(Symbol::c(k));
            coeffs.push_back((inner < 0 && (k % 2 != 0)) ? -c : c);
        }
        return LaurentSeries::from_coeffs(-1, std::move(coeffs), trunc);
    }
    const int b = static_cast<int>(to_long(base));
    for (int k = 0; k <= trunc; ++k) {
        SymbolFraction c(Symbol::v(b, k));
        coeffs.push_back((sign < 0 && k % 2 != 0) ? -c : c);
    }
    return LaurentSeries::from_coeffs(0, std::move(coeffs), trunc);
}

LaurentSeries gamma_series(int trunc)
{
    const LFactor at0{LChar::trivial, {Rational(0), Rational(0)}};
    const LFactor at1{LChar::trivial, {Rational(0), Rational(1)}};
    return laurent_expand(at0, trunc) + laurent_expand(at1, trunc);
}

} // namespace eisencalc
