#include <eisencalc/rational.hpp>

#include <cctype>
#include <string>

namespace eisencalc
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string to_pq(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return to_pq(q);
}

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
    num = trim(num);
    if (num.starts_with('+')) {
        num.remove_prefix(1);
    }
    if (!valid_integer(num) || !valid_integer(den) || den.starts_with('-') || den.starts_with('+')) {
        throw Error("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) {
        throw Error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

long to_long(const Rational &q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
        throw Error("expected a machine integer, got " + to_pq(q));
    }
    return q.get_num().get_si();
}

std::string to_string(const AffineExponent &e)
{
    std::string out;
    if (e.s_coeff == 0) {
        return to_short(e.constant);
    }
    if (e.s_coeff == 1) {
        out = "s";
    } else if (e.s_coeff == -1) {
        out = "-s";
    } else {
        out = to_short(e.s_coeff) + "*s";
    }
    if (e.constant > 0) {
        out += "+" + to_short(e.constant);
    } else if (e.constant < 0) {
        out += to_short(e.constant);
    }
    return out;
}

AffineExponent parse_affine(std::string_view text)
{
    text = trim(text);
    auto spos = text.find('s');
    if (spos == std::string_view::npos) {
        return {Rational(0), parse_rational(text)};
    }
    Rational coeff(1);
    auto head = trim(text.substr(0, spos));
    if (head == "-") {
        coeff = -1;
    } else if (head.ends_with('*')) {
        coeff = parse_rational(head.substr(0, head.size() - 1));
    } else if (!head.empty() && head != "+") {
        throw Error("malformed affine exponent '" + std::string(text) + "'");
    }
    auto tail = trim(text.substr(spos + 1));
    Rational constant(0);
    if (!tail.empty()) {
        if (tail.front() != '+' && tail.front() != '-') {
            throw Error("malformed affine exponent '" + std::string(text) + "'");
        }
        constant = parse_rational(tail);
    }
    return {coeff, constant};
}

Rational ratio(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace eisencalc
