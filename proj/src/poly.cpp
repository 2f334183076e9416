#include <eisencalc/poly.hpp>

#include <algorithm>
#include <cctype>

namespace eisencalc
{

Symbol Symbol::c(int k)
{
    if (k < -1 || k > max_index) {
        throw Error("c-symbol index out of range: " + std::to_string(k));
    }
    return Symbol(0, k);
}

Symbol Symbol::v(int base, int k)
{
    if (base < 2 || base > 1000 || k < 0 || k > max_index) {
        throw Error("v-symbol out of range: v[" + std::to_string(base) + "][" + std::to_string(k) + "]");
    }
    return Symbol(base, k);
}

Symbol Symbol::from_id(std::uint32_t id)
{
    return Symbol(static_cast<int>(id / 64u), static_cast<int>(id % 64u) - 1);
}

std::string Symbol::str() const
{
    if (is_c()) {
        return "c[" + std::to_string(index_) + "]";
    }
    return "v[" + std::to_string(base_) + "][" + std::to_string(index_) + "]";
}

namespace
{

// Reads "[int]" at the front of text.
std::size_t bracketed_int(std::string_view text, int &out)
{
    if (text.empty() || text.front() != '[') {
        return 0;
    }
    auto close = text.find(']');
    if (close == std::string_view::npos) {
        return 0;
    }
    try {
        std::size_t used = 0;
        std::string body(text.substr(1, close - 1));
        out = std::stoi(body, &used);
        if (used != body.size()) {
            return 0;
        }
    } catch (const std::exception &) {
        return 0;
    }
    return close + 1;
}

} // namespace

std::size_t parse_symbol(std::string_view text, Symbol &out)
{
    if (text.empty() || (text.front() != 'c' && text.front() != 'v')) {
        return 0;
    }
    int a = 0;
    auto used = bracketed_int(text.substr(1), a);
    if (used == 0) {
        return 0;
    }
    if (text.front() == 'c') {
        out = Symbol::c(a);
        return 1 + used;
    }
    int b = 0;
    auto used2 = bracketed_int(text.substr(1 + used), b);
    if (used2 == 0) {
        return 0;
    }
    out = Symbol::v(a, b);
    return 1 + used + used2;
}

// ---- Monomial ----

Monomial::Monomial(Symbol s, int exponent)
{
    if (exponent > 0) {
        factors_.emplace_back(s.id(), exponent);
    }
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto &f : factors_) {
        d += f.second;
    }
    return d;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

Monomial Monomial::gcd(const Monomial &a, const Monomial &b)
{
    Monomial out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            out.factors_.emplace_back(i->first, std::min(i->second, j->second));
            ++i;
            ++j;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial &other) const
{
    auto j = other.factors_.begin();
    for (const auto &f : factors_) {
        while (j != other.factors_.end() && j->first < f.first) {
            ++j;
        }
        if (j == other.factors_.end() || j->first != f.first || j->second < f.second) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient(const Monomial &a, const Monomial &b)
{
    Monomial out;
    auto j = b.factors_.begin();
    for (const auto &f : a.factors_) {
        int e = f.second;
        if (j != b.factors_.end() && j->first == f.first) {
            e -= j->second;
            ++j;
        }
        if (e < 0) {
            throw Error("monomial quotient is not exact");
        }
        if (e > 0) {
            out.factors_.emplace_back(f.first, e);
        }
    }
    if (j != b.factors_.end()) {
        throw Error("monomial quotient is not exact");
    }
    return out;
}

bool Monomial::all_axiomatized_nonzero() const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto &f) { return Symbol::from_id(f.first).axiomatized_nonzero(); });
}

std::string Monomial::str() const
{
    std::string out;
    for (const auto &[id, e] : factors_) {
        if (!out.empty()) {
            out += "*";
        }
        out += Symbol::from_id(id).str();
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

// ---- SymbolPolynomial ----

SymbolPolynomial::SymbolPolynomial(Rational c)
{
    c.canonicalize();
    if (c != 0) {
        terms_.push_back({Monomial{}, std::move(c)});
    }
}

SymbolPolynomial::SymbolPolynomial(Monomial mono, Rational coeff)
{
    coeff.canonicalize();
    if (coeff != 0) {
        terms_.push_back({std::move(mono), std::move(coeff)});
    }
}

Rational SymbolPolynomial::constant_term() const
{
    if (!terms_.empty() && terms_.front().mono.is_one()) {
        return terms_.front().coeff;
    }
    return 0;
}

SymbolPolynomial SymbolPolynomial::operator-() const
{
    SymbolPolynomial out(*this);
    for (auto &t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

namespace
{

template <typename Combine>
std::vector<SymbolPolynomial::Term> merge_terms(const std::vector<SymbolPolynomial::Term> &a,
                                                const std::vector<SymbolPolynomial::Term> &b, Combine sign)
{
    std::vector<SymbolPolynomial::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->mono < j->mono)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->mono < i->mono) {
            out.push_back({j->mono, sign(j->coeff)});
            ++j;
        } else {
            Rational c = i->coeff + sign(j->coeff);
            if (c != 0) {
                out.push_back({i->mono, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SymbolPolynomial operator+(const SymbolPolynomial &a, const SymbolPolynomial &b)
{
    SymbolPolynomial out;
    out.terms_ = merge_terms(a.terms_, b.terms_, [](const Rational &c) { return Rational(c); });
    return out;
}

SymbolPolynomial operator-(const SymbolPolynomial &a, const SymbolPolynomial &b)
{
    SymbolPolynomial out;
    out.terms_ = merge_terms(a.terms_, b.terms_, [](const Rational &c) { return Rational(-c); });
    return out;
}

SymbolPolynomial operator*(const SymbolPolynomial &a, const SymbolPolynomial &b)
{
    SymbolPolynomial out;
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    std::vector<SymbolPolynomial::Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            prods.push_back({x.mono * y.mono, x.coeff * y.coeff});
        }
    }
    std::sort(prods.begin(), prods.end(), [](const auto &p, const auto &q) { return p.mono < q.mono; });
    for (auto &p : prods) {
        if (!out.terms_.empty() && out.terms_.back().mono == p.mono) {
            out.terms_.back().coeff += p.coeff;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coeff == 0) {
                out.terms_.pop_back();
            }
            out.terms_.push_back(std::move(p));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) {
        out.terms_.pop_back();
    }
    return out;
}

SymbolPolynomial SymbolPolynomial::scaled(const Rational &c) const
{
    if (c == 0) {
        return {};
    }
    SymbolPolynomial out(*this);
    for (auto &t : out.terms_) {
        t.coeff *= c;
    }
    return out;
}

SymbolPolynomial SymbolPolynomial::times(const Monomial &m) const
{
    SymbolPolynomial out(*this);
    for (auto &t : out.terms_) {
        t.mono = t.mono * m;
    }
    out.sort_terms();
    return out;
}

SymbolPolynomial SymbolPolynomial::divided(const Monomial &m) const
{
    SymbolPolynomial out(*this);
    for (auto &t : out.terms_) {
        t.mono = Monomial::quotient(t.mono, m);
    }
    out.sort_terms();
    return out;
}

void SymbolPolynomial::sort_terms()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.mono < b.mono; });
}

Monomial SymbolPolynomial::monomial_content() const
{
    if (terms_.empty()) {
        return {};
    }
    Monomial g = terms_.front().mono;
    for (const auto &t : terms_) {
        g = Monomial::gcd(g, t.mono);
        if (g.is_one()) {
            break;
        }
    }
    return g;
}

std::string SymbolPolynomial::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (t.mono.is_one()) {
            out += to_short(c);
        } else if (c == 1) {
            out += t.mono.str();
        } else {
            out += to_short(c) + "*" + t.mono.str();
        }
        first = false;
    }
    return out;
}

namespace
{

class PolyParser
{
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    SymbolPolynomial parse()
    {
        SymbolPolynomial acc;
        skip();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = text_[pos_++] == '-';
        }
        acc = term().scaled(negative ? -1 : 1);
        while (true) {
            skip();
            if (pos_ == text_.size()) {
                break;
            }
            char op = text_[pos_];
            if (op != '+' && op != '-') {
                fail();
            }
            ++pos_;
            auto t = term();
            acc = op == '+' ? acc + t : acc - t;
        }
        return acc;
    }

private:
    char peek() const
    {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail() const
    {
        throw Error("malformed polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_));
    }

    SymbolPolynomial term()
    {
        SymbolPolynomial acc(1);
        while (true) {
            skip();
            acc = acc * factor();
            skip();
            if (peek() != '*') {
                return acc;
            }
            ++pos_;
        }
    }

    SymbolPolynomial factor()
    {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            auto start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                    fail();
                }
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
            }
            return parse_rational(text_.substr(start, pos_ - start));
        }
        Symbol s = Symbol::c(0);
        auto used = parse_symbol(text_.substr(pos_), s);
        if (used == 0) {
            fail();
        }
        pos_ += used;
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            auto start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            if (start == pos_) {
                fail();
            }
            e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        }
        return SymbolPolynomial(Monomial(s, e), Rational(1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SymbolPolynomial parse_polynomial(std::string_view text)
{
    return PolyParser(text).parse();
}

// ---- SymbolFraction ----

SymbolFraction::SymbolFraction(SymbolPolynomial num, SymbolPolynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw Error("zero denominator in symbol fraction");
    }
    normalize();
}

void SymbolFraction::normalize()
{
    if (num_.is_zero()) {
        den_ = SymbolPolynomial(1);
        return;
    }
    if (den_.is_constant()) {
        if (den_.constant_term() != 1) {
            num_ = num_.scaled(1 / Rational(den_.constant_term()));
            den_ = SymbolPolynomial(1);
        }
        return;
    }
    Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!g.is_one()) {
        num_ = num_.divided(g);
        den_ = den_.divided(g);
    }
    Rational lead = den_.terms().front().coeff;
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool SymbolFraction::certified_nonzero() const
{
    return num_.is_monomial() && den_.is_monomial() && num_.terms().front().mono.all_axiomatized_nonzero() &&
           den_.terms().front().mono.all_axiomatized_nonzero();
}

SymbolFraction SymbolFraction::inverse() const
{
    if (num_.is_zero()) {
        throw Error("inverting the zero fraction");
    }
    return SymbolFraction(den_, num_);
}

SymbolFraction SymbolFraction::operator-() const
{
    SymbolFraction out(*this);
    out.num_ = -out.num_;
    return out;
}

SymbolFraction operator+(const SymbolFraction &a, const SymbolFraction &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.den_ == b.den_) {
        return SymbolFraction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
        // Both leading coefficients are 1 after normalization.
        const auto &ma = a.den_.terms().front().mono;
        const auto &mb = b.den_.terms().front().mono;
        Monomial g = Monomial::gcd(ma, mb);
        Monomial fa = Monomial::quotient(mb, g);
        Monomial fb = Monomial::quotient(ma, g);
        return SymbolFraction(a.num_.times(fa) + b.num_.times(fb), SymbolPolynomial(ma * fa, Rational(1)));
    }
    return SymbolFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

SymbolFraction operator-(const SymbolFraction &a, const SymbolFraction &b)
{
    return a + (-b);
}

SymbolFraction operator*(const SymbolFraction &a, const SymbolFraction &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.den_.is_constant() && b.den_.is_constant()) {
        SymbolFraction out;
        out.num_ = a.num_ * b.num_;
        return out;
    }
    return SymbolFraction(a.num_ * b.num_, a.den_ * b.den_);
}

SymbolFraction SymbolFraction::scaled(const Rational &c) const
{
    if (c == 0) {
        return {};
    }
    SymbolFraction out(*this);
    out.num_ = out.num_.scaled(c);
    return out;
}

bool operator==(const SymbolFraction &a, const SymbolFraction &b)
{
    if (a.den_ == b.den_) {
        return a.num_ == b.num_;
    }
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string SymbolFraction::str() const
{
    if (den_.is_constant()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace eisencalc
