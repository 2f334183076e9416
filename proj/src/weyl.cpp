#include <eisencalc/weyl.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eisencalc
{

Permutation::Permutation(std::vector<int> one_based)
{
    const auto n = one_based.size();
    std::vector<bool> seen(n, false);
    images_.reserve(n);
    for (int v : one_based) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw Error("not a permutation: " + format_images(one_based));
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
        images_.push_back(v - 1);
    }
}

Permutation Permutation::identity(int size)
{
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::vector<int> Permutation::one_based() const
{
    std::vector<int> out(images_);
    for (auto &v : out) {
        ++v;
    }
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return inv;
}

Permutation operator*(const Permutation &a, const Permutation &b)
{
    if (a.size() != b.size()) {
        throw Error("composing permutations of different sizes");
    }
    Permutation c;
    c.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i) {
        c.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    }
    return c;
}

bool is_shuffle(int m, int n, std::span<const int> one_based)
{
    if (m < 1 || n < 1 || one_based.size() != static_cast<std::size_t>(m + n)) {
        return false;
    }
    std::vector<bool> seen(one_based.size(), false);
    for (int v : one_based) {
        if (v < 1 || v > m + n || seen[static_cast<std::size_t>(v - 1)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    for (int i = 1; i < m + n; ++i) {
        if (i == m) {
            continue;
        }
        if (one_based[static_cast<std::size_t>(i - 1)] > one_based[static_cast<std::size_t>(i)]) {
            return false;
        }
    }
    return true;
}

Shuffle::Shuffle(int m, int n, std::vector<int> one_based) : m_(m), n_(n)
{
    if (!is_shuffle(m, n, one_based)) {
        throw Error("not a (" + std::to_string(m) + "," + std::to_string(n) + ") shuffle: " + format_images(one_based));
    }
    perm_ = Permutation(std::move(one_based));
}

Shuffle Shuffle::identity(int m, int n)
{
    std::vector<int> v(static_cast<std::size_t>(m + n));
    std::iota(v.begin(), v.end(), 1);
    return Shuffle(m, n, std::move(v));
}

bool Shuffle::is_identity() const
{
    for (int i = 1; i <= size(); ++i) {
        if (perm_(i) != i) {
            return false;
        }
    }
    return true;
}

std::vector<int> parse_images(const std::string &text)
{
    std::string cleaned;
    for (char ch : text) {
        cleaned.push_back(ch == ',' || ch == '[' || ch == ']' ? ' ' : ch);
    }
    std::istringstream in(cleaned);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size()) {
            throw Error("malformed permutation entry '" + tok + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::string format_images(std::span<const int> one_based)
{
    std::string out;
    for (std::size_t i = 0; i < one_based.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(one_based[i]);
    }
    return out;
}

std::string shuffle_count(int m, int n)
{
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + n), static_cast<unsigned long>(m));
    return c.get_str();
}

std::vector<Shuffle> enumerate_shuffles(int m, int n, int cap)
{
    if (m < 1 || n < 1) {
        throw Error("block sizes must be positive");
    }
    const int total = m + n;
    if (total > cap) {
        throw EnumerationTooLarge("enumeration too large: binomial(" + std::to_string(total) + ", " + std::to_string(m) +
                                  ") = " + shuffle_count(m, n) + " shuffles exceeds the cap m+n <= " +
                                  std::to_string(cap));
    }
    // Images of the first block, as an increasing m-subset of 1..m+n, in lex order.
    std::vector<int> first(static_cast<std::size_t>(m));
    std::iota(first.begin(), first.end(), 1);
    std::vector<Shuffle> out;
    std::vector<int> images(static_cast<std::size_t>(total));
    std::vector<bool> used(static_cast<std::size_t>(total + 1));
    while (true) {
        std::fill(used.begin(), used.end(), false);
        for (int i = 0; i < m; ++i) {
            images[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(i)];
            used[static_cast<std::size_t>(first[static_cast<std::size_t>(i)])] = true;
        }
        int pos = m;
        for (int v = 1; v <= total; ++v) {
            if (!used[static_cast<std::size_t>(v)]) {
                images[static_cast<std::size_t>(pos++)] = v;
            }
        }
        out.emplace_back(m, n, images);

        int i = m - 1;
        while (i >= 0 && first[static_cast<std::size_t>(i)] == total - m + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++first[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            first[static_cast<std::size_t>(j)] = first[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

int m_w(const Shuffle &w)
{
    for (int i = 1; i <= w.m(); ++i) {
        if (w(i) > i) {
            return i;
        }
    }
    return w.m() + 1;
}

std::vector<std::pair<int, int>> inversion_pairs(const Shuffle &w)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.m(); ++i) {
        for (int j = w.m() + 1; j <= w.size(); ++j) {
            if (w(i) > w(j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

LambdaTuple LambdaTuple::induced(int m, int n)
{
    std::vector<Character> e;
    e.reserve(static_cast<std::size_t>(m + n));
    const Rational half(1, 2);
    for (int i = 1; i <= m; ++i) {
        e.push_back({CharTag::chi, {half, ratio(-(m - 1), 2) + (i - 1)}});
    }
    for (int j = 1; j <= n; ++j) {
        e.push_back({CharTag::mu, {-half, ratio(-(n - 1), 2) + (j - 1)}});
    }
    return LambdaTuple(std::move(e));
}

LambdaTuple apply_weyl(const Permutation &w, const LambdaTuple &lam)
{
    if (w.size() != lam.size()) {
        throw Error("permutation length " + std::to_string(w.size()) + " does not match tuple length " +
                    std::to_string(lam.size()));
    }
    std::vector<Character> out(lam.entries());
    for (int k = 1; k <= w.size(); ++k) {
        out[static_cast<std::size_t>(w(k) - 1)] = lam[k - 1];
    }
    return LambdaTuple(std::move(out));
}

std::vector<PointCharacter> substitute(const LambdaTuple &lam, const Rational &s)
{
    std::vector<PointCharacter> out;
    out.reserve(lam.entries().size());
    for (const auto &c : lam.entries()) {
        out.push_back({c.tag, c.exponent.at(s)});
    }
    return out;
}

bool same_at_point(std::span<const PointCharacter> a, std::span<const PointCharacter> b, bool char_equal)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].exponent != b[i].exponent || (!char_equal && a[i].tag != b[i].tag)) {
            return false;
        }
    }
    return true;
}

} // namespace eisencalc
