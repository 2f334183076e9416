#ifndef EISENCALC_WEYL_HPP
#define EISENCALC_WEYL_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <eisencalc/rational.hpp>

namespace eisencalc
{

inline constexpr int default_enumeration_cap = 22;

class EnumerationTooLarge : public Error
{
public:
    using Error::Error;
};

// A permutation of {1, ..., size}. Stored 0-based; w(i) reads it 1-based.
class Permutation
{
public:
    Permutation() = default;
    // Takes 1-based images w(1), ..., w(N); throws unless they form a permutation.
    explicit Permutation(std::vector<int> one_based);

    static Permutation identity(int size);

    int size() const
    {
        return static_cast<int>(images_.size());
    }
    // 1-based image of the 1-based point i.
    int operator()(int i) const
    {
        return images_[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::vector<int> one_based() const;

    Permutation inverse() const;
    // (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation &a, const Permutation &b);

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> images_;
};

// A permutation of {1, ..., m+n} increasing on 1..m and on m+1..m+n.
class Shuffle
{
public:
    Shuffle() = default;
    // Throws unless `one_based` is a shuffle for the block sizes (m, n).
    Shuffle(int m, int n, std::vector<int> one_based);

    static Shuffle identity(int m, int n);

    int m() const
    {
        return m_;
    }
    int n() const
    {
        return n_;
    }
    int size() const
    {
        return m_ + n_;
    }
    int operator()(int i) const
    {
        return perm_(i);
    }
    const Permutation &permutation() const
    {
        return perm_;
    }
    std::vector<int> one_based() const
    {
        return perm_.one_based();
    }
    bool is_identity() const;

    friend bool operator==(const Shuffle &, const Shuffle &) = default;
    friend auto operator<=>(const Shuffle &, const Shuffle &) = default;

private:
    int m_ = 0;
    int n_ = 0;
    Permutation perm_;
};

bool is_shuffle(int m, int n, std::span<const int> one_based);

// "3,4,1,2" (also accepts blanks and surrounding brackets).
std::vector<int> parse_images(const std::string &text);
std::string format_images(std::span<const int> one_based);

// All binomial(m+n, m) shuffles in lexicographic order of their images.
std::vector<Shuffle> enumerate_shuffles(int m, int n, int cap = default_enumeration_cap);

// Number of shuffles, as a decimal string (exact for any m, n).
std::string shuffle_count(int m, int n);

// Least i <= m with w(i) > i; m+1 for the identity.
int m_w(const Shuffle &w);

// All (i, j), 1 <= i <= m < j <= m+n, with w(i) > w(j), in lexicographic order.
std::vector<std::pair<int, int>> inversion_pairs(const Shuffle &w);

enum class CharTag { chi, mu };

struct Character {
    CharTag tag;
    AffineExponent exponent;

    friend bool operator==(const Character &, const Character &) = default;
};

// The induced character tuple: entry i (i <= m) is chi |.|^((s-(m-1))/2 + i-1),
// entry m+j is mu |.|^((-s-(n-1))/2 + j-1).
class LambdaTuple
{
public:
    LambdaTuple() = default;
    explicit LambdaTuple(std::vector<Character> entries) : entries_(std::move(entries)) {}

    static LambdaTuple induced(int m, int n);

    int size() const
    {
        return static_cast<int>(entries_.size());
    }
    const Character &operator[](int i) const
    {
        return entries_[static_cast<std::size_t>(i)];
    }
    const std::vector<Character> &entries() const
    {
        return entries_;
    }

    friend bool operator==(const LambdaTuple &, const LambdaTuple &) = default;

private:
    std::vector<Character> entries_;
};

// result[i] = lam[w^-1(i)], i.e. the entry at position k moves to position w(k).
LambdaTuple apply_weyl(const Permutation &w, const LambdaTuple &lam);
inline LambdaTuple apply_weyl(const Shuffle &w, const LambdaTuple &lam)
{
    return apply_weyl(w.permutation(), lam);
}

// A character after substituting s. When chi = mu the tag no longer separates entries.
struct PointCharacter {
    CharTag tag;
    Rational exponent;
};

std::vector<PointCharacter> substitute(const LambdaTuple &lam, const Rational &s);

bool same_at_point(std::span<const PointCharacter> a, std::span<const PointCharacter> b, bool char_equal);

} // namespace eisencalc

#endif
