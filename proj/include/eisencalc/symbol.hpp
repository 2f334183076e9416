#ifndef EISENCALC_SYMBOL_HPP
#define EISENCALC_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace eisencalc
{

// An abstract zeta constant.
//   C(k), k >= -1: Laurent coefficient of L(t, 1) at t = 0, printed c[k].
//   V(b, k), b >= 2, k >= 0: Taylor coefficient of L(b + t, 1), printed v[b][k].
// c[-1], c[0] and every v[b][0] are axiomatized nonzero, and the whole family
// is treated as algebraically independent.
class Symbol
{
public:
    static constexpr int max_index = 62;

    static Symbol c(int k);
    static Symbol v(int base, int k);
    static Symbol from_id(std::uint32_t id);

    bool is_c() const
    {
        return base_ == 0;
    }
    int base() const
    {
        return base_;
    }
    int index() const
    {
        return index_;
    }
    bool axiomatized_nonzero() const
    {
        return is_c() ? (index_ == -1 || index_ == 0) : index_ == 0;
    }

    // Dense ordering key; C symbols sort before V symbols.
    std::uint32_t id() const
    {
        return static_cast<std::uint32_t>(base_) * 64u + static_cast<std::uint32_t>(index_ + 1);
    }

    std::string str() const;

    friend bool operator==(const Symbol &, const Symbol &) = default;
    friend std::strong_ordering operator<=>(const Symbol &a, const Symbol &b)
    {
        return a.id() <=> b.id();
    }

private:
    Symbol(int base, int index) : base_(base), index_(index) {}
    int base_;
    int index_;
};

// Parses "c[k]" or "v[b][k]" at the front of `text`; returns characters consumed.
std::size_t parse_symbol(std::string_view text, Symbol &out);

} // namespace eisencalc

#endif
