#ifndef EISENCALC_TESTS_SUPPORT_HPP
#define EISENCALC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <eisencalc/classify.hpp>

namespace testing_support
{

using namespace eisencalc;

inline std::mt19937 &rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline Permutation random_permutation(int size)
{
    std::vector<int> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng());
    return Permutation(images);
}

inline Shuffle sh(int m, std::vector<int> images)
{
    const int n = static_cast<int>(images.size()) - m;
    return Shuffle(m, n, std::move(images));
}

inline LFactor lf(long arg)
{
    return {LChar::trivial, {Rational(0), Rational(arg)}};
}

// L(s + c) with the trivial character.
inline LFactor ls(const Rational &c)
{
    return {LChar::trivial, {Rational(1), c}};
}

inline LaurentSeries expand(long arg, int trunc)
{
    return laurent_expand(lf(arg), trunc);
}

// Every critical point with m <= n and m+n <= max_rank.
inline std::vector<CriticalPoint> points_up_to(int max_rank)
{
    std::vector<CriticalPoint> out;
    for (int rank = 2; rank <= max_rank; ++rank) {
        for (int m = 1; 2 * m <= rank; ++m) {
            for (int a = 0; 2 * a <= rank; ++a) {
                out.emplace_back(m, rank - m, a);
            }
        }
    }
    return out;
}

} // namespace testing_support

#endif
