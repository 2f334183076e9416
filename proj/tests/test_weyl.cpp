#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace testing_support;

namespace
{

// All permutations of 1..m+n that increase on both blocks, by filtering S_{m+n}.
std::vector<std::vector<int>> filtered_shuffles(int m, int n)
{
    std::vector<int> p(static_cast<std::size_t>(m + n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        if (std::is_sorted(p.begin(), p.begin() + m) && std::is_sorted(p.begin() + m, p.end())) {
            out.push_back(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

long binomial(int a, int b)
{
    long r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

} // namespace

TEST_SUITE("weyl")
{

TEST_CASE("enumerate small cells")
{
    const auto one = enumerate_shuffles(1, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].one_based() == std::vector<int>{1, 2});
    CHECK(one[1].one_based() == std::vector<int>{2, 1});
    CHECK(enumerate_shuffles(2, 2).size() == 6);
}

TEST_CASE("enumeration matches filtered permutations")
{
    for (int rank = 2; rank <= 8; ++rank) {
        for (int m = 1; m < rank; ++m) {
            const auto all = enumerate_shuffles(m, rank - m);
            std::vector<std::vector<int>> images;
            for (const auto &w : all) {
                images.push_back(w.one_based());
            }
            CHECK(images == filtered_shuffles(m, rank - m));
        }
    }
}

TEST_CASE("enumeration count is binomial up to rank 10")
{
    for (int rank = 2; rank <= 10; ++rank) {
        for (int m = 1; m < rank; ++m) {
            CHECK(static_cast<long>(enumerate_shuffles(m, rank - m).size()) == binomial(rank, m));
            CHECK(shuffle_count(m, rank - m) == std::to_string(binomial(rank, m)));
        }
    }
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_shuffles(3, 3, 5), EnumerationTooLarge);
    try {
        enumerate_shuffles(3, 3, 5);
    } catch (const EnumerationTooLarge &e) {
        CHECK(std::string(e.what()).find("20") != std::string::npos);
    }
}

TEST_CASE("shuffle validation")
{
    CHECK(is_shuffle(2, 2, std::vector<int>{2, 4, 1, 3}));
    CHECK_FALSE(is_shuffle(2, 2, std::vector<int>{4, 2, 1, 3}));
    CHECK_FALSE(is_shuffle(2, 2, std::vector<int>{1, 1, 2, 3}));
    CHECK_THROWS_AS(Shuffle(2, 2, {4, 2, 1, 3}), Error);
    CHECK(parse_images("3,4,1,2") == std::vector<int>{3, 4, 1, 2});
    CHECK(format_images(std::vector<int>{3, 4, 1, 2}) == "3,4,1,2");
}

TEST_CASE("induced character")
{
    const auto lam = LambdaTuple::induced(2, 3);
    REQUIRE(lam.size() == 5);
    // (s-(m-1))/2 + (i-1) and (-s-(n-1))/2 + (j-1)
    CHECK(lam[0].tag == CharTag::chi);
    CHECK(lam[0].exponent == AffineExponent(ratio(1, 2), ratio(-1, 2)));
    CHECK(lam[1].exponent == AffineExponent(ratio(1, 2), ratio(1, 2)));
    CHECK(lam[2].tag == CharTag::mu);
    CHECK(lam[2].exponent == AffineExponent(ratio(-1, 2), Rational(-1)));
    CHECK(lam[4].exponent == AffineExponent(ratio(-1, 2), Rational(1)));
}

TEST_CASE("apply_weyl examples")
{
    const auto lam = LambdaTuple::induced(1, 1);
    CHECK(apply_weyl(Shuffle::identity(1, 1), lam) == lam);
    const auto swapped = apply_weyl(sh(1, {2, 1}), lam);
    CHECK(swapped[0] == lam[1]);
    CHECK(swapped[1] == lam[0]);

    const auto at1 = substitute(apply_weyl(sh(2, {3, 4, 1, 2}), LambdaTuple::induced(2, 2)), Rational(1));
    std::vector<Rational> exps;
    for (const auto &c : at1) {
        exps.push_back(c.exponent);
    }
    CHECK(exps == std::vector<Rational>{Rational(-1), Rational(0), Rational(0), Rational(1)});
    CHECK(at1[0].tag == CharTag::mu);
    CHECK(at1[3].tag == CharTag::chi);
}

TEST_CASE("apply_weyl is a group action")
{
    for (int size = 2; size <= 8; ++size) {
        const int m = size / 2;
        const auto lam = LambdaTuple::induced(m, size - m);
        CHECK(apply_weyl(Permutation::identity(size), lam) == lam);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_permutation(size);
            const auto b = random_permutation(size);
            CHECK(apply_weyl(a * b, lam) == apply_weyl(a, apply_weyl(b, lam)));
            const auto moved = apply_weyl(a, lam);
            for (int i = 1; i <= size; ++i) {
                CHECK(moved[i - 1] == lam[a.inverse()(i) - 1]);
            }
        }
    }
    CHECK_THROWS_AS(apply_weyl(Permutation::identity(3), LambdaTuple::induced(2, 2)), Error);
}

TEST_CASE("m_w examples")
{
    CHECK(m_w(Shuffle::identity(2, 3)) == 3);
    CHECK(m_w(sh(2, {3, 4, 1, 2})) == 1);
    CHECK(m_w(sh(2, {1, 4, 2, 3})) == 2);
}

TEST_CASE("moved first-block positions are contiguous")
{
    for (int rank = 2; rank <= 9; ++rank) {
        for (int m = 1; m < rank; ++m) {
            for (const auto &w : enumerate_shuffles(m, rank - m)) {
                const int mw = m_w(w);
                for (int i = 1; i <= m; ++i) {
                    CHECK((w(i) > i) == (i >= mw));
                }
            }
        }
    }
}

TEST_CASE("inversion pairs")
{
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(inversion_pairs(Shuffle::identity(2, 2)).empty());
    CHECK(inversion_pairs(sh(1, {2, 1})) == Pairs{{1, 2}});
    CHECK(inversion_pairs(sh(2, {2, 4, 1, 3})) == Pairs{{1, 3}, {2, 3}, {2, 4}});
}

TEST_CASE("inversion pairs are all cross-block inversions")
{
    for (int rank = 2; rank <= 8; ++rank) {
        for (int m = 1; m < rank; ++m) {
            for (const auto &w : enumerate_shuffles(m, rank - m)) {
                std::vector<std::pair<int, int>> scan;
                for (int i = 1; i <= rank; ++i) {
                    for (int j = i + 1; j <= rank; ++j) {
                        if (w(i) > w(j)) {
                            scan.emplace_back(i, j);
                        }
                    }
                }
                auto pairs = inversion_pairs(w);
                std::sort(pairs.begin(), pairs.end());
                CHECK(pairs == scan);
                for (const auto &[i, j] : pairs) {
                    CHECK(i <= m);
                    CHECK(j > m);
                }
            }
        }
    }
}

}
