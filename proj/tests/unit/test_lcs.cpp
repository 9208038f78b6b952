#include <doctest.h>

#include <chrono>

#include "lcsm/lcs.hpp"
#include "oracles.hpp"

using namespace lcsm;

TEST_CASE("worked example lengths")
{
    const Word x = parse_word("1213131112");
    const Word y = parse_word("1113121112");
    CHECK(lcs_length(x, y) == 8);
    CHECK(lcs_length_fast(x, y) == 8);
    CHECK(lcs_length(parse_word("1111"), parse_word("2222")) == 0);
    CHECK(lcs_length_fast(parse_word("1111"), parse_word("2222")) == 0);
    CHECK(lcs_length(Word{}, x) == 0);
    CHECK(lcs_length_fast(Word{}, x) == 0);
    CHECK(lcs_length_fast(x, Word{}) == 0);
}

TEST_CASE("identical words")
{
    Rng rng(1);
    for (std::size_t n : {1u, 63u, 64u, 65u, 200u}) {
        const Word w = oracle::random_word(rng, n, 4);
        CHECK(lcs_length(w, w) == n);
        CHECK(lcs_length_fast(w, w) == n);
    }
}

TEST_CASE("fast kernel agrees with the table oracle across block boundaries")
{
    Rng rng(2);
    for (int t = 0; t < 400; ++t) {
        const std::size_t nx = rng.below(200);
        const std::size_t ny = rng.below(200);
        const std::size_t m = 1 + rng.below(6);
        const Word x = oracle::random_word(rng, nx, m);
        const Word y = oracle::random_word(rng, ny, m);
        const std::size_t want = oracle::lcs(x, y);
        REQUIRE(lcs_length(x, y) == want);
        REQUIRE(lcs_length_fast(x, y) == want);
    }
}

TEST_CASE("cached masks answer repeated queries")
{
    Rng rng(3);
    const Word x = oracle::random_word(rng, 130, 3);
    const BitParallelLcs kernel(x);
    CHECK(kernel.pattern_length() == 130);
    for (int t = 0; t < 50; ++t) {
        const Word y = oracle::random_word(rng, rng.below(300), 5);
        CHECK(kernel.length_against(y) == oracle::lcs(x, y));
    }
}

TEST_CASE("symmetry, monotonicity and superadditivity")
{
    Rng rng(4);
    for (int t = 0; t < 300; ++t) {
        const Word x = oracle::random_word(rng, rng.below(40), 3);
        const Word y = oracle::random_word(rng, rng.below(40), 3);
        const std::size_t base = lcs_length(x, y);
        CHECK(lcs_length(y, x) == base);

        Word xl = x;
        xl.letters.push_back(static_cast<Letter>(1 + rng.below(3)));
        CHECK(lcs_length(xl, y) >= base);
        CHECK(lcs_length(xl, y) <= base + 1);

        const Word x2 = oracle::random_word(rng, rng.below(40), 3);
        const Word y2 = oracle::random_word(rng, rng.below(40), 3);
        Word xx = x;
        Word yy = y;
        xx.letters.insert(xx.letters.end(), x2.begin(), x2.end());
        yy.letters.insert(yy.letters.end(), y2.begin(), y2.end());
        CHECK(lcs_length(xx, yy) >= base + lcs_length(x2, y2));
    }
}

TEST_CASE("one-letter changes move the length by at most one")
{
    // Every pair of length-n words over 3 letters for n <= 4, plus random n = 6.
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t states = 1;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            states *= 3;
        }
        for (std::size_t code = 0; code < states; ++code) {
            Word x;
            Word y;
            std::size_t c = code;
            for (std::size_t i = 0; i < 2 * n; ++i) {
                (i < n ? x : y).letters.push_back(static_cast<Letter>(1 + c % 3));
                c /= 3;
            }
            const auto base = static_cast<long>(lcs_length(x, y));
            for (std::size_t pos = 0; pos < 2 * n; ++pos) {
                for (Letter l = 1; l <= 3; ++l) {
                    Word x2 = x;
                    Word y2 = y;
                    (pos < n ? x2.letters[pos] : y2.letters[pos - n]) = l;
                    REQUIRE(std::abs(static_cast<long>(lcs_length(x2, y2)) - base) <= 1);
                }
            }
        }
    }
}

TEST_CASE("backtracking gives the rightmost optimal matching")
{
    const Word x = parse_word("1213131112");
    const Word y = parse_word("1113121112");
    const MatchedAlignment a = lcs_backtrack(x, y);
    REQUIRE(a.size() == 8);
    CHECK(is_valid_matching(x, y, a));
    std::string spelled;
    for (const auto& p : a.pairs) {
        spelled.push_back(static_cast<char>('0' + x[p.i - 1]));
    }
    CHECK(spelled == "11311112");

    const Word w = parse_word("12312");
    const MatchedAlignment id = lcs_backtrack(w, w);
    REQUIRE(id.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(id.pairs[i].i == i + 1);
        CHECK(id.pairs[i].j == i + 1);
    }
    CHECK(lcs_backtrack(parse_word("111"), parse_word("222")).pairs.empty());

    CHECK(a.pairs.front().i == 1);
    CHECK(a.pairs.front().j == 2);

    // Mismatches drop letters of x first: x = 21, y = 12 keeps the 2.
    const MatchedAlignment tie = lcs_backtrack(parse_word("21"), parse_word("12"));
    REQUIRE(tie.size() == 1);
    CHECK(tie.pairs[0].i == 1);
    CHECK(tie.pairs[0].j == 2);
}

TEST_CASE("invalid matchings are rejected")
{
    const Word x = parse_word("121");
    const Word y = parse_word("211");
    CHECK(is_valid_matching(x, y, MatchedAlignment{{{1, 2}, {3, 3}}}));
    CHECK_FALSE(is_valid_matching(x, y, MatchedAlignment{{{2, 1}, {1, 2}}}));
    CHECK_FALSE(is_valid_matching(x, y, MatchedAlignment{{{1, 1}}}));
    CHECK_FALSE(is_valid_matching(x, y, MatchedAlignment{{{4, 1}}}));
    CHECK_FALSE(is_valid_matching(x, y, MatchedAlignment{{{1, 2}, {1, 3}}}));
}

TEST_CASE("enumeration of optimal alignments")
{
    const auto two = enumerate_optimal_alignments(parse_word("12"), parse_word("21"), 100);
    CHECK(two.complete);
    CHECK(two.alignments.size() == 2);

    const auto same = enumerate_optimal_alignments(parse_word("11"), parse_word("11"), 100);
    REQUIRE(same.alignments.size() == 1);
    CHECK(same.alignments[0].size() == 2);

    const Word x = parse_word("1213131112");
    const Word y = parse_word("1113121112");
    const auto all = enumerate_optimal_alignments(x, y, 100000);
    CHECK(all.complete);
    CHECK(all.alignments.size() == oracle::optimal_matchings(x, y).size());
    for (const auto& a : all.alignments) {
        CHECK(a.size() == 8);
        CHECK(is_valid_matching(x, y, a));
    }

    const auto capped = enumerate_optimal_alignments(x, y, 2);
    CHECK_FALSE(capped.complete);
    CHECK(capped.alignments.size() <= 2);
}

TEST_CASE("enumeration matches brute force on random small pairs")
{
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const Word x = oracle::random_word(rng, rng.below(7), 2 + rng.below(2));
        const Word y = oracle::random_word(rng, rng.below(7), 3);
        const auto got = enumerate_optimal_alignments(x, y, 1u << 20);
        REQUIRE(got.complete);
        const auto want = oracle::optimal_matchings(x, y);
        std::set<std::vector<IndexPair>> seen;
        for (const auto& a : got.alignments) {
            seen.insert(a.pairs);
        }
        CHECK(seen.size() == got.alignments.size());
        CHECK(seen == want);
    }
}

TEST_CASE("bit-parallel throughput")
{
    // Reported rather than asserted here; the acceptance binary owns the 20x target.
    Rng rng(6);
    const Word x = oracle::random_word(rng, 1024, 4);
    const Word y = oracle::random_word(rng, 1024, 4);
    using clock = std::chrono::steady_clock;
    auto time = [](auto&& f, int reps) {
        double best = 1e300;
        for (int r = 0; r < 3; ++r) {
            const auto t0 = clock::now();
            std::size_t sink = 0;
            for (int i = 0; i < reps; ++i) {
                sink += f();
            }
            const auto t1 = clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count() / reps);
            CHECK(sink > 0);
        }
        return best;
    };
    const double dp = time([&] { return lcs_length(x, y); }, 5);
    const double fast = time([&] { return lcs_length_fast(x, y); }, 100);
    MESSAGE("DP " << dp * 1e3 << " ms, bit-parallel " << fast * 1e3 << " ms, ratio " << dp / fast);
    CHECK(fast < dp);
}
