#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcsm/words.hpp"

namespace lcsm {

/// LCS length by the quadratic recurrence, O(|x||y|) time, O(min(|x|,|y|)) space.
std::size_t lcs_length(const Word& x, const Word& y);

/// LCS length by bit-parallel row updates (one bit per position of x,
/// 64 positions per machine word, carries chained across words).
std::size_t lcs_length_fast(const Word& x, const Word& y);

/// Bit-parallel kernel with the match masks of a fixed first word cached,
/// for repeated queries against many second words.
class BitParallelLcs {
public:
    explicit BitParallelLcs(const Word& x);

    std::size_t length_against(const Word& y) const;
    std::size_t pattern_length() const noexcept { return length_; }

private:
    std::size_t length_ = 0;
    std::size_t blocks_ = 0;
    std::uint64_t last_mask_ = 0;
    // masks_[letter * blocks_ + b]; rows for letters absent from x are zero.
    std::vector<std::uint64_t> masks_;
    std::size_t max_letter_ = 0;
};

/// 1-based positions of a matched letter pair.
struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// Strictly increasing matched pairs with x[i] = y[j].
struct MatchedAlignment {
    std::vector<IndexPair> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
    friend auto operator<=>(const MatchedAlignment&, const MatchedAlignment&) = default;
};

/// True iff `a` is strictly increasing in both coordinates, in range, and
/// every pair is a genuine letter match.
bool is_valid_matching(const Word& x, const Word& y, const MatchedAlignment& a);

/// One optimal alignment. Walking back from (|x|, |y|): take the match when
/// x[i] = y[j]; otherwise drop a letter of x when that keeps the optimum,
/// else drop a letter of y. Matches sit as far right as possible in y.
MatchedAlignment lcs_backtrack(const Word& x, const Word& y);

struct AlignmentEnumeration {
    std::vector<MatchedAlignment> alignments;  // sorted, distinct
    bool complete = true;                      // false when `cap` cut the search
};

/// Every distinct optimal matched-pair set, up to `cap` of them.
AlignmentEnumeration enumerate_optimal_alignments(const Word& x, const Word& y, std::size_t cap);

}  // namespace lcsm
