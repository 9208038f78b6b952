#include "lcsm/lcs.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace lcsm {

std::size_t lcs_length(const Word& x, const Word& y)
{
    const Word& outer = x.size() >= y.size() ? x : y;
    const Word& inner = x.size() >= y.size() ? y : x;
    std::vector<std::uint32_t> row(inner.size() + 1, 0);
    for (Letter a : outer) {
        std::uint32_t diag = 0;  // row[j-1] from the previous outer step
        for (std::size_t j = 1; j <= inner.size(); ++j) {
            const std::uint32_t up = row[j];
            row[j] = a == inner[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row.back();
}

BitParallelLcs::BitParallelLcs(const Word& x)
    : length_(x.size()), blocks_((x.size() + 63) / 64)
{
    for (Letter l : x) {
        max_letter_ = std::max<std::size_t>(max_letter_, l);
    }
    masks_.assign((max_letter_ + 1) * blocks_, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        masks_[x[i] * blocks_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    last_mask_ = length_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (length_ % 64)) - 1;
}

std::size_t BitParallelLcs::length_against(const Word& y) const
{
    if (blocks_ == 0) {
        return 0;
    }
    // Bit i of v is 0 iff row value steps up at column i; LCS = zeros of v.
    std::vector<std::uint64_t> v(blocks_, ~std::uint64_t{0});
    for (Letter c : y) {
        if (c > max_letter_) {
            continue;
        }
        const std::uint64_t* match = &masks_[c * blocks_];
        std::uint64_t carry = 0;
        for (std::size_t b = 0; b < blocks_; ++b) {
            const std::uint64_t vb = v[b];
            const std::uint64_t u = vb & match[b];
            const std::uint64_t s1 = vb + u;
            const std::uint64_t c1 = s1 < vb;
            const std::uint64_t s2 = s1 + carry;
            carry = c1 | (s2 < s1);
            v[b] = s2 | (vb - u);
        }
    }
    std::size_t ones = 0;
    for (std::size_t b = 0; b + 1 < blocks_; ++b) {
        ones += static_cast<std::size_t>(std::popcount(v[b]));
    }
    ones += static_cast<std::size_t>(std::popcount(v[blocks_ - 1] & last_mask_));
    return length_ - ones;
}

std::size_t lcs_length_fast(const Word& x, const Word& y)
{
    return BitParallelLcs(x).length_against(y);
}

bool is_valid_matching(const Word& x, const Word& y, const MatchedAlignment& a)
{
    IndexPair prev{0, 0};
    for (const auto& p : a.pairs) {
        if (p.i <= prev.i || p.j <= prev.j || p.i > x.size() || p.j > y.size()) {
            return false;
        }
        if (x[p.i - 1] != y[p.j - 1]) {
            return false;
        }
        prev = p;
    }
    return true;
}

namespace {

/// Full (|x|+1) x (|y|+1) prefix table, row-major.
class PrefixTable {
public:
    PrefixTable(const Word& x, const Word& y) : cols_(y.size() + 1), cells_((x.size() + 1) * cols_, 0)
    {
        for (std::size_t i = 1; i <= x.size(); ++i) {
            for (std::size_t j = 1; j <= y.size(); ++j) {
                at(i, j) = x[i - 1] == y[j - 1] ? at(i - 1, j - 1) + 1
                                                 : std::max(at(i - 1, j), at(i, j - 1));
            }
        }
    }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

private:
    std::uint32_t& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

    std::size_t cols_;
    std::vector<std::uint32_t> cells_;
};

}  // namespace

MatchedAlignment lcs_backtrack(const Word& x, const Word& y)
{
    const PrefixTable table(x, y);
    MatchedAlignment out;
    std::size_t i = x.size();
    std::size_t j = y.size();
    while (i > 0 && j > 0) {
        if (x[i - 1] == y[j - 1]) {
            out.pairs.push_back({i, j});
            --i;
            --j;
        } else if (table(i - 1, j) == table(i, j)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

namespace {

struct Enumerator {
    const Word& x;
    const Word& y;
    const PrefixTable& table;
    std::size_t cap;
    std::set<MatchedAlignment> found;
    std::vector<IndexPair> suffix;  // pairs chosen so far, last pair first
    bool complete = true;

    // All optimal matchings of the prefixes x[1..i], y[1..j] of size table(i, j),
    // prepended to `suffix`. The last pair (a, b) of such a matching satisfies
    // x[a] = y[b] and table(a-1, b-1) = table(i, j) - 1.
    void run(std::size_t i, std::size_t j)
    {
        if (!complete) {
            return;
        }
        const std::uint32_t target = table(i, j);
        if (target == 0) {
            MatchedAlignment a;
            a.pairs.assign(suffix.rbegin(), suffix.rend());
            if (found.size() >= cap && !found.contains(a)) {
                complete = false;
                return;
            }
            found.insert(std::move(a));
            return;
        }
        for (std::size_t a = i; a >= 1; --a) {
            if (table(a, j) < target) {
                break;
            }
            for (std::size_t b = j; b >= 1; --b) {
                if (table(a, b) < target) {
                    break;
                }
                if (x[a - 1] == y[b - 1] && table(a - 1, b - 1) + 1 == target) {
                    suffix.push_back({a, b});
                    run(a - 1, b - 1);
                    suffix.pop_back();
                    if (!complete) {
                        return;
                    }
                }
            }
        }
    }
};

}  // namespace

AlignmentEnumeration enumerate_optimal_alignments(const Word& x, const Word& y, std::size_t cap)
{
    const PrefixTable table(x, y);
    Enumerator e{x, y, table, cap, {}, {}, true};
    e.run(x.size(), y.size());
    AlignmentEnumeration out;
    out.alignments.assign(e.found.begin(), e.found.end());
    out.complete = e.complete;
    return out;
}

}  // namespace lcsm
