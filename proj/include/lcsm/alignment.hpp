#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lcsm/lcs.hpp"
#include "lcsm/words.hpp"

namespace lcsm {

/// Cell-by-cell dominant-letter differences (x-strand count minus y-strand count).
struct AlignmentVector {
    std::vector<int> v;

    AlignmentVector() = default;
    AlignmentVector(std::initializer_list<int> values) : v(values) {}
    explicit AlignmentVector(std::vector<int> values) : v(std::move(values)) {}

    std::size_t size() const noexcept { return v.size(); }
    bool empty() const noexcept { return v.empty(); }
    int operator[](std::size_t i) const noexcept { return v[i]; }

    friend auto operator<=>(const AlignmentVector&, const AlignmentVector&) = default;
};

/// "-1,0"; the empty vector formats as "".
std::string format_vector(const AlignmentVector& v);
AlignmentVector parse_vector(std::string_view text);

/// Realized cells of an admissible vector. Boundaries are 1-based word
/// positions with pi[0] = nu[0] = 0; cell i spans x(pi[i-1], pi[i]] and
/// y(nu[i-1], nu[i]] and is closed by the matched non-dominant pair
/// x[pi[i]] = y[nu[i]]. Dominant counts include the closing positions, which
/// hold non-dominant letters and so contribute nothing.
struct CellDecomposition {
    AlignmentVector v;
    std::vector<std::size_t> pi;
    std::vector<std::size_t> nu;
    std::vector<std::size_t> x_dominant;
    std::vector<std::size_t> y_dominant;
    std::vector<std::size_t> aligned_dominant;  // S_v(i) = min of the two counts
    std::size_t trailing = 0;                   // r_v
    std::vector<Letter> cell_letters;
    /// True where several coordinatewise-minimal closing pairs were available.
    std::vector<bool> ambiguous;

    std::size_t cells() const noexcept { return v.size(); }
    bool any_ambiguous() const noexcept;
};

struct Inadmissible {
    std::size_t failed_cell = 0;  // 1-based first cell with no closing pair
};

using DecodeResult = std::variant<CellDecomposition, Inadmissible>;

/// How a closing pair is chosen among several coordinatewise-minimal ones.
enum class TieBreak {
    /// Lexicographically smallest minimal pair whose choice still lets every
    /// later cell close; decides admissibility exactly.
    Backtracking,
    /// Lexicographically smallest minimal pair, no look-ahead.
    Lexicographic,
};

/// Precomputed prefix counts of a word pair, shared by every alignment
/// operation on that pair. The words may differ in length.
class AlignmentModel {
public:
    AlignmentModel(const Word& x, const Word& y, Letter dominant = 1);

    const Word& x() const noexcept { return x_; }
    const Word& y() const noexcept { return y_; }
    Letter dominant() const noexcept { return dominant_; }
    std::size_t x_dominant_total() const noexcept { return cx_.back(); }
    std::size_t y_dominant_total() const noexcept { return cy_.back(); }
    /// Non-dominant letters in both words.
    std::size_t non_dominant_total() const noexcept;

    DecodeResult decode(const AlignmentVector& v, TieBreak tie = TieBreak::Backtracking) const;
    std::optional<CellDecomposition> decode_admissible(const AlignmentVector& v) const;

    /// Vector of the cells closed by the non-dominant pairs of `a`.
    AlignmentVector encode(const MatchedAlignment& a) const;

    /// Coordinatewise-minimal pairs (s, t) > (s0, t0) with x[s] = y[t]
    /// non-dominant and dominant-count difference `diff` over (s0, s] and
    /// (t0, t]. Sorted by s ascending (t descending).
    std::vector<IndexPair> minimal_pairs(IndexPair start, int diff) const;

    std::size_t x_dominant_between(std::size_t from, std::size_t to) const noexcept
    {
        return cx_[to] - cx_[from];
    }
    std::size_t y_dominant_between(std::size_t from, std::size_t to) const noexcept
    {
        return cy_[to] - cy_[from];
    }

private:
    Word x_;
    Word y_;
    Letter dominant_;
    std::vector<std::size_t> cx_;  // cx_[s] = dominant letters in x[1..s]
    std::vector<std::size_t> cy_;
    // y positions (1-based) of each non-dominant letter, ascending.
    std::vector<std::vector<std::size_t>> y_positions_;
};

DecodeResult decode(const Word& x, const Word& y, const AlignmentVector& v, Letter dominant = 1,
                    TieBreak tie = TieBreak::Backtracking);

/// |v| + sum S_v(i) + r_v.
std::size_t lambda_c(const CellDecomposition& d);

struct AdmissibleEnumeration {
    std::vector<AlignmentVector> vectors;  // includes the empty vector
    bool complete = true;
    std::size_t visited = 0;
};

/// Every admissible v with |v| <= k_max and v_i in [-(dominant letters of y),
/// dominant letters of x]. `budget` bounds the number of extension attempts.
AdmissibleEnumeration enumerate_admissible(const Word& x, const Word& y, std::size_t k_max,
                                           std::size_t budget, Letter dominant = 1);

/// Encoding of the canonical backtracked optimal alignment.
AlignmentVector encode_optimal(const Word& x, const Word& y, Letter dominant = 1);

struct WeakSideStats {
    std::vector<std::size_t> per_cell;  // N_v^-(i)
    std::size_t n_v_minus = 0;
    std::size_t n_gt1 = 0;
};

/// Non-dominant letters strictly inside each nonzero cell on the strand with
/// fewer dominant letters; zero cells count 0.
WeakSideStats weak_side(const AlignmentModel& model, const CellDecomposition& d);
WeakSideStats weak_side(const Word& x, const Word& y, const CellDecomposition& d,
                        Letter dominant = 1);

/// Interior matched non-dominant pair of a zero cell whose dominant-count
/// difference over the preceding stretch is +1 or -1.
struct CellSplit {
    std::size_t j = 0;   // position in x
    std::size_t jp = 0;  // position in y
    int diff = 0;        // +1 or -1
};

/// Leftmost split of cell `cell` (1-based): smallest j, then smallest jp.
/// Throws InvalidArgument if v_cell != 0 or the index is out of range.
std::optional<CellSplit> find_split(const AlignmentModel& model, const CellDecomposition& d,
                                    std::size_t cell);
bool is_breakable(const Word& x, const Word& y, const CellDecomposition& d, std::size_t cell,
                  Letter dominant = 1);

/// Replaces v_cell = 0 by (diff, -diff) at the leftmost split.
/// Throws InvalidArgument when `v` is inadmissible or the cell is not breakable.
AlignmentVector break_cell(const AlignmentModel& model, const AlignmentVector& v, std::size_t cell);
AlignmentVector break_cell(const Word& x, const Word& y, const AlignmentVector& v,
                           std::size_t cell, Letter dominant = 1);

enum class Membership { Member, NotMember, Unknown };

struct BnResult {
    Membership status = Membership::Unknown;
    std::optional<AlignmentVector> witness;
    bool exhaustive = false;
    std::size_t candidates = 0;  // distinct optimal vectors examined
    std::size_t best_n_v_minus = 0;

    bool member() const noexcept { return status == Membership::Member; }
};

/// Whether some optimal v has N_v^- >= K N_{>1}/m and 2|v| <= K N_{>1}/(2m).
/// Exhaustive over optimal matched alignments when at most `search_budget`
/// exist; otherwise a breaking search from the canonical encoding, whose
/// negative answer is Unknown.
BnResult in_B_n(const Word& x, const Word& y, double K, std::size_t m, std::size_t search_budget,
                Letter dominant = 1);

}  // namespace lcsm
