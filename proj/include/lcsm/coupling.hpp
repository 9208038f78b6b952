#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcsm/words.hpp"

namespace lcsm {

enum class Strand : std::uint8_t { X, Y };

/// A letter slot of a pair; index is 1-based.
struct Position {
    Strand strand = Strand::X;
    std::size_t index = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

/// All non-dominant slots: x positions first, then y, each ascending.
std::vector<Position> non_dominant_positions(const SequencePair& pair, Letter dominant);

/// Uniformly chosen non-dominant slot. Throws InvalidArgument when none is left.
Position pick_non_dominant(const SequencePair& pair, Letter dominant, Rng& rng);

/// X^0, Y^0: 2n iid letters from the non-dominant letters with probabilities
/// p_k / (1 - p_dominant). Throws InvalidArgument for a one-letter alphabet.
SequencePair chain_init(const AlphabetDist& dist, std::size_t n, std::uint64_t seed);

struct StepResult {
    SequencePair pair;
    Position replaced;
};

/// One chain transition: a uniformly chosen non-dominant slot becomes the
/// dominant letter, the choice drawn from a stream seeded by `seed`.
StepResult chain_step(const SequencePair& pair, Letter dominant, std::uint64_t seed);

/// Trajectory (X^k, Y^k), k = start_k..2n, stored as the starting pair and
/// the slots replaced at each step.
class CouplingTrace {
public:
    CouplingTrace(SequencePair start, Letter dominant, std::size_t start_k);

    std::size_t start_k() const noexcept { return start_k_; }
    std::size_t end_k() const noexcept { return start_k_ + replaced_.size(); }
    std::size_t length() const noexcept { return start_.length(); }
    Letter dominant() const noexcept { return dominant_; }

    /// LC_n(k) for k in [start_k, end_k].
    std::size_t lc(std::size_t k) const { return lc_.at(k - start_k_); }
    const std::vector<std::size_t>& lc_values() const noexcept { return lc_; }
    /// LC_n(k+1) - LC_n(k) for k in [start_k, end_k).
    std::vector<int> deltas() const;
    const std::vector<Position>& replaced() const noexcept { return replaced_; }

    /// (X^k, Y^k), rebuilt from the start and the replacement record.
    SequencePair state(std::size_t k) const;

    void push(Position replaced, std::size_t lc_after);
    void set_initial_lc(std::size_t lc) { lc_.assign(1, lc); }

    /// CSV with header "k,lc,delta"; delta is empty on the last row.
    std::string to_csv() const;

private:
    SequencePair start_;
    Letter dominant_;
    std::size_t start_k_;
    std::vector<Position> replaced_;
    std::vector<std::size_t> lc_;
};

/// Full chain from X^0, Y^0 to the all-dominant pair. The initial pair uses
/// substream (seed, 0) and step k+1 uses substream (seed, k+1).
CouplingTrace run_chain(const AlphabetDist& dist, std::size_t n, std::uint64_t seed);
/// Chain from an arbitrary state; start_k is its dominant-letter count.
CouplingTrace run_chain_from(const SequencePair& pair, Letter dominant, std::uint64_t seed);

/// Direct draw from the law of (X, Y) given N_1 = k: k dominant slots chosen
/// uniformly among the 2n, the rest iid from the non-dominant law.
SequencePair sample_conditional(const AlphabetDist& dist, std::size_t n, std::size_t k,
                                std::uint64_t seed);

/// Exact law of a pair of words of length n over m letters; index encodes
/// x_1..x_n, y_1..y_n in base m with x_1 most significant.
struct ProbabilityTable {
    std::size_t m = 1;
    std::size_t n = 0;
    std::vector<double> p;

    std::size_t states() const noexcept { return p.size(); }
    SequencePair pair_at(std::size_t index) const;
    std::size_t index_of(const SequencePair& pair) const;
    double at(const SequencePair& pair) const { return p[index_of(pair)]; }
};

/// Largest enumerable state space, m^(2n).
inline constexpr std::size_t kMaxExactStates = std::size_t{1} << 22;

/// Law of (X, Y) given N_1 = k, by conditioning the product law.
ProbabilityTable conditional_law_exact(const AlphabetDist& dist, std::size_t n, std::size_t k);
/// Law of (X^k, Y^k), by propagating the replacement dynamics from X^0, Y^0.
ProbabilityTable chain_law_exact(const AlphabetDist& dist, std::size_t n, std::size_t k);
/// Unconditional product law of (X, Y).
ProbabilityTable product_law(const AlphabetDist& dist, std::size_t n);
/// P(N_1 = k), N_1 ~ Bin(2n, p_dominant).
double dominant_count_pmf(const AlphabetDist& dist, std::size_t n, std::size_t k);

double total_variation(const ProbabilityTable& a, const ProbabilityTable& b);

struct SwapOutcome {
    Position position;
    int delta = 0;  // LC after - LC before
};

/// Replace the letter at `position` (which must be non-dominant) by the dominant letter.
SwapOutcome swap_at(const SequencePair& pair, Letter dominant, Position position);
/// Same, at a uniformly chosen non-dominant slot.
SwapOutcome swap_experiment(const SequencePair& pair, Letter dominant, std::uint64_t seed);

/// Outcome counts over all equiprobable non-dominant slots.
struct SwapDistribution {
    std::size_t plus = 0;
    std::size_t zero = 0;
    std::size_t minus = 0;

    std::size_t total() const noexcept { return plus + zero + minus; }
    double p_plus() const noexcept { return static_cast<double>(plus) / static_cast<double>(total()); }
    double p_minus() const noexcept { return static_cast<double>(minus) / static_cast<double>(total()); }
};
SwapDistribution exact_swap_distribution(const SequencePair& pair, Letter dominant);

/// True iff LC(j) - LC(i) >= c (j - i) for all integers i <= j in [lo, hi]
/// with j >= i + ell. The interval must lie inside [start_k, end_k].
bool slope_event(const CouplingTrace& trace, double lo, double hi, double ell, double c);

}  // namespace lcsm
