#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcsm/rng.hpp"

namespace lcsm {

/// Letter index in [1, m]; letter 0 is never produced.
using Letter = std::uint16_t;

/// Law of a single letter: strictly positive probabilities over m letters
/// with one designated dominant letter.
class AlphabetDist {
public:
    /// Validates and renormalizes `probs`. Throws InvalidArgument on a
    /// non-positive or non-finite entry, a sum further than 1e-12 from one,
    /// or a dominant index outside [1, m].
    static AlphabetDist validate(std::vector<double> probs, std::size_t dominant_index = 1);

    std::size_t size() const noexcept { return probs_.size(); }
    Letter dominant() const noexcept { return dominant_; }
    double prob(Letter letter) const { return probs_.at(letter - 1); }
    std::span<const double> probs() const noexcept { return probs_; }
    double dominant_prob() const noexcept { return probs_[dominant_ - 1]; }
    /// Largest non-dominant probability (the p_2 of the analysis), 0 when m = 1.
    double max_other_prob() const noexcept { return max_other_; }
    /// 1 - p_dominant.
    double other_mass() const noexcept { return other_mass_; }
    bool dominant_is_max() const noexcept;

    /// True when p_dominant > 1/2 and every other letter sits below the
    /// small-probability threshold of the lower-bound theorem.
    bool theorem_regime() const noexcept { return theorem_regime_; }

    Letter sample(Rng& rng) const noexcept;
    /// Draw from the law conditioned on "not the dominant letter".
    /// Requires m >= 2.
    Letter sample_non_dominant(Rng& rng) const noexcept;

private:
    AlphabetDist() = default;

    std::vector<double> probs_;
    std::vector<double> cdf_;
    std::vector<double> other_cdf_;
    std::vector<Letter> other_letters_;
    Letter dominant_ = 1;
    double max_other_ = 0.0;
    double other_mass_ = 0.0;
    bool theorem_regime_ = false;
};

/// A finite word over letters 1..m.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}
    Word(std::initializer_list<Letter> l) : letters(l) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    Letter operator[](std::size_t i) const noexcept { return letters[i]; }
    Letter& operator[](std::size_t i) noexcept { return letters[i]; }
    std::span<const Letter> span() const noexcept { return letters; }
    auto begin() const noexcept { return letters.begin(); }
    auto end() const noexcept { return letters.end(); }

    std::size_t count(Letter letter) const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
};

/// Parses "1213" (digits, alphabets up to 9 letters) or "1,12,3" (comma separated).
Word parse_word(std::string_view text);
/// Inverse of parse_word: bare digits when m <= 9, comma separated otherwise.
std::string format_word(const Word& word, std::size_t alphabet_size);
/// Throws InvalidArgument if some letter is outside [1, m].
void check_word(const Word& word, std::size_t alphabet_size);

/// Two words of equal length.
struct SequencePair {
    Word x;
    Word y;

    SequencePair() = default;
    SequencePair(Word x_, Word y_);

    std::size_t length() const noexcept { return x.size(); }
    friend bool operator==(const SequencePair&, const SequencePair&) = default;
};

/// 2n iid letters: x_1..x_n then y_1..y_n from one stream seeded by `seed`.
SequencePair sample_pair(const AlphabetDist& dist, std::size_t n, std::uint64_t seed);
Word sample_word(const AlphabetDist& dist, std::size_t n, Rng& rng);

/// Counts of each non-dominant letter between consecutive dominant letters.
///
/// gaps[j][i] is the number of copies of letter `letters[j]` between the i-th
/// and (i+1)-th dominant letter (gap 0 is the prefix before the first
/// dominant letter), so every complete gap is closed by a dominant letter.
/// Letters after the last dominant letter form an incomplete gap, reported
/// in `trailing` and not in `gaps`.
struct GapStats {
    std::vector<Letter> letters;
    std::vector<std::vector<std::size_t>> gaps;
    std::vector<std::size_t> trailing;
    bool has_trailing = false;
    std::size_t dominant_count = 0;

    /// Gap list of `letter`; throws InvalidArgument for the dominant letter.
    const std::vector<std::size_t>& of(Letter letter) const;
    /// Sum of all gap and trailing counts plus the dominant count.
    std::size_t total_letters() const noexcept;
};

GapStats gap_statistics(const Word& word, const AlphabetDist& dist);

}  // namespace lcsm
