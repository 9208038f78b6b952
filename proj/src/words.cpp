#include "lcsm/words.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "lcsm/bounds.hpp"
#include "lcsm/errors.hpp"

namespace lcsm {

AlphabetDist AlphabetDist::validate(std::vector<double> probs, std::size_t dominant_index)
{
    require(!probs.empty(), "alphabet distribution needs at least one letter");
    require(probs.size() <= 0xfffe, "alphabet too large");
    for (double p : probs) {
        require(std::isfinite(p) && p > 0.0, "letter probabilities must be finite and strictly positive");
    }
    const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    require(std::abs(sum - 1.0) <= 1e-12, "letter probabilities must sum to 1");
    require(dominant_index >= 1 && dominant_index <= probs.size(), "dominant index out of range");

    AlphabetDist d;
    for (double& p : probs) {
        p /= sum;
    }
    d.probs_ = std::move(probs);
    d.dominant_ = static_cast<Letter>(dominant_index);

    double acc = 0.0;
    double other_acc = 0.0;
    for (std::size_t i = 0; i < d.probs_.size(); ++i) {
        acc += d.probs_[i];
        d.cdf_.push_back(acc);
        if (i + 1 != dominant_index) {
            other_acc += d.probs_[i];
            d.other_letters_.push_back(static_cast<Letter>(i + 1));
            d.other_cdf_.push_back(other_acc);
            d.max_other_ = std::max(d.max_other_, d.probs_[i]);
        }
    }
    d.cdf_.back() = 1.0;
    d.other_mass_ = other_acc;
    for (double& c : d.other_cdf_) {
        c /= other_acc;
    }
    if (!d.other_cdf_.empty()) {
        d.other_cdf_.back() = 1.0;
    }

    const std::size_t m = d.probs_.size();
    d.theorem_regime_ = d.dominant_prob() > 0.5 && d.max_other_ <= p2_threshold(m);
    return d;
}

bool AlphabetDist::dominant_is_max() const noexcept
{
    return dominant_prob() >= max_other_;
}

namespace {

Letter draw(std::span<const double> cdf, double u) noexcept
{
    // Linear scan: alphabets are small and the dominant letter comes first
    // in typical use.
    std::size_t i = 0;
    while (i + 1 < cdf.size() && u >= cdf[i]) {
        ++i;
    }
    return static_cast<Letter>(i);
}

}  // namespace

Letter AlphabetDist::sample(Rng& rng) const noexcept
{
    return static_cast<Letter>(draw(cdf_, rng.uniform()) + 1);
}

Letter AlphabetDist::sample_non_dominant(Rng& rng) const noexcept
{
    return other_letters_[draw(other_cdf_, rng.uniform())];
}

std::size_t Word::count(Letter letter) const noexcept
{
    return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), letter));
}

Word parse_word(std::string_view text)
{
    Word w;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            require(c >= '1' && c <= '9', "word letters must be digits 1-9 or comma separated");
            w.letters.push_back(static_cast<Letter>(c - '0'));
        }
        return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, end - start);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        require(ec == std::errc{} && ptr == item.data() + item.size() && value >= 1 && value <= 0xfffe,
                "bad letter '" + std::string(item) + "'");
        w.letters.push_back(static_cast<Letter>(value));
        start = end + 1;
    }
    return w;
}

std::string format_word(const Word& word, std::size_t alphabet_size)
{
    std::string out;
    if (alphabet_size <= 9) {
        out.reserve(word.size());
        for (Letter l : word) {
            out.push_back(static_cast<char>('0' + l));
        }
        return out;
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) {
            out.push_back(',');
        }
        out += std::to_string(word[i]);
    }
    return out;
}

void check_word(const Word& word, std::size_t alphabet_size)
{
    for (Letter l : word) {
        require(l >= 1 && l <= alphabet_size, "letter " + std::to_string(l) + " outside alphabet");
    }
}

SequencePair::SequencePair(Word x_, Word y_) : x(std::move(x_)), y(std::move(y_))
{
    require(x.size() == y.size(), "sequence pair words must have equal length");
}

Word sample_word(const AlphabetDist& dist, std::size_t n, Rng& rng)
{
    Word w;
    w.letters.resize(n);
    for (auto& l : w.letters) {
        l = dist.sample(rng);
    }
    return w;
}

SequencePair sample_pair(const AlphabetDist& dist, std::size_t n, std::uint64_t seed)
{
    require(n >= 1, "word length must be at least 1");
    Rng rng(seed);
    Word x = sample_word(dist, n, rng);
    Word y = sample_word(dist, n, rng);
    return SequencePair(std::move(x), std::move(y));
}

const std::vector<std::size_t>& GapStats::of(Letter letter) const
{
    const auto it = std::find(letters.begin(), letters.end(), letter);
    require(it != letters.end(), "no gap statistics for letter " + std::to_string(letter));
    return gaps[static_cast<std::size_t>(it - letters.begin())];
}

std::size_t GapStats::total_letters() const noexcept
{
    std::size_t total = dominant_count;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        total = std::accumulate(gaps[j].begin(), gaps[j].end(), total);
        total += trailing[j];
    }
    return total;
}

GapStats gap_statistics(const Word& word, const AlphabetDist& dist)
{
    check_word(word, dist.size());
    GapStats g;
    const Letter dom = dist.dominant();
    std::vector<std::size_t> slot(dist.size() + 1, 0);
    for (Letter l = 1; l <= dist.size(); ++l) {
        if (l != dom) {
            slot[l] = g.letters.size();
            g.letters.push_back(l);
        }
    }
    g.gaps.resize(g.letters.size());
    g.trailing.assign(g.letters.size(), 0);

    std::vector<std::size_t> open(g.letters.size(), 0);
    std::size_t open_total = 0;
    for (Letter l : word) {
        if (l == dom) {
            ++g.dominant_count;
            for (std::size_t j = 0; j < g.letters.size(); ++j) {
                g.gaps[j].push_back(open[j]);
                open[j] = 0;
            }
            open_total = 0;
        } else {
            ++open[slot[l]];
            ++open_total;
        }
    }
    g.trailing = open;
    g.has_trailing = open_total > 0;
    return g;
}

}  // namespace lcsm
