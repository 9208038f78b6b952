#include "lcsm/coupling.hpp"

#include <cmath>
#include <sstream>

#include "lcsm/errors.hpp"
#include "lcsm/lcs.hpp"

namespace lcsm {

namespace {

Letter& slot(SequencePair& pair, Position p)
{
    return p.strand == Strand::X ? pair.x[p.index - 1] : pair.y[p.index - 1];
}

Letter slot(const SequencePair& pair, Position p)
{
    return p.strand == Strand::X ? pair.x[p.index - 1] : pair.y[p.index - 1];
}

std::size_t count_non_dominant(const SequencePair& pair, Letter dominant)
{
    return 2 * pair.length() - pair.x.count(dominant) - pair.y.count(dominant);
}

}  // namespace

std::vector<Position> non_dominant_positions(const SequencePair& pair, Letter dominant)
{
    std::vector<Position> out;
    for (std::size_t i = 0; i < pair.x.size(); ++i) {
        if (pair.x[i] != dominant) {
            out.push_back({Strand::X, i + 1});
        }
    }
    for (std::size_t i = 0; i < pair.y.size(); ++i) {
        if (pair.y[i] != dominant) {
            out.push_back({Strand::Y, i + 1});
        }
    }
    return out;
}

Position pick_non_dominant(const SequencePair& pair, Letter dominant, Rng& rng)
{
    const std::size_t total = count_non_dominant(pair, dominant);
    require(total > 0, "no non-dominant letter left to replace");
    std::size_t target = static_cast<std::size_t>(rng.below(total));
    for (std::size_t i = 0; i < pair.x.size(); ++i) {
        if (pair.x[i] != dominant && target-- == 0) {
            return {Strand::X, i + 1};
        }
    }
    for (std::size_t i = 0; i < pair.y.size(); ++i) {
        if (pair.y[i] != dominant && target-- == 0) {
            return {Strand::Y, i + 1};
        }
    }
    throw std::logic_error("non-dominant count out of sync");
}

SequencePair chain_init(const AlphabetDist& dist, std::size_t n, std::uint64_t seed)
{
    require(dist.size() >= 2, "the chain needs a non-dominant letter to start from");
    require(n >= 1, "word length must be at least 1");
    Rng rng(seed);
    Word x;
    Word y;
    x.letters.resize(n);
    y.letters.resize(n);
    for (auto& l : x.letters) {
        l = dist.sample_non_dominant(rng);
    }
    for (auto& l : y.letters) {
        l = dist.sample_non_dominant(rng);
    }
    return SequencePair(std::move(x), std::move(y));
}

StepResult chain_step(const SequencePair& pair, Letter dominant, std::uint64_t seed)
{
    Rng rng(seed);
    const Position p = pick_non_dominant(pair, dominant, rng);
    StepResult out{pair, p};
    slot(out.pair, p) = dominant;
    return out;
}

CouplingTrace::CouplingTrace(SequencePair start, Letter dominant, std::size_t start_k)
    : start_(std::move(start)), dominant_(dominant), start_k_(start_k)
{
}

std::vector<int> CouplingTrace::deltas() const
{
    std::vector<int> out;
    for (std::size_t i = 1; i < lc_.size(); ++i) {
        out.push_back(static_cast<int>(lc_[i]) - static_cast<int>(lc_[i - 1]));
    }
    return out;
}

SequencePair CouplingTrace::state(std::size_t k) const
{
    require(k >= start_k_ && k <= end_k(), "trace index out of range");
    SequencePair s = start_;
    for (std::size_t i = 0; i < k - start_k_; ++i) {
        slot(s, replaced_[i]) = dominant_;
    }
    return s;
}

void CouplingTrace::push(Position replaced, std::size_t lc_after)
{
    replaced_.push_back(replaced);
    lc_.push_back(lc_after);
}

std::string CouplingTrace::to_csv() const
{
    std::ostringstream os;
    os << "k,lc,delta\n";
    for (std::size_t i = 0; i < lc_.size(); ++i) {
        os << start_k_ + i << ',' << lc_[i] << ',';
        if (i + 1 < lc_.size()) {
            os << static_cast<long long>(lc_[i + 1]) - static_cast<long long>(lc_[i]);
        }
        os << '\n';
    }
    return os.str();
}

CouplingTrace run_chain_from(const SequencePair& pair, Letter dominant, std::uint64_t seed)
{
    const std::size_t start_k = pair.x.count(dominant) + pair.y.count(dominant);
    CouplingTrace trace(pair, dominant, start_k);
    SequencePair state = pair;
    trace.set_initial_lc(lcs_length_fast(state.x, state.y));
    for (std::size_t k = start_k; k < 2 * pair.length(); ++k) {
        Rng rng(derive_seed(seed, {k + 1}));
        const Position p = pick_non_dominant(state, dominant, rng);
        slot(state, p) = dominant;
        trace.push(p, lcs_length_fast(state.x, state.y));
    }
    return trace;
}

CouplingTrace run_chain(const AlphabetDist& dist, std::size_t n, std::uint64_t seed)
{
    return run_chain_from(chain_init(dist, n, derive_seed(seed, {0})), dist.dominant(), seed);
}

SequencePair sample_conditional(const AlphabetDist& dist, std::size_t n, std::size_t k,
                                std::uint64_t seed)
{
    require(n >= 1, "word length must be at least 1");
    require(k <= 2 * n, "dominant count exceeds 2n");
    require(k == 2 * n || dist.size() >= 2, "no non-dominant letter to fill the remaining slots");
    Rng rng(seed);
    std::vector<std::size_t> slots(2 * n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        slots[i] = i;
    }
    // Partial Fisher-Yates: the first k entries become a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
        std::swap(slots[i], slots[j]);
    }
    std::vector<Letter> letters(2 * n, 0);
    for (std::size_t i = 0; i < k; ++i) {
        letters[slots[i]] = dist.dominant();
    }
    for (auto& l : letters) {
        if (l == 0) {
            l = dist.sample_non_dominant(rng);
        }
    }
    Word x(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<long>(n)));
    Word y(std::vector<Letter>(letters.begin() + static_cast<long>(n), letters.end()));
    return SequencePair(std::move(x), std::move(y));
}

SequencePair ProbabilityTable::pair_at(std::size_t index) const
{
    std::vector<Letter> letters(2 * n);
    for (std::size_t i = 2 * n; i-- > 0;) {
        letters[i] = static_cast<Letter>(index % m + 1);
        index /= m;
    }
    Word x(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<long>(n)));
    Word y(std::vector<Letter>(letters.begin() + static_cast<long>(n), letters.end()));
    return SequencePair(std::move(x), std::move(y));
}

std::size_t ProbabilityTable::index_of(const SequencePair& pair) const
{
    std::size_t index = 0;
    for (Letter l : pair.x) {
        index = index * m + (l - 1);
    }
    for (Letter l : pair.y) {
        index = index * m + (l - 1);
    }
    return index;
}

namespace {

ProbabilityTable empty_table(const AlphabetDist& dist, std::size_t n)
{
    require(n >= 1, "word length must be at least 1");
    const std::size_t m = dist.size();
    std::size_t states = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        require(states <= kMaxExactStates / m, "state space m^(2n) too large for exact enumeration");
        states *= m;
    }
    ProbabilityTable t;
    t.m = m;
    t.n = n;
    t.p.assign(states, 0.0);
    return t;
}

/// Digits (letter - 1) of a table index, most significant first.
void digits_of(std::size_t index, std::size_t m, std::vector<std::size_t>& digits)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = index % m;
        index /= m;
    }
}

}  // namespace

ProbabilityTable product_law(const AlphabetDist& dist, std::size_t n)
{
    ProbabilityTable t = empty_table(dist, n);
    std::vector<std::size_t> digits(2 * n);
    for (std::size_t idx = 0; idx < t.states(); ++idx) {
        digits_of(idx, t.m, digits);
        double p = 1.0;
        for (std::size_t d : digits) {
            p *= dist.probs()[d];
        }
        t.p[idx] = p;
    }
    return t;
}

double dominant_count_pmf(const AlphabetDist& dist, std::size_t n, std::size_t k)
{
    const double trials = 2.0 * static_cast<double>(n);
    if (static_cast<double>(k) > trials) {
        return 0.0;
    }
    const double p = dist.dominant_prob();
    const double q = dist.other_mass();
    const double kk = static_cast<double>(k);
    if (q <= 0.0) {
        return kk == trials ? 1.0 : 0.0;
    }
    const double log_choose = std::lgamma(trials + 1) - std::lgamma(kk + 1) - std::lgamma(trials - kk + 1);
    return std::exp(log_choose + kk * std::log(p) + (trials - kk) * std::log(q));
}

ProbabilityTable conditional_law_exact(const AlphabetDist& dist, std::size_t n, std::size_t k)
{
    require(k <= 2 * n, "dominant count exceeds 2n");
    ProbabilityTable t = product_law(dist, n);
    const std::size_t dom = dist.dominant() - 1u;
    std::vector<std::size_t> digits(2 * n);
    double mass = 0.0;
    for (std::size_t idx = 0; idx < t.states(); ++idx) {
        digits_of(idx, t.m, digits);
        std::size_t count = 0;
        for (std::size_t d : digits) {
            count += d == dom ? 1 : 0;
        }
        if (count != k) {
            t.p[idx] = 0.0;
        }
        mass += t.p[idx];
    }
    require(mass > 0.0, "conditioning event N_1 = k has probability zero");
    for (double& p : t.p) {
        p /= mass;
    }
    return t;
}

ProbabilityTable chain_law_exact(const AlphabetDist& dist, std::size_t n, std::size_t k)
{
    require(dist.size() >= 2, "the chain needs a non-dominant letter to start from");
    require(k <= 2 * n, "dominant count exceeds 2n");
    ProbabilityTable t = empty_table(dist, n);
    const std::size_t m = t.m;
    const std::size_t dom = dist.dominant() - 1u;
    const double other = dist.other_mass();
    std::vector<std::size_t> digits(2 * n);

    for (std::size_t idx = 0; idx < t.states(); ++idx) {
        digits_of(idx, m, digits);
        double p = 1.0;
        for (std::size_t d : digits) {
            p = d == dom ? 0.0 : p * dist.probs()[d] / other;
        }
        t.p[idx] = p;
    }

    // place[i] = m^(2n-1-i), the weight of slot i in the index.
    std::vector<std::size_t> place(2 * n, 1);
    for (std::size_t i = 2 * n - 1; i-- > 0;) {
        place[i] = place[i + 1] * m;
    }
    std::vector<double> next(t.states());
    for (std::size_t step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t idx = 0; idx < t.states(); ++idx) {
            if (t.p[idx] == 0.0) {
                continue;
            }
            digits_of(idx, m, digits);
            std::size_t free = 0;
            for (std::size_t d : digits) {
                free += d != dom ? 1 : 0;
            }
            const double share = t.p[idx] / static_cast<double>(free);
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (digits[i] == dom) {
                    continue;
                }
                const std::size_t to = idx - digits[i] * place[i] + dom * place[i];
                next[to] += share;
            }
        }
        t.p.swap(next);
    }
    return t;
}

double total_variation(const ProbabilityTable& a, const ProbabilityTable& b)
{
    require(a.m == b.m && a.n == b.n, "tables over different spaces");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.states(); ++i) {
        sum += std::abs(a.p[i] - b.p[i]);
    }
    return 0.5 * sum;
}

SwapOutcome swap_at(const SequencePair& pair, Letter dominant, Position position)
{
    const std::size_t limit = position.strand == Strand::X ? pair.x.size() : pair.y.size();
    require(position.index >= 1 && position.index <= limit, "swap position out of range");
    require(slot(pair, position) != dominant, "swap position already holds the dominant letter");
    const auto before = static_cast<long long>(lcs_length_fast(pair.x, pair.y));
    SequencePair after = pair;
    slot(after, position) = dominant;
    const auto now = static_cast<long long>(lcs_length_fast(after.x, after.y));
    return {position, static_cast<int>(now - before)};
}

SwapOutcome swap_experiment(const SequencePair& pair, Letter dominant, std::uint64_t seed)
{
    Rng rng(seed);
    return swap_at(pair, dominant, pick_non_dominant(pair, dominant, rng));
}

SwapDistribution exact_swap_distribution(const SequencePair& pair, Letter dominant)
{
    SwapDistribution out;
    const auto positions = non_dominant_positions(pair, dominant);
    require(!positions.empty(), "no non-dominant letter to replace");
    for (const auto& p : positions) {
        const int delta = swap_at(pair, dominant, p).delta;
        if (delta > 0) {
            ++out.plus;
        } else if (delta < 0) {
            ++out.minus;
        } else {
            ++out.zero;
        }
    }
    return out;
}

bool slope_event(const CouplingTrace& trace, double lo, double hi, double ell, double c)
{
    require(lo <= hi, "empty slope interval");
    require(lo >= static_cast<double>(trace.start_k()) && hi <= static_cast<double>(trace.end_k()),
            "slope interval outside the trace");
    const auto first = static_cast<std::size_t>(std::ceil(lo));
    const auto last = static_cast<std::size_t>(std::floor(hi));
    for (std::size_t i = first; i <= last; ++i) {
        for (std::size_t j = i; j <= last; ++j) {
            const double gap = static_cast<double>(j - i);
            if (gap < ell) {
                continue;
            }
            const double rise = static_cast<double>(trace.lc(j)) - static_cast<double>(trace.lc(i));
            if (rise < c * gap) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace lcsm
