#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsm/alignment.hpp"
#include "lcsm/stats.hpp"
#include "lcsm/words.hpp"

namespace lcsm {

enum class ExperimentKind { Moments, Scaling, Swap, ChainLaw, Bounds, Oracle };

std::string_view kind_name(ExperimentKind kind) noexcept;
/// Throws InvalidArgument for an unknown name.
ExperimentKind parse_kind(std::string_view name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Moments;
    std::vector<double> probs = {0.5, 0.5};
    std::size_t dominant = 1;
    std::vector<std::size_t> n_grid = {64};
    std::size_t replicates = 1000;
    std::vector<double> r_values = {2.0};
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::string output;  // empty: stdout
    std::string format = "csv";
    std::size_t bootstrap = 1000;
    /// Work limit for exhaustive searches (oracle enumeration, B_n membership).
    std::size_t budget = 200000;
    /// Stratify swap outcomes by B_n membership.
    bool stratify = false;
    /// When set, the raw LC_n samples are written to this path.
    std::string emit_distribution;

    /// Throws InvalidArgument when a field is out of range.
    void validate() const;
    AlphabetDist dist() const;
};

/// LC_n of `replicates` iid pairs; replicate i uses stream (seed, n, i).
std::vector<double> sample_lcs(const AlphabetDist& dist, std::size_t n, std::size_t replicates,
                               std::uint64_t seed, std::size_t threads);

struct MomentEstimate {
    std::size_t n = 0;
    double r = 0.0;
    double mean_lc = 0.0;
    double m_r_hat = 0.0;
    double se = 0.0;
    Interval ci99;
    double gamma_hat = 0.0;
    double mean_se = 0.0;  // standard error of mean_lc
};

/// Moment estimates from given samples; bootstrap streams hang off (seed, n).
std::vector<MomentEstimate> moment_estimates(std::span<const double> samples, std::size_t n,
                                             std::span<const double> r_values,
                                             std::size_t resamples, std::uint64_t seed,
                                             std::size_t threads);
/// One estimate per (n, r), n outer.
std::vector<MomentEstimate> estimate_moments(const ExperimentConfig& cfg);

struct ScalingFit {
    double r = 0.0;
    std::vector<MomentEstimate> points;
    double slope = 0.0;
    Interval slope_ci;
    double intercept = 0.0;
    std::vector<double> residuals;
    double r_squared = 0.0;
};

/// One log-log fit per r. Throws InvalidArgument with fewer than four grid
/// points or when some moment estimate is zero.
std::vector<ScalingFit> scaling_experiment(const ExperimentConfig& cfg);

struct SwapStratum {
    Membership membership = Membership::Unknown;
    std::size_t count = 0;
    std::size_t plus = 0;
    std::size_t minus = 0;
};

struct SwapResult {
    std::size_t n = 0;
    std::size_t replicates = 0;
    std::size_t plus = 0;
    std::size_t zero = 0;
    std::size_t minus = 0;
    std::size_t violations = 0;  // |delta| > 1
    ProportionEstimate p_plus;
    ProportionEstimate p_minus;
    ProportionEstimate diff;
    std::vector<SwapStratum> strata;  // filled when stratified
};

/// One swap per sampled pair. Pair i uses stream (seed, n, i) and its swap
/// stream (seed, n, i, 1).
std::vector<SwapResult> swap_probability_experiment(const ExperimentConfig& cfg);

struct ChainLawResult {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> tv;  // index k = 0..2n
    double max_tv = 0.0;
    double mixture_tv = 0.0;
};

/// Exact comparison of the chain marginals with the conditional laws.
/// Requires n <= 4 and m <= 3.
std::vector<ChainLawResult> chain_law_test(const ExperimentConfig& cfg);

/// Frequency of the slope event on the window at slope c and gap ell(n)
/// over `replicates` chains; chain i uses stream (seed, n, i).
struct SlopeFrequency {
    std::size_t n = 0;
    std::size_t replicates = 0;
    std::size_t hits = 0;
    double c = 0.0;
    double ell = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};
SlopeFrequency slope_event_frequency(const AlphabetDist& dist, std::size_t n, double r, double c,
                                     std::size_t replicates, std::uint64_t seed,
                                     std::size_t threads);

using LcsKernel = std::function<std::size_t(const Word&, const Word&)>;

struct OracleCheck {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first counterexample, verbatim
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool passed() const noexcept;
};

/// Brute-force equivalences at desk scale. `kernel` replaces the fast LCS
/// kernel under test. Throws BudgetExhausted when an enumeration does not
/// finish within cfg.budget.
OracleReport oracle_suite(const ExperimentConfig& cfg, const LcsKernel& kernel = {});

}  // namespace lcsm
