#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lcsm {

double mean(std::span<const double> values);
/// Plug-in E|X - mean|^r of the empirical law.
double central_abs_moment(std::span<const double> values, double r);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

struct BootstrapEstimate {
    double estimate = 0.0;
    double se = 0.0;
    Interval ci;
};

/// Percentile bootstrap of `statistic` over `values`. Resample b draws its
/// indices from stream (seed, b), so the result does not depend on how the
/// resamples are scheduled. The interval is widened, if needed, to contain
/// the full-sample estimate.
BootstrapEstimate bootstrap(std::span<const double> values,
                            const std::function<double(std::span<const double>)>& statistic,
                            std::size_t resamples, std::uint64_t seed, double level = 0.99,
                            std::size_t threads = 1);

/// Bootstrap of the plug-in central absolute moment of order r.
BootstrapEstimate bootstrap_moment(std::span<const double> values, double r,
                                   std::size_t resamples, std::uint64_t seed,
                                   double level = 0.99, std::size_t threads = 1);

/// Percentile interval of a sample of bootstrap replicates.
Interval percentile_interval(std::vector<double> replicates, double level);

double normal_quantile(double p);

struct ProportionEstimate {
    double estimate = 0.0;
    Interval ci;
};
/// Normal-approximation interval for successes / trials, clipped to [0, 1].
ProportionEstimate proportion_interval(std::size_t successes, std::size_t trials, double level);
/// p_a - p_b for two outcomes of one multinomial sample, clipped to [-1, 1].
ProportionEstimate proportion_difference(std::size_t a, std::size_t b, std::size_t trials,
                                         double level);

struct ChiSquareGof {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
    std::size_t bins = 0;
};

/// Pearson goodness of fit of counts on {0, 1, ...} against `probs` on the
/// same support. The last bin absorbs the remaining mass, and tail bins are
/// merged until each expected count is at least `min_expected`.
ChiSquareGof chi_square_gof(std::span<const std::size_t> counts, std::span<const double> probs,
                            double min_expected = 5.0);
double chi_square_sf(double statistic, double dof);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> residuals;
    double r_squared = 0.0;
};
/// Ordinary least squares of y on x. Needs two distinct x values.
LinearFit ols(std::span<const double> x, std::span<const double> y);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace lcsm
