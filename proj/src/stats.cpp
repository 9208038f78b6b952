#include "lcsm/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "lcsm/errors.hpp"
#include "lcsm/rng.hpp"

namespace lcsm {

double mean(std::span<const double> values)
{
    require(!values.empty(), "mean of an empty sample");
    double s = 0.0;
    for (double v : values) {
        s += v;
    }
    return s / static_cast<double>(values.size());
}

double central_abs_moment(std::span<const double> values, double r)
{
    const double mu = mean(values);
    double s = 0.0;
    if (r == 2.0) {
        for (double v : values) {
            s += (v - mu) * (v - mu);
        }
    } else if (r == 1.0) {
        for (double v : values) {
            s += std::abs(v - mu);
        }
    } else {
        for (double v : values) {
            s += std::pow(std::abs(v - mu), r);
        }
    }
    return s / static_cast<double>(values.size());
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

Interval percentile_interval(std::vector<double> replicates, double level)
{
    require(!replicates.empty(), "no bootstrap replicates");
    require(level > 0.0 && level < 1.0, "confidence level must lie in (0, 1)");
    std::sort(replicates.begin(), replicates.end());
    const double alpha = (1.0 - level) / 2.0;
    const auto last = static_cast<double>(replicates.size() - 1);
    auto at = [&](double q) {
        const double pos = q * last;
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = static_cast<std::size_t>(std::ceil(pos));
        const double w = pos - static_cast<double>(lo);
        return replicates[lo] * (1.0 - w) + replicates[hi] * w;
    };
    return {at(alpha), at(1.0 - alpha)};
}

BootstrapEstimate bootstrap(std::span<const double> values,
                            const std::function<double(std::span<const double>)>& statistic,
                            std::size_t resamples, std::uint64_t seed, double level,
                            std::size_t threads)
{
    require(!values.empty(), "bootstrap of an empty sample");
    require(resamples >= 2, "bootstrap needs at least two resamples");
    BootstrapEstimate out;
    out.estimate = statistic(values);
    std::vector<double> reps(resamples);
    const std::size_t n = values.size();
    parallel_for(resamples, threads, [&](std::size_t b) {
        Rng rng = Rng::stream(seed, {b});
        std::vector<double> sample(n);
        for (auto& s : sample) {
            s = values[static_cast<std::size_t>(rng.below(n))];
        }
        reps[b] = statistic(sample);
    });
    const double m = mean(reps);
    double ss = 0.0;
    for (double r : reps) {
        ss += (r - m) * (r - m);
    }
    out.se = std::sqrt(ss / static_cast<double>(resamples - 1));
    out.ci = percentile_interval(std::move(reps), level);
    out.ci.lo = std::min(out.ci.lo, out.estimate);
    out.ci.hi = std::max(out.ci.hi, out.estimate);
    return out;
}

BootstrapEstimate bootstrap_moment(std::span<const double> values, double r,
                                   std::size_t resamples, std::uint64_t seed, double level,
                                   std::size_t threads)
{
    return bootstrap(
        values, [r](std::span<const double> s) { return central_abs_moment(s, r); }, resamples,
        seed, level, threads);
}

double normal_quantile(double p)
{
    require(p > 0.0 && p < 1.0, "quantile level must lie in (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

ProportionEstimate proportion_interval(std::size_t successes, std::size_t trials, double level)
{
    require(trials > 0 && successes <= trials, "invalid proportion counts");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double half = normal_quantile(0.5 + level / 2.0) * std::sqrt(p * (1.0 - p) / n);
    return {p, {std::max(0.0, p - half), std::min(1.0, p + half)}};
}

ProportionEstimate proportion_difference(std::size_t a, std::size_t b, std::size_t trials,
                                         double level)
{
    require(trials > 0 && a + b <= trials, "invalid multinomial counts");
    const double n = static_cast<double>(trials);
    const double pa = static_cast<double>(a) / n;
    const double pb = static_cast<double>(b) / n;
    const double d = pa - pb;
    const double var = (pa + pb - d * d) / n;
    const double half = normal_quantile(0.5 + level / 2.0) * std::sqrt(std::max(0.0, var));
    return {d, {std::max(-1.0, d - half), std::min(1.0, d + half)}};
}

double chi_square_sf(double statistic, double dof)
{
    require(dof > 0.0, "chi-square needs positive degrees of freedom");
    if (statistic <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareGof chi_square_gof(std::span<const std::size_t> counts, std::span<const double> probs,
                            double min_expected)
{
    require(!probs.empty(), "goodness of fit needs a reference law");
    std::size_t total = 0;
    for (std::size_t c : counts) {
        total += c;
    }
    require(total > 0, "goodness of fit of an empty sample");
    const double n = static_cast<double>(total);

    // Observed and expected per support point; the last bin takes all later mass.
    const std::size_t support = probs.size();
    std::vector<double> observed(support, 0.0);
    std::vector<double> expected(support, 0.0);
    double listed = 0.0;
    for (std::size_t i = 0; i < support; ++i) {
        expected[i] = probs[i] * n;
        listed += probs[i];
    }
    expected.back() += std::max(0.0, 1.0 - listed) * n;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        observed[std::min(i, support - 1)] += static_cast<double>(counts[i]);
    }

    // Merge from the tail inward, then any small bins at the head.
    std::vector<double> obs;
    std::vector<double> exp;
    double o_acc = 0.0;
    double e_acc = 0.0;
    for (std::size_t i = support; i-- > 0;) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0.0) {
        if (exp.empty()) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
        } else {
            obs.back() += o_acc;
            exp.back() += e_acc;
        }
    }

    ChiSquareGof out;
    out.bins = exp.size();
    for (std::size_t i = 0; i < exp.size(); ++i) {
        const double d = obs[i] - exp[i];
        out.statistic += d * d / exp[i];
    }
    out.dof = out.bins > 1 ? out.bins - 1 : 0;
    out.p_value = out.dof > 0 ? chi_square_sf(out.statistic, static_cast<double>(out.dof)) : 1.0;
    return out;
}

LinearFit ols(std::span<const double> x, std::span<const double> y)
{
    require(x.size() == y.size() && x.size() >= 2, "least squares needs matching samples");
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    require(sxx > 0.0, "least squares needs two distinct x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double res = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.residuals.push_back(res);
        sse += res * res;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    return fit;
}

}  // namespace lcsm
