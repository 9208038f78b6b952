#include "lcsm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lcsm/errors.hpp"
#include "lcsm/rng.hpp"
#include "lcsm/words.hpp"

namespace lcsm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sum_squares(std::span<const double> probs)
{
    double s = 0.0;
    for (double p : probs) {
        s += p * p;
    }
    return s;
}

std::size_t draw(const DiscreteLaw& law, Rng& rng)
{
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < law.probs.size(); ++i) {
        acc += law.probs[i];
        if (u < acc) {
            return i;
        }
    }
    return law.probs.size() - 1;
}

void check_laws(std::span<const DiscreteLaw> laws)
{
    require(!laws.empty(), "need at least one input coordinate");
    for (const auto& law : laws) {
        require(!law.values.empty() && law.values.size() == law.probs.size(),
                "law values and probabilities differ in length");
        double total = 0.0;
        for (double p : law.probs) {
            require(p >= 0.0 && std::isfinite(p), "law probabilities must be non-negative");
            total += p;
        }
        require(std::abs(total - 1.0) <= 1e-9, "law probabilities must sum to one");
    }
}

double tensorized_rhs(double r, std::span<const double> diff_moments)
{
    double s = 0.0;
    for (double a : diff_moments) {
        s += std::pow(a, 2.0 / r);
    }
    return (r - 1.0) / std::pow(2.0, 1.0 / r) * std::sqrt(s);
}

}  // namespace

bool is_vacuous(BoundKind kind, double value) noexcept
{
    switch (kind) {
    case BoundKind::ProbabilityLower:
        return !(value > 0.0);
    case BoundKind::ProbabilityUpper:
        return !(value < 1.0);
    case BoundKind::MomentLower:
        return !(value > 0.0) || !std::isfinite(value);
    case BoundKind::MomentUpper:
        return !std::isfinite(value);
    case BoundKind::Constant:
        return false;
    }
    return false;
}

BoundReport make_report(std::string name, BoundKind kind, double value,
                        std::vector<std::pair<std::string, double>> inputs)
{
    BoundReport out;
    out.name = std::move(name);
    out.inputs = std::move(inputs);
    out.value = value;
    out.kind = kind;
    out.vacuous = is_vacuous(kind, value);
    return out;
}

double theorem_K(std::size_t m) noexcept
{
    const double a = std::ldexp(1e-2 * std::exp(-67.0), -4);
    const double b = 1.0 / (800.0 * static_cast<double>(m));
    return std::min(a, b);
}

KBranch theorem_K_branch(std::size_t m) noexcept
{
    const double a = std::ldexp(1e-2 * std::exp(-67.0), -4);
    const double b = 1.0 / (800.0 * static_cast<double>(m));
    return a <= b ? KBranch::Exponential : KBranch::Alphabet;
}

double p2_threshold(std::size_t m) noexcept
{
    const double K = theorem_K(m);
    const double md = static_cast<double>(m);
    return std::min(0.25 * std::exp(-5.0) * K / md, K / (2.0 * md * md));
}

double TheoremConstants::ell(double n) const noexcept
{
    return std::exp(-0.5) * std::sqrt(n * p1 * (1.0 - p1)) * std::pow(1.0 / (1.0 + r), 1.0 / r);
}

std::pair<double, double> TheoremConstants::interval(double n) const noexcept
{
    const double centre = 2.0 * n * p1;
    const double half = std::sqrt(2.0 * n * (1.0 - p1) * p1);
    return {centre - half, centre + half};
}

TheoremConstants theorem_constants(const AlphabetDist& dist, double r)
{
    require(r > 0.0 && std::isfinite(r), "moment order must be positive");
    TheoremConstants c;
    c.m = dist.size();
    c.r = r;
    c.p1 = dist.dominant_prob();
    c.p2 = dist.max_other_prob();
    c.K = theorem_K(c.m);
    c.k_branch = theorem_K_branch(c.m);
    c.p2_threshold = p2_threshold(c.m);
    c.epsilon = 1e-2 * std::exp(-67.0);
    const double md = static_cast<double>(c.m);
    c.C1 = std::pow(2.0, -2.0 - 5.0 * r) * (std::pow(2.0, r / 2.0) - 1.0) / (1.0 + r) *
           std::exp(-0.5) * std::pow(c.K / md, r) * std::pow(1.0 - c.p1, r / 2.0);
    c.C2_cap = moment_upper_bound(r, dist.probs(), 1);
    c.n_min = c.p2 > 0.0 ? std::pow(c.p2, -12.0) + std::pow(md, 8.0) : kInf;
    c.regime = dist.theorem_regime();
    return c;
}

double moment_upper_bound(double r, std::span<const double> probs, std::size_t n)
{
    require(r > 0.0 && std::isfinite(r), "moment order must be positive");
    const double spread = std::max(0.0, 1.0 - sum_squares(probs));
    const double nd = static_cast<double>(n);
    if (r >= 2.0) {
        return std::pow(r - 1.0, r) / 2.0 * spread * std::pow(2.0 * nd, r / 2.0);
    }
    return std::pow(spread * nd, r / 2.0);
}

bool BurkholderCheck::holds(double rel_tol) const noexcept
{
    return lhs <= rhs * (1.0 + rel_tol) + rel_tol * std::numeric_limits<double>::min();
}

BurkholderCheck burkholder_tensorized_check(const MultivariateFn& f,
                                            std::span<const DiscreteLaw> laws, double r)
{
    require(r >= 2.0, "the tensorized inequality needs r >= 2");
    check_laws(laws);
    const std::size_t d = laws.size();
    std::size_t points = 1;
    for (const auto& law : laws) {
        require(points <= (std::size_t{1} << 22) / law.values.size(),
                "product support too large for exact evaluation");
        points *= law.values.size();
    }

    std::vector<std::size_t> idx(d, 0);
    std::vector<double> input(d);
    std::vector<double> values(points);
    std::vector<double> weights(points);
    auto decode = [&](std::size_t code) {
        for (std::size_t i = d; i-- > 0;) {
            const std::size_t size = laws[i].values.size();
            idx[i] = code % size;
            code /= size;
        }
    };
    for (std::size_t code = 0; code < points; ++code) {
        decode(code);
        double w = 1.0;
        for (std::size_t i = 0; i < d; ++i) {
            input[i] = laws[i].values[idx[i]];
            w *= laws[i].probs[idx[i]];
        }
        values[code] = f(input);
        weights[code] = w;
    }

    // Centred on values[0] so that a constant S gives exactly zero.
    double total = 0.0;
    double shift = 0.0;
    for (std::size_t c = 0; c < points; ++c) {
        total += weights[c];
        shift += weights[c] * (values[c] - values[0]);
    }
    shift /= total;
    double central = 0.0;
    for (std::size_t c = 0; c < points; ++c) {
        central += weights[c] * std::pow(std::abs(values[c] - values[0] - shift), r);
    }

    // S_i resamples coordinate i: E|S - S_i|^r over (x, x_i').
    std::vector<double> diff(d, 0.0);
    std::size_t stride = 1;
    for (std::size_t i = d; i-- > 0;) {
        const std::size_t size = laws[i].values.size();
        for (std::size_t c = 0; c < points; ++c) {
            const std::size_t digit = (c / stride) % size;
            const std::size_t base = c - digit * stride;
            for (std::size_t alt = 0; alt < size; ++alt) {
                const std::size_t other = base + alt * stride;
                diff[i] += weights[c] * laws[i].probs[alt] *
                           std::pow(std::abs(values[c] - values[other]), r);
            }
        }
        stride *= size;
    }

    BurkholderCheck out;
    out.lhs = std::pow(central, 1.0 / r);
    out.rhs = tensorized_rhs(r, diff);
    out.exact = true;
    return out;
}

BurkholderCheck burkholder_tensorized_check_mc(const MultivariateFn& f,
                                               std::span<const DiscreteLaw> laws, double r,
                                               std::size_t samples, std::uint64_t seed)
{
    require(r >= 2.0, "the tensorized inequality needs r >= 2");
    check_laws(laws);
    constexpr std::size_t kBatches = 20;
    require(samples >= 2 * kBatches, "Monte Carlo check needs at least 40 samples");
    const std::size_t d = laws.size();
    Rng rng(seed);

    std::vector<double> s(samples);
    std::vector<std::vector<double>> gaps(samples, std::vector<double>(d));
    std::vector<double> input(d);
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t i = 0; i < d; ++i) {
            input[i] = laws[i].values[draw(laws[i], rng)];
        }
        s[t] = f(input);
        for (std::size_t i = 0; i < d; ++i) {
            const double kept = input[i];
            input[i] = laws[i].values[draw(laws[i], rng)];
            gaps[t][i] = std::abs(s[t] - f(input));
            input[i] = kept;
        }
    }

    auto evaluate = [&](std::size_t lo, std::size_t hi, double& lhs, double& rhs) {
        double shift = 0.0;
        for (std::size_t t = lo; t < hi; ++t) {
            shift += s[t] - s[lo];
        }
        shift /= static_cast<double>(hi - lo);
        double central = 0.0;
        std::vector<double> diff(d, 0.0);
        for (std::size_t t = lo; t < hi; ++t) {
            central += std::pow(std::abs(s[t] - s[lo] - shift), r);
            for (std::size_t i = 0; i < d; ++i) {
                diff[i] += std::pow(gaps[t][i], r);
            }
        }
        const double count = static_cast<double>(hi - lo);
        for (double& v : diff) {
            v /= count;
        }
        lhs = std::pow(central / count, 1.0 / r);
        rhs = tensorized_rhs(r, diff);
    };

    BurkholderCheck out;
    out.exact = false;
    evaluate(0, samples, out.lhs, out.rhs);

    // Standard errors from batch means.
    std::vector<double> bl(kBatches);
    std::vector<double> br(kBatches);
    const std::size_t per = samples / kBatches;
    for (std::size_t b = 0; b < kBatches; ++b) {
        evaluate(b * per, (b + 1) * per, bl[b], br[b]);
    }
    auto se = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) {
            mean += x;
        }
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) {
            ss += (x - mean) * (x - mean);
        }
        const double k = static_cast<double>(v.size());
        return std::sqrt(ss / (k - 1.0) / k);
    };
    out.lhs_se = se(bl);
    out.rhs_se = se(br);
    return out;
}

BoundReport reversed_lipschitz_bound(double c, double ell, double r, double m_r_T)
{
    require(c > 0.0, "slope must be positive");
    require(ell >= 0.0, "gap must be non-negative");
    require(r >= 1.0, "moment order must be at least 1");
    const double value = std::pow(c / 2.0, r) * (m_r_T - std::pow(ell, r));
    return make_report("reversed_lipschitz_lower", BoundKind::MomentLower, value,
                       {{"c", c}, {"ell", ell}, {"r", r}, {"m_r_T", m_r_T}});
}

double exact_central_moment(std::span<const double> values, std::span<const double> probs,
                            double r)
{
    require(values.size() == probs.size() && !values.empty(), "law values and probabilities differ");
    double mean = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        mean += probs[i] * values[i];
    }
    double out = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += probs[i] * std::pow(std::abs(values[i] - mean), r);
    }
    return out;
}

double reversed_lipschitz_slope(std::span<const double> f, std::size_t ell)
{
    double best = kInf;
    const std::size_t gap = std::max<std::size_t>(ell, 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + gap; j < f.size(); ++j) {
            best = std::min(best, (f[j] - f[i]) / static_cast<double>(j - i));
        }
    }
    return best;
}

BoundReport geometric_sum_tail(std::size_t N, double p, double beta)
{
    require(p > 0.0 && p <= 1.0, "geometric parameter must lie in (0, 1]");
    require(beta > 0.0 && beta < 1.0, "beta must lie in (0, 1)");
    const double value = std::exp(-(beta - 1.0 - std::log(beta)) * static_cast<double>(N));
    return make_report("geometric_sum_tail", BoundKind::ProbabilityUpper, value,
                       {{"N", static_cast<double>(N)}, {"p", p}, {"beta", beta}});
}

RoughLcsLower rough_lcs_lower(std::size_t n, double p1, double p2)
{
    require(p1 > 0.5 && p1 <= 1.0, "dominant probability must exceed 1/2");
    require(p2 >= 0.0 && p2 < 1.0, "p2 must lie in [0, 1)");
    const double nd = static_cast<double>(n);
    const double c3 = p2 * p2 * p2;
    RoughLcsLower out;
    out.threshold = nd * p1 + (std::pow(1.0 - p2, 3.0) - p2) * nd * p2 * p2;
    out.prob_bound = 1.0 - 4.0 * std::exp(-2.0 * nd * c3 * c3) -
                     std::exp(nd * (c3 + std::log1p(-c3)) * (p1 - c3));
    out.vacuous = is_vacuous(BoundKind::ProbabilityLower, out.prob_bound);
    return out;
}

double f_theta(double theta)
{
    require(theta > 0.0 && theta < 1.0, "theta must lie in (0, 1)");
    return std::pow((4.0 + 2.0 * theta) / (theta * theta), theta) *
           std::pow((2.0 + theta) / 2.0, 2.0) * std::pow(1.0 / (1.0 - theta), 1.0 - theta);
}

std::vector<BoundReport> EventBounds::all() const
{
    return {event_Bn, event_Bn_union, event_On, event_D, event_E,
            event_F,   event_G,      berry_esseen, hoeffding_slope};
}

EventBounds event_probability_bounds(const EventParams& q)
{
    require(q.n >= 1, "n must be at least 1");
    require(q.m >= 1, "alphabet size must be at least 1");
    require(q.p1 > 0.0 && q.p1 < 1.0, "p1 must lie in (0, 1)");
    require(q.p2 >= 0.0 && q.p2 < 1.0, "p2 must lie in [0, 1)");
    const double n = static_cast<double>(q.n);
    const double m = static_cast<double>(q.m);
    const double p2_2 = q.p2 * q.p2;
    const double p2_6 = p2_2 * p2_2 * p2_2;
    const double e6 = std::exp(-n * p2_6 / 5.0);
    const std::vector<std::pair<std::string, double>> common = {
        {"n", n}, {"p1", q.p1}, {"p2", q.p2}, {"K", q.K}, {"m", m}, {"ell", q.ell}, {"theta", q.theta}};

    EventBounds out;
    out.event_Bn = make_report("event_Bn", BoundKind::ProbabilityLower, 1.0 - 121.0 * e6, common);
    const double union_sum = 5.0 * e6 + 74.0 * std::exp(-n * p2_2 / 1000.0) +
                             38.0 * std::exp(-3.0 * n * p2_2 / 200.0) + 4.0 * std::exp(-n * p2_2 / 2.0);
    out.event_Bn_union = make_report("event_Bn_union", BoundKind::ProbabilityLower, 1.0 - union_sum, common);

    const double hoeffding = std::exp(-q.K * q.K * q.ell / (32.0 * m * m));
    out.event_On = make_report(
        "event_On", BoundKind::ProbabilityLower,
        1.0 - (484.0 * std::sqrt(std::numbers::pi) * std::exp(2.0) * n * e6 + 2.0 * n * hoeffding), common);
    out.event_D = make_report("event_D", BoundKind::ProbabilityLower, 1.0 - 5.0 * e6, common);

    out.log_f_theta = std::log(f_theta(q.theta));
    const double ratio = q.p1 * q.p1 / (1.0 + q.p1 * q.p1) - q.theta;
    out.event_E_exponent = 2.0 * (1.0 - q.theta) * ratio * ratio - out.log_f_theta;
    out.event_E_exponent_positive = out.event_E_exponent > 0.0;
    double tail = kInf;
    if (out.event_E_exponent_positive) {
        const double k0 = std::ceil(n * p2_2 / 2.0);
        tail = std::exp(-out.event_E_exponent * k0) / -std::expm1(-out.event_E_exponent);
    }
    out.event_E = make_report("event_E", BoundKind::ProbabilityLower, 1.0 - tail, common);
    out.event_F = make_report("event_F", BoundKind::ProbabilityLower,
                                1.0 - 38.0 * std::exp(-3.0 * n * p2_2 / 200.0), common);
    out.event_G = make_report("event_G", BoundKind::ProbabilityLower,
                                1.0 - 4.0 * std::exp(-n * p2_2 / 2.0), common);
    out.berry_esseen = make_report("berry_esseen", BoundKind::ProbabilityUpper,
                                   1.0 / std::sqrt(2.0 * n * q.p1 * (1.0 - q.p1)), common);
    out.hoeffding_slope = make_report("hoeffding_slope", BoundKind::ProbabilityUpper, hoeffding, common);
    return out;
}

double gaussian_window_integral(double r)
{
    require(r >= 0.0 && std::isfinite(r), "exponent must be non-negative");
    auto integrand = [r](double x) { return std::pow(x, r) * std::exp(-x * x / 2.0); };
    const double half = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, 1.0, 15, 1e-13);
    return 2.0 * half;
}

ConditionedWindow conditioned_binomial_moment_window(std::size_t n, double p1, double r)
{
    require(n >= 1, "n must be at least 1");
    require(p1 > 0.5 && p1 < 1.0, "p1 must lie in (1/2, 1)");
    require(r >= 1.0, "moment order must be at least 1");
    const double nd = static_cast<double>(n);
    const double var = nd * p1 * (1.0 - p1);
    const double g0 = gaussian_window_integral(0.0);
    const double gr = gaussian_window_integral(r);
    const double sqrt_pi = std::sqrt(std::numbers::pi);

    ConditionedWindow w;
    w.berry_esseen_term = 1.0 / std::sqrt(2.0 * var);
    w.window_prob_lower = g0 / std::sqrt(2.0 * std::numbers::pi) - w.berry_esseen_term;
    w.mean_shift_vacuous = !(w.window_prob_lower > 0.0);
    w.mean_shift_bound = w.mean_shift_vacuous ? kInf : 2.0 / w.window_prob_lower;

    const double ratio = (gr - 2.0 * sqrt_pi / std::sqrt(var)) / (g0 + sqrt_pi / std::sqrt(var));
    w.abs_moment_lower = std::pow(2.0 * var, r / 2.0) * ratio;
    w.abs_moment_vacuous = !(ratio > 0.0);

    // The reverse triangle step only bounds the moment when the shift bound
    // stays below the r-th root of the absolute moment bound.
    if (w.abs_moment_vacuous || w.mean_shift_vacuous) {
        w.moment_lower = w.abs_moment_vacuous ? 0.0 : -kInf;
        w.moment_vacuous = true;
    } else {
        const double root = std::sqrt(2.0 * var) * std::pow(ratio, 1.0 / r);
        const double diff = root - w.mean_shift_bound;
        w.moment_lower = std::pow(std::abs(diff), r);
        w.moment_vacuous = !(diff > 0.0);
    }
    return w;
}

std::vector<BoundReport> ConditionedWindow::reports(std::size_t n, double p1, double r) const
{
    const std::vector<std::pair<std::string, double>> in = {
        {"n", static_cast<double>(n)}, {"p1", p1}, {"r", r}};
    std::vector<BoundReport> out;
    out.push_back(make_report("window_berry_esseen", BoundKind::ProbabilityUpper, berry_esseen_term, in));
    out.push_back(make_report("window_probability_lower", BoundKind::ProbabilityLower, window_prob_lower, in));
    auto shift = make_report("window_mean_shift", BoundKind::MomentUpper, mean_shift_bound, in);
    shift.vacuous = shift.vacuous || mean_shift_vacuous;
    out.push_back(shift);
    auto abs_moment = make_report("window_abs_moment_lower", BoundKind::MomentLower, abs_moment_lower, in);
    abs_moment.vacuous = abs_moment.vacuous || abs_moment_vacuous;
    out.push_back(abs_moment);
    auto moment = make_report("window_moment_lower", BoundKind::MomentLower, moment_lower, in);
    moment.vacuous = moment.vacuous || moment_vacuous;
    out.push_back(moment);
    return out;
}

std::vector<BoundReport> all_bound_reports(const AlphabetDist& dist, std::size_t n,
                                           std::span<const double> r_values)
{
    require(n >= 1, "n must be at least 1");
    const double nd = static_cast<double>(n);
    const std::size_t m = dist.size();
    const double md = static_cast<double>(m);
    const double p1 = dist.dominant_prob();
    const double p2 = dist.max_other_prob();
    std::vector<BoundReport> out;

    const std::vector<std::pair<std::string, double>> base = {{"m", md}, {"p1", p1}, {"p2", p2}};
    const double K = theorem_K(m);
    auto with = [&](std::vector<std::pair<std::string, double>> extra) {
        auto in = base;
        in.insert(in.end(), extra.begin(), extra.end());
        return in;
    };
    out.push_back(make_report("K", BoundKind::Constant, K, base));
    out.push_back(make_report("K_branch_exponential", BoundKind::Constant,
                              theorem_K_branch(m) == KBranch::Exponential ? 1.0 : 0.0, base));
    out.push_back(make_report("p2_threshold", BoundKind::Constant, p2_threshold(m), base));
    out.push_back(make_report("theorem_regime", BoundKind::Constant, dist.theorem_regime() ? 1.0 : 0.0, base));
    out.push_back(make_report("theta", BoundKind::Constant, 1.0 / 25.0, base));
    out.push_back(make_report("epsilon", BoundKind::Constant, 1e-2 * std::exp(-67.0), base));
    out.push_back(make_report("slope", BoundKind::Constant, K / (4.0 * md), base));
    if (p1 < 1.0) {
        const double half = std::sqrt(2.0 * nd * (1.0 - p1) * p1);
        out.push_back(make_report("interval_lo", BoundKind::Constant, 2.0 * nd * p1 - half, with({{"n", nd}})));
        out.push_back(make_report("interval_hi", BoundKind::Constant, 2.0 * nd * p1 + half, with({{"n", nd}})));
    }

    for (double r : r_values) {
        const TheoremConstants c = theorem_constants(dist, r);
        const auto in = with({{"n", nd}, {"r", r}});
        out.push_back(make_report("ell", BoundKind::Constant, c.ell(nd), in));
        out.push_back(make_report("C1", BoundKind::Constant, c.C1, in));
        out.push_back(make_report("C2_cap", BoundKind::Constant, c.C2_cap, in));
        out.push_back(make_report("n_min", BoundKind::Constant, c.n_min, in));
        out.push_back(make_report("moment_upper_bound", BoundKind::MomentUpper,
                                  moment_upper_bound(r, dist.probs(), n), in));
        out.push_back(make_report("moment_lower_constant", BoundKind::MomentLower,
                                  c.C() * std::pow(nd, r / 2.0), in));
        if (r >= 1.0 && p1 > 0.5 && p1 < 1.0) {
            const ConditionedWindow w = conditioned_binomial_moment_window(n, p1, r);
            for (auto& rep : w.reports(n, p1, r)) {
                rep.inputs = with({{"n", nd}, {"r", r}});
                out.push_back(std::move(rep));
            }
            EventParams ep{n, p1, p2, K, m, c.ell(nd), 1.0 / 25.0};
            const EventBounds eb = event_probability_bounds(ep);
            const double chain = std::pow(4.0, -r) * std::pow(K / (8.0 * md), r) *
                                 (w.moment_lower - std::pow(c.ell(nd), r)) *
                                 std::max(0.0, w.window_prob_lower) *
                                 std::max(0.0, eb.event_On.value);
            auto rep = make_report("lower_bound_chain", BoundKind::MomentLower, chain, in);
            rep.vacuous = rep.vacuous || w.moment_vacuous || eb.event_On.vacuous ||
                          is_vacuous(BoundKind::ProbabilityLower, w.window_prob_lower);
            out.push_back(std::move(rep));
        }
    }

    if (p1 < 1.0 && m >= 2) {
        const EventParams ep{n, p1, p2, K, m, theorem_constants(dist, 2.0).ell(nd), 1.0 / 25.0};
        const EventBounds eb = event_probability_bounds(ep);
        for (const auto& rep : eb.all()) {
            out.push_back(rep);
        }
        out.push_back(make_report("event_E_exponent", BoundKind::Constant, eb.event_E_exponent,
                                  {{"theta", ep.theta}, {"p1", p1}}));
    }
    if (p1 > 0.5) {
        const RoughLcsLower rough = rough_lcs_lower(n, p1, p2);
        out.push_back(make_report("rough_lcs_threshold", BoundKind::Constant, rough.threshold, with({{"n", nd}})));
        out.push_back(make_report("rough_lcs_probability", BoundKind::ProbabilityLower, rough.prob_bound,
                                  with({{"n", nd}})));
    }
    return out;
}

}  // namespace lcsm
