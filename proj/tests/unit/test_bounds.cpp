#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lcsm/bounds.hpp"
#include "lcsm/errors.hpp"
#include "lcsm/lcs.hpp"
#include "lcsm/rng.hpp"
#include "lcsm/words.hpp"

using namespace lcsm;

namespace {

bool rel_close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

/// E|S - ES|^r and E|S - S_i|^r for f on d fair-or-biased bits, by direct
/// double loops over the 2^d inputs.
struct BitMoments {
    double central = 0.0;
    std::vector<double> diff;
};

BitMoments bit_moments(const std::vector<double>& table, std::size_t d, double q, double r)
{
    const std::size_t points = std::size_t{1} << d;
    auto weight = [&](std::size_t x) {
        double w = 1.0;
        for (std::size_t i = 0; i < d; ++i) {
            w *= ((x >> i) & 1) ? q : 1.0 - q;
        }
        return w;
    };
    double mean = 0.0;
    for (std::size_t x = 0; x < points; ++x) {
        mean += weight(x) * table[x];
    }
    BitMoments out;
    out.diff.assign(d, 0.0);
    for (std::size_t x = 0; x < points; ++x) {
        out.central += weight(x) * std::pow(std::abs(table[x] - mean), r);
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t flipped = x ^ (std::size_t{1} << i);
            const double p_flip = ((x >> i) & 1) ? 1.0 - q : q;
            out.diff[i] += weight(x) * p_flip * std::pow(std::abs(table[x] - table[flipped]), r);
        }
    }
    return out;
}

/// Input i of the library call is bit (d - 1 - i) of the table index, so
/// that x_0 is the most significant coordinate.
MultivariateFn table_fn(const std::vector<double>& table)
{
    return [&table](std::span<const double> in) {
        std::size_t x = 0;
        for (double b : in) {
            x = 2 * x + static_cast<std::size_t>(b);
        }
        return table[x];
    };
}

std::vector<DiscreteLaw> bits(std::size_t d, double q)
{
    return std::vector<DiscreteLaw>(d, DiscreteLaw{{0.0, 1.0}, {1.0 - q, q}});
}

/// P(N_1 = k) for N_1 ~ Bin(N, p), through logs.
double binomial_pmf(std::size_t N, std::size_t k, double p)
{
    const double nd = static_cast<double>(N);
    const double kd = static_cast<double>(k);
    return std::exp(std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1) +
                    kd * std::log(p) + (nd - kd) * std::log1p(-p));
}

}  // namespace

TEST_CASE("moment upper bound")
{
    const std::vector<double> half = {0.5, 0.5};
    CHECK(moment_upper_bound(2.0, half, 100) == doctest::Approx(50.0));
    // Both branches at r = 2: (1/2)(1/2)(200) and ((1/2) 100)^1.
    CHECK(0.5 * 0.5 * 200.0 == doctest::Approx(50.0));

    const std::vector<double> skew = {0.9, 0.1};
    const double by_hand = 8.0 / 2.0 * 0.18 * 128.0 * std::sqrt(128.0);
    CHECK(rel_close(moment_upper_bound(3.0, skew, 64), by_hand, 1e-14));
    CHECK(rel_close(moment_upper_bound(1.0, skew, 64), std::sqrt(0.18 * 64.0), 1e-14));

    const std::vector<double> point = {1.0};
    for (double r : {0.5, 1.0, 2.0, 3.5}) {
        CHECK(moment_upper_bound(r, point, 1000) == 0.0);
    }

    for (const auto& probs : {half, skew, std::vector<double>{0.5, 0.3, 0.2}}) {
        for (std::size_t n : {1u, 10u, 1000u}) {
            const double at = moment_upper_bound(2.0, probs, n);
            CHECK(rel_close(moment_upper_bound(2.0 - 1e-9, probs, n), at, 1e-7));
            CHECK(rel_close(moment_upper_bound(2.0 + 1e-9, probs, n), at, 1e-7));
        }
    }
    CHECK_THROWS_AS(moment_upper_bound(0.0, half, 10), InvalidArgument);
    CHECK_THROWS_AS(moment_upper_bound(-1.0, half, 10), InvalidArgument);
}

TEST_CASE("theorem constants")
{
    const double exp_branch = std::pow(2.0, -4) * 1e-2 * std::exp(-67.0);
    CHECK(exp_branch == doctest::Approx(4.9e-33).epsilon(0.01));
    CHECK(rel_close(theorem_K(2), exp_branch, 1e-15));
    CHECK(theorem_K(2) < 1.0 / 1600.0);
    for (std::size_t m : {2u, 3u, 26u, 1000000u}) {
        CHECK(theorem_K_branch(m) == KBranch::Exponential);
    }
    // 1/(800 m) drops below the exponential branch only past m ~ 2.5e29.
    CHECK(exp_branch < 1.0 / (800.0 * 1e26));

    const double K3 = theorem_K(3);
    CHECK(rel_close(p2_threshold(3), std::min(std::exp(-5.0) * K3 / 12.0, K3 / 18.0), 1e-15));

    const auto d = AlphabetDist::validate({0.9, 0.1});
    const auto c = theorem_constants(d, 2.0);
    const auto [lo, hi] = c.interval(50.0);
    CHECK(lo == doctest::Approx(87.0));
    CHECK(hi == doctest::Approx(93.0));
    CHECK(rel_close(c.ell(100.0), std::exp(-0.5) * 3.0 / std::sqrt(3.0), 1e-14));
    const double C1 = std::pow(2.0, -12) * 1.0 / 3.0 * std::exp(-0.5) * std::pow(c.K / 2.0, 2) * 0.1;
    CHECK(rel_close(c.C1, C1, 1e-13));
    CHECK(rel_close(c.C2_cap, 0.5 * 0.18 * 2.0, 1e-14));
    CHECK(c.C() == c.C1);
    CHECK(rel_close(c.n_min, 1e12 + 256.0, 1e-14));
    CHECK(rel_close(c.slope(), c.K / 8.0, 1e-15));
    CHECK_FALSE(c.regime);
}

TEST_CASE("tensorized inequality on sums of fair bits is tight at r = 2")
{
    for (std::size_t d = 1; d <= 10; ++d) {
        const auto laws = bits(d, 0.5);
        auto sum = [](std::span<const double> in) {
            double s = 0.0;
            for (double b : in) s += b;
            return s;
        };
        const auto check = burkholder_tensorized_check(sum, laws, 2.0);
        const double dd = static_cast<double>(d);
        CHECK(rel_close(check.lhs * check.lhs, dd / 4.0, 1e-12));
        CHECK(rel_close(check.rhs, std::sqrt(dd * 0.5) / std::sqrt(2.0), 1e-12));
        CHECK(check.holds());
        CHECK(check.exact);
    }
    const auto constant = burkholder_tensorized_check([](std::span<const double>) { return 3.0; }, bits(4, 0.3), 3.0);
    CHECK(constant.lhs == 0.0);
    CHECK(constant.rhs == 0.0);
    CHECK(constant.holds());
    CHECK_THROWS_AS(burkholder_tensorized_check([](std::span<const double>) { return 0.0; }, bits(2, 0.5), 1.5),
                    InvalidArgument);
}

TEST_CASE("tensorized inequality on random functions of 6 bits")
{
    Rng rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> table(64);
        for (double& v : table) {
            v = rng.uniform() * 10.0 - 5.0;
        }
        const double q = trial % 2 == 0 ? 0.5 : 0.2 + 0.6 * rng.uniform();
        const auto laws = bits(6, q);
        for (double r : {2.0, 3.0, 4.0}) {
            const auto check = burkholder_tensorized_check(table_fn(table), laws, r);
            CHECK(check.holds());

            // Same quantities from the bit-flip oracle; coordinate i of the
            // library is bit 5 - i of the oracle.
            const auto ref = bit_moments(table, 6, q, r);
            CHECK(rel_close(check.lhs, std::pow(ref.central, 1.0 / r), 1e-12));
            double s = 0.0;
            for (double a : ref.diff) s += std::pow(a, 2.0 / r);
            CHECK(rel_close(check.rhs, (r - 1.0) / std::pow(2.0, 1.0 / r) * std::sqrt(s), 1e-12));
        }
    }
}

TEST_CASE("Monte Carlo tensorized check tracks the exact values")
{
    Rng rng(11);
    std::vector<double> table(64);
    for (double& v : table) {
        v = rng.uniform();
    }
    const auto laws = bits(6, 0.5);
    const auto exact = burkholder_tensorized_check(table_fn(table), laws, 3.0);
    const auto mc = burkholder_tensorized_check_mc(table_fn(table), laws, 3.0, 200000, 5);
    CHECK_FALSE(mc.exact);
    CHECK(mc.lhs_se > 0.0);
    CHECK(std::abs(mc.lhs - exact.lhs) < 5 * mc.lhs_se + 1e-3);
    CHECK(std::abs(mc.rhs - exact.rhs) < 5 * mc.rhs_se + 1e-3);
    CHECK_THROWS_AS(burkholder_tensorized_check_mc(table_fn(table), laws, 3.0, 10, 5), InvalidArgument);
}

TEST_CASE("reversed Lipschitz bound")
{
    std::vector<double> t(10);
    std::vector<double> p(10, 0.1);
    for (int i = 0; i < 10; ++i) t[static_cast<std::size_t>(i)] = i;
    for (double r : {1.0, 2.0, 3.0}) {
        const double m_r = exact_central_moment(t, p, r);
        const auto b = reversed_lipschitz_bound(1.0, 0.0, r, m_r);
        CHECK(rel_close(b.value, m_r / std::pow(2.0, r), 1e-14));
        CHECK(b.value <= m_r);
        CHECK_FALSE(b.vacuous);
    }
    CHECK(exact_central_moment(t, p, 2.0) == doctest::Approx(8.25));
    CHECK(reversed_lipschitz_slope(t, 0) == doctest::Approx(1.0));

    const std::vector<double> pm = {-1.0, 1.0};
    const std::vector<double> half = {0.5, 0.5};
    const auto two_point = reversed_lipschitz_bound(2.0, 0.0, 1.0, exact_central_moment(pm, half, 1.0));
    CHECK(two_point.value == doctest::Approx(1.0));
    const std::vector<double> doubled = {-2.0, 2.0};
    CHECK(exact_central_moment(doubled, half, 1.0) == doctest::Approx(2.0));

    const auto dead = reversed_lipschitz_bound(1.0, 3.0, 2.0, 8.25);
    CHECK(dead.value <= 0.0);
    CHECK(dead.vacuous);

    CHECK_THROWS_AS(reversed_lipschitz_bound(0.0, 1.0, 2.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(reversed_lipschitz_bound(1.0, -1.0, 2.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(reversed_lipschitz_bound(1.0, 1.0, 0.5, 1.0), InvalidArgument);
}

TEST_CASE("reversed Lipschitz bound holds for random locally expanding maps")
{
    Rng rng(77);
    std::size_t checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t size = 5 + rng.below(30);
        const std::size_t ell = rng.below(4);
        std::vector<double> f(size);
        double acc = 0.0;
        for (double& v : f) {
            acc += rng.uniform() * 2.0 - 0.3;
            v = acc;
        }
        const double c = reversed_lipschitz_slope(f, ell);
        if (!(c > 0.0) || !std::isfinite(c)) {
            continue;
        }
        std::vector<double> t(size);
        std::vector<double> p(size);
        double total = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            t[i] = static_cast<double>(i);
            p[i] = rng.uniform() + 0.01;
            total += p[i];
        }
        for (double& w : p) w /= total;
        for (double r : {1.0, 2.0, 3.0}) {
            const auto b = reversed_lipschitz_bound(c, static_cast<double>(ell), r, exact_central_moment(t, p, r));
            CHECK(exact_central_moment(f, p, r) >= b.value - 1e-12);
        }
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("geometric sum tail")
{
    CHECK(geometric_sum_tail(100, 0.3, 1.0 - 1e-9).value == doctest::Approx(1.0));
    CHECK(rel_close(geometric_sum_tail(50, 0.3, 0.5).value, std::exp(-(0.5 - 1.0 + std::log(2.0)) * 50.0), 1e-14));
    CHECK(std::log(geometric_sum_tail(50, 0.3, 0.5).value) == doctest::Approx(-9.657).epsilon(1e-3));
    CHECK_THROWS_AS(geometric_sum_tail(10, 0.3, 1.0), InvalidArgument);
    CHECK_THROWS_AS(geometric_sum_tail(10, 0.0, 0.5), InvalidArgument);

    // Exact law of a sum of N Geometric(p) on {1, 2, ...} by convolution.
    for (double p : {0.1, 0.3, 0.7, 1.0}) {
        for (std::size_t N = 1; N <= 30; ++N) {
            for (double beta : {0.2, 0.5, 0.8, 0.95}) {
                const auto cap = static_cast<std::size_t>(std::floor(beta * static_cast<double>(N) / p));
                std::vector<double> law(cap + 1, 0.0);
                law[0] = 1.0;
                for (std::size_t step = 0; step < N; ++step) {
                    std::vector<double> next(cap + 1, 0.0);
                    for (std::size_t s = 0; s <= cap; ++s) {
                        if (law[s] == 0.0) continue;
                        double g = p;
                        for (std::size_t k = 1; s + k <= cap; ++k) {
                            next[s + k] += law[s] * g;
                            g *= 1.0 - p;
                        }
                    }
                    law = std::move(next);
                }
                double tail = 0.0;
                for (double w : law) tail += w;
                CHECK(tail <= geometric_sum_tail(N, p, beta).value * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("geometric sum tail against simulation")
{
    const double p = 0.3;
    const std::size_t N = 50;
    const std::size_t trials = 100000;
    for (double beta : {0.5, 0.8}) {
        Rng rng(derive_seed(8, {static_cast<std::uint64_t>(beta * 10)}));
        std::size_t hits = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            double s = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                s += 1.0 + std::floor(std::log1p(-rng.uniform()) / std::log1p(-p));
            }
            hits += s <= beta * static_cast<double>(N) / p;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(trials);
        const double se = std::sqrt(std::max(freq * (1 - freq), 1.0 / static_cast<double>(trials)) /
                                    static_cast<double>(trials));
        CHECK(freq <= geometric_sum_tail(N, p, beta).value + 3 * se);
    }
}

TEST_CASE("rough LCS lower bound")
{
    // Root of (1-p2)^3 = p2 by bisection.
    double a = 0.0;
    double b = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        (std::pow(1.0 - mid, 3) - mid > 0 ? a : b) = mid;
    }
    const double root = 0.5 * (a + b);
    const auto at_root = rough_lcs_lower(1000, 0.6, root);
    CHECK(at_root.threshold == doctest::Approx(600.0).epsilon(1e-12));

    const auto empty = rough_lcs_lower(0, 0.9, 0.1);
    CHECK(empty.threshold == 0.0);
    CHECK(empty.prob_bound <= 0.0);
    CHECK(empty.vacuous);

    const std::size_t n = 10000;
    const auto bound = rough_lcs_lower(n, 0.9, 0.1);
    CHECK(bound.threshold == doctest::Approx(9000.0 + (0.729 - 0.1) * 100.0));
    const auto d = AlphabetDist::validate({0.9, 0.1});
    std::size_t hits = 0;
    const std::size_t sims = 1000;
    for (std::size_t s = 0; s < sims; ++s) {
        const auto pair = sample_pair(d, n, derive_seed(2718, {s}));
        hits += static_cast<double>(lcs_length_fast(pair.x, pair.y)) >= bound.threshold;
    }
    CHECK(static_cast<double>(hits) / static_cast<double>(sims) >= std::max(0.0, bound.prob_bound));
    CHECK_THROWS_AS(rough_lcs_lower(10, 0.5, 0.1), InvalidArgument);
}

TEST_CASE("event probability bounds")
{
    const double theta = 1.0 / 25.0;
    const double t = theta;
    const double f = std::pow((4 + 2 * t) / (t * t), t) * std::pow((2 + t) / 2, 2) * std::pow(1 / (1 - t), 1 - t);
    CHECK(rel_close(f_theta(theta), f, 1e-14));

    EventParams q;
    q.n = 1000;
    q.p1 = 0.99;
    q.p2 = 0.1;
    q.K = theorem_K(2);
    q.m = 2;
    q.ell = 3.0;
    q.theta = theta;
    const auto eb = event_probability_bounds(q);
    const double ratio = 0.99 * 0.99 / (1 + 0.99 * 0.99) - theta;
    const double exponent = 2 * (1 - theta) * ratio * ratio - std::log(f);
    CHECK(rel_close(eb.event_E_exponent, exponent, 1e-12));
    CHECK(eb.event_E_exponent_positive == (exponent > 0));
    CHECK(eb.event_E_exponent_positive);

    CHECK(rel_close(eb.event_Bn.value, 1.0 - 121.0 * std::exp(-1e3 * 1e-6 / 5.0), 1e-14));
    CHECK(eb.event_Bn.value < 0.0);
    CHECK(eb.event_Bn.vacuous);
    CHECK(rel_close(eb.event_D.value, 1.0 - 5.0 * std::exp(-1e-3 / 5.0), 1e-14));
    CHECK(rel_close(eb.event_F.value, 1.0 - 38.0 * std::exp(-3.0 * 10.0 / 200.0), 1e-14));
    CHECK(rel_close(eb.event_G.value, 1.0 - 4.0 * std::exp(-5.0), 1e-14));
    CHECK_FALSE(eb.event_G.vacuous);
    // K^2 ell / 32 m^2 ~ 1e-65, so the slope term is 1 to double precision.
    CHECK(eb.hoeffding_slope.value == 1.0);
    CHECK(eb.hoeffding_slope.vacuous);

    q.n = 50;
    q.p1 = 0.9;
    CHECK(event_probability_bounds(q).berry_esseen.value == doctest::Approx(1.0 / 3.0));

    // Large n sends the lower bounds to one. The O_n bound needs
    // sqrt(n) >> 1/K^2 and stays vacuous at any representable n.
    q.n = std::size_t{1} << 50;
    q.p1 = 0.99;
    const auto big = event_probability_bounds(q);
    for (const auto* rep : {&big.event_Bn, &big.event_Bn_union, &big.event_D, &big.event_E, &big.event_F,
                            &big.event_G}) {
        CHECK(rep->value == doctest::Approx(1.0));
        CHECK_FALSE(rep->vacuous);
    }
    CHECK(big.event_On.vacuous);

    // A non-positive exponent leaves the geometric series divergent.
    q.p1 = 0.55;
    q.theta = 0.3;
    const auto bad = event_probability_bounds(q);
    CHECK_FALSE(bad.event_E_exponent_positive);
    CHECK(bad.event_E.vacuous);
}

TEST_CASE("Gaussian window integrals")
{
    const double g0 = std::sqrt(2 * std::numbers::pi) * std::erf(1 / std::sqrt(2.0));
    CHECK(rel_close(gaussian_window_integral(0.0), g0, 1e-12));
    CHECK(rel_close(gaussian_window_integral(2.0), g0 - 2 * std::exp(-0.5), 1e-12));
    CHECK(rel_close(gaussian_window_integral(1.0), 2 * (1 - std::exp(-0.5)), 1e-12));
    CHECK(rel_close(gaussian_window_integral(3.0), 2 * (2 - 3 * std::exp(-0.5)), 1e-12));
    CHECK_THROWS_AS(gaussian_window_integral(-1.0), InvalidArgument);
}

TEST_CASE("conditioned binomial window")
{
    const auto small = conditioned_binomial_moment_window(50, 0.9, 2.0);
    CHECK(small.berry_esseen_term == doctest::Approx(1.0 / 3.0));

    const auto tiny = conditioned_binomial_moment_window(5, 0.9, 2.0);
    CHECK(tiny.window_prob_lower <= 0.0);
    CHECK(tiny.mean_shift_vacuous);
    CHECK(tiny.moment_vacuous);

    // Exact M_2(N_1 | N_1 in I) for N_1 ~ Bin(2n, p1) by summation.
    const std::size_t n = 1000000;
    const double p1 = 0.9;
    const double centre = 2.0 * static_cast<double>(n) * p1;
    const double half = std::sqrt(2.0 * static_cast<double>(n) * p1 * (1 - p1));
    const auto lo = static_cast<std::size_t>(std::ceil(centre - half));
    const auto hi = static_cast<std::size_t>(std::floor(centre + half));
    double mass = 0.0;
    double first = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        const double w = binomial_pmf(2 * n, k, p1);
        mass += w;
        first += w * static_cast<double>(k);
    }
    const double cmean = first / mass;
    double second = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        second += binomial_pmf(2 * n, k, p1) * std::pow(static_cast<double>(k) - cmean, 2);
    }
    const double exact = second / mass;

    const auto w = conditioned_binomial_moment_window(n, p1, 2.0);
    CHECK_FALSE(w.moment_vacuous);
    CHECK(w.moment_lower > 0.0);
    CHECK(w.moment_lower <= exact);
    CHECK(w.moment_lower >= exact / 2.0);
    CHECK(std::abs(cmean - centre) <= w.mean_shift_bound);
    CHECK(w.window_prob_lower <= mass);

    for (const auto& rep : w.reports(n, p1, 2.0)) {
        CHECK(rep.vacuous == (is_vacuous(rep.kind, rep.value) || rep.vacuous));
    }
}

TEST_CASE("vacuous flags follow the bound kind")
{
    CHECK(is_vacuous(BoundKind::ProbabilityLower, 0.0));
    CHECK_FALSE(is_vacuous(BoundKind::ProbabilityLower, 0.2));
    CHECK(is_vacuous(BoundKind::ProbabilityUpper, 1.0));
    CHECK_FALSE(is_vacuous(BoundKind::ProbabilityUpper, 0.99));
    CHECK(is_vacuous(BoundKind::MomentLower, -1.0));
    CHECK(is_vacuous(BoundKind::MomentLower, std::nan("")));
    CHECK(is_vacuous(BoundKind::MomentUpper, INFINITY));
    CHECK_FALSE(is_vacuous(BoundKind::Constant, -5.0));

    const std::vector<double> rs = {1.0, 2.0, 3.0};
    for (const auto& probs : {std::vector<double>{0.5, 0.5}, std::vector<double>{0.9, 0.1},
                              std::vector<double>{0.95, 0.03, 0.02}, std::vector<double>{0.7, 0.3}}) {
        const auto d = AlphabetDist::validate(probs);
        for (std::size_t n : {1u, 10u, 1000u, 1000000u}) {
            for (const auto& rep : all_bound_reports(d, n, rs)) {
                CAPTURE(rep.name);
                if (rep.kind == BoundKind::ProbabilityLower) {
                    CHECK(rep.value <= 1.0);
                }
                if (is_vacuous(rep.kind, rep.value)) {
                    CHECK(rep.vacuous);
                }
                if (rep.kind == BoundKind::Constant) {
                    CHECK_FALSE(rep.vacuous);
                }
            }
        }
    }
}
