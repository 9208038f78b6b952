#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcsm {

class AlphabetDist;

/// What a bound claims about its target; decides when the value is vacuous.
enum class BoundKind {
    ProbabilityLower,  // vacuous when <= 0
    ProbabilityUpper,  // vacuous when >= 1
    MomentLower,       // vacuous when <= 0 or undefined
    MomentUpper,       // vacuous when infinite
    Constant,          // a number, never vacuous
};

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double value = 0.0;
    bool vacuous = false;
    BoundKind kind = BoundKind::Constant;
};

BoundReport make_report(std::string name, BoundKind kind, double value,
                        std::vector<std::pair<std::string, double>> inputs);
bool is_vacuous(BoundKind kind, double value) noexcept;

// ---------------------------------------------------------------------------
// Constants of the lower-bound theorem.

enum class KBranch { Exponential, Alphabet };

/// K = min(2^-4 10^-2 e^-67, 1/(800 m)).
double theorem_K(std::size_t m) noexcept;
KBranch theorem_K_branch(std::size_t m) noexcept;
/// Largest admissible non-dominant probability: min(2^-2 e^-5 K/m, K/(2 m^2)).
double p2_threshold(std::size_t m) noexcept;

struct TheoremConstants {
    std::size_t m = 1;
    double r = 1.0;
    double p1 = 1.0;
    double p2 = 0.0;
    double K = 0.0;
    KBranch k_branch = KBranch::Exponential;
    double p2_threshold = 0.0;
    double theta = 1.0 / 25.0;
    double epsilon = 0.0;
    double C1 = 0.0;
    /// Upper cap on C2 = min_n M_r(LC_n)/n^{r/2}, from the moment upper bound.
    double C2_cap = 0.0;
    /// n from which the C1 estimate applies: p2^-12 + m^8.
    double n_min = 0.0;
    bool regime = false;

    /// Gap length e^{-1/2} (n p1 (1-p1))^{1/2} (1/(1+r))^{1/r}.
    double ell(double n) const noexcept;
    /// Window [2n p1 - s, 2n p1 + s], s = sqrt(2n p1 (1-p1)).
    std::pair<double, double> interval(double n) const noexcept;
    /// Slope K/(4m) required on the window.
    double slope() const noexcept { return K / (4.0 * static_cast<double>(m)); }
    double C() const noexcept { return C1 < C2_cap ? C1 : C2_cap; }
};

TheoremConstants theorem_constants(const AlphabetDist& dist, double r);

// ---------------------------------------------------------------------------
// Moment upper bound and its tensorization inequality.

/// For r >= 2: (r-1)^r/2 (1 - sum p^2) (2n)^{r/2}; for 0 < r <= 2:
/// ((1 - sum p^2) n)^{r/2}. The branches agree at r = 2.
double moment_upper_bound(double r, std::span<const double> probs, std::size_t n);

struct DiscreteLaw {
    std::vector<double> values;
    std::vector<double> probs;
};

using MultivariateFn = std::function<double(std::span<const double>)>;

struct BurkholderCheck {
    double lhs = 0.0;  // ||S - ES||_r
    double rhs = 0.0;  // (r-1)/2^{1/r} (sum_i ||S - S_i||_r^2)^{1/2}
    bool exact = true;
    double lhs_se = 0.0;
    double rhs_se = 0.0;
    /// lhs <= rhs up to relative rounding `rel_tol` (equality is attained by sums at r = 2).
    bool holds(double rel_tol = 1e-12) const noexcept;
};

/// Exact evaluation over the full product support (at most 2^22 points).
BurkholderCheck burkholder_tensorized_check(const MultivariateFn& f,
                                            std::span<const DiscreteLaw> laws, double r);
/// Monte Carlo estimate with standard errors from `samples` draws.
BurkholderCheck burkholder_tensorized_check_mc(const MultivariateFn& f,
                                               std::span<const DiscreteLaw> laws, double r,
                                               std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Reversed Lipschitz lower bound.

/// (c/2)^r (M_r(T) - ell^r). Requires c > 0, ell >= 0, r >= 1.
BoundReport reversed_lipschitz_bound(double c, double ell, double r, double m_r_T);

/// E|T - ET|^r for a finite law.
double exact_central_moment(std::span<const double> values, std::span<const double> probs,
                            double r);
/// Largest c with f(j) - f(i) >= c (j - i) for all j >= i + ell on D = {0..|f|-1}.
/// Returns +inf when no pair is constrained.
double reversed_lipschitz_slope(std::span<const double> f, std::size_t ell);

// ---------------------------------------------------------------------------
// Tail and probability bounds.

/// exp(-(beta - 1 - log beta) N) >= P(sum of N Geometric(p) <= beta N / p).
BoundReport geometric_sum_tail(std::size_t N, double p, double beta);

struct RoughLcsLower {
    double threshold = 0.0;   // n p1 + ((1-p2)^3 - p2) n p2^2
    double prob_bound = 0.0;  // 1 - 4 e^{-2n p2^6} - e^{n (p2^3 + log(1-p2^3))(p1-p2^3)}
    bool vacuous = true;
};
RoughLcsLower rough_lcs_lower(std::size_t n, double p1, double p2);

/// ((4+2t)/t^2)^t ((2+t)/2)^2 (1/(1-t))^{1-t}.
double f_theta(double theta);

struct EventParams {
    std::size_t n = 1;
    double p1 = 0.5;
    double p2 = 0.5;
    double K = 0.0;
    std::size_t m = 2;
    double ell = 0.0;
    double theta = 1.0 / 25.0;
};

struct EventBounds {
    BoundReport event_Bn;
    BoundReport event_Bn_union;
    BoundReport event_On;
    BoundReport event_D;
    BoundReport event_E;
    BoundReport event_F;
    BoundReport event_G;
    BoundReport berry_esseen;
    BoundReport hoeffding_slope;
    double log_f_theta = 0.0;
    double event_E_exponent = 0.0;
    bool event_E_exponent_positive = false;

    std::vector<BoundReport> all() const;
};

EventBounds event_probability_bounds(const EventParams& params);

// ---------------------------------------------------------------------------
// Window estimates for N_1 ~ Bin(2n, p1) conditioned on the window.

/// int_{-1}^{1} |x|^r e^{-x^2/2} dx by adaptive Gauss-Kronrod.
double gaussian_window_integral(double r);

struct ConditionedWindow {
    double berry_esseen_term = 0.0;  // 1/sqrt(2n p1 (1-p1))
    double mean_shift_bound = 0.0;   // bound on |E(N1 | window) - 2n p1|
    double abs_moment_lower = 0.0;   // lower bound on E(|N1 - 2n p1|^r | window)
    double moment_lower = 0.0;       // lower bound on M_r(N1 | window)
    double window_prob_lower = 0.0;  // int e^{-x^2/2}/sqrt(2 pi) - berry_esseen_term
    bool mean_shift_vacuous = true;
    bool abs_moment_vacuous = true;
    bool moment_vacuous = true;
    std::vector<BoundReport> reports(std::size_t n, double p1, double r) const;
};

ConditionedWindow conditioned_binomial_moment_window(std::size_t n, double p1, double r);

/// Every bound for a parameter set, for the bounds report.
std::vector<BoundReport> all_bound_reports(const AlphabetDist& dist, std::size_t n,
                                           std::span<const double> r_values);

}  // namespace lcsm
