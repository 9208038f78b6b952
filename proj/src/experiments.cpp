#include "lcsm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcsm/bounds.hpp"
#include "lcsm/coupling.hpp"
#include "lcsm/errors.hpp"
#include "lcsm/lcs.hpp"

namespace lcsm {

namespace {

// Stream tags below (seed, n) that keep bootstrap draws apart from samples.
constexpr std::uint64_t kBootstrapTag = 0xB0075742ULL;
constexpr std::uint64_t kSlopeTag = 0x51093ULL;

}  // namespace

std::string_view kind_name(ExperimentKind kind) noexcept
{
    switch (kind) {
    case ExperimentKind::Moments:
        return "moments";
    case ExperimentKind::Scaling:
        return "scaling";
    case ExperimentKind::Swap:
        return "swap";
    case ExperimentKind::ChainLaw:
        return "chain-law";
    case ExperimentKind::Bounds:
        return "bounds";
    case ExperimentKind::Oracle:
        return "oracle";
    }
    return "moments";
}

ExperimentKind parse_kind(std::string_view name)
{
    for (auto k : {ExperimentKind::Moments, ExperimentKind::Scaling, ExperimentKind::Swap,
                   ExperimentKind::ChainLaw, ExperimentKind::Bounds, ExperimentKind::Oracle}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown experiment kind '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const
{
    (void)dist();
    require(!n_grid.empty(), "n_grid must not be empty");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        require(n_grid[i] >= 1, "word lengths must be at least 1");
        require(i == 0 || n_grid[i] > n_grid[i - 1], "n_grid must be strictly increasing");
    }
    require(replicates >= 1, "replicates must be at least 1");
    require(!r_values.empty(), "r_values must not be empty");
    for (double r : r_values) {
        require(r > 0.0 && std::isfinite(r), "moment orders must be positive");
    }
    require(threads >= 1, "threads must be at least 1");
    require(format == "csv" || format == "json", "format must be csv or json");
    require(bootstrap >= 2, "bootstrap needs at least two resamples");
    require(budget >= 1, "budget must be at least 1");
}

AlphabetDist ExperimentConfig::dist() const
{
    return AlphabetDist::validate(probs, dominant);
}

std::vector<double> sample_lcs(const AlphabetDist& dist, std::size_t n, std::size_t replicates,
                               std::uint64_t seed, std::size_t threads)
{
    std::vector<double> out(replicates);
    parallel_for(replicates, threads, [&](std::size_t i) {
        const SequencePair pair = sample_pair(dist, n, derive_seed(seed, {n, i}));
        out[i] = static_cast<double>(lcs_length_fast(pair.x, pair.y));
    });
    return out;
}

std::vector<MomentEstimate> moment_estimates(std::span<const double> samples, std::size_t n,
                                             std::span<const double> r_values,
                                             std::size_t resamples, std::uint64_t seed,
                                             std::size_t threads)
{
    const double mu = mean(samples);
    const double count = static_cast<double>(samples.size());
    const double mean_se =
        samples.size() > 1 ? std::sqrt(central_abs_moment(samples, 2.0) / (count - 1.0)) : 0.0;
    std::vector<MomentEstimate> out;
    for (double r : r_values) {
        const BootstrapEstimate b =
            bootstrap_moment(samples, r, resamples, derive_seed(seed, {n, kBootstrapTag}), 0.99, threads);
        MomentEstimate e;
        e.n = n;
        e.r = r;
        e.mean_lc = mu;
        e.m_r_hat = b.estimate;
        e.se = b.se;
        e.ci99 = b.ci;
        e.gamma_hat = mu / static_cast<double>(n);
        e.mean_se = mean_se;
        out.push_back(e);
    }
    return out;
}

std::vector<MomentEstimate> estimate_moments(const ExperimentConfig& cfg)
{
    cfg.validate();
    const AlphabetDist dist = cfg.dist();
    std::vector<MomentEstimate> out;
    for (std::size_t n : cfg.n_grid) {
        const auto samples = sample_lcs(dist, n, cfg.replicates, cfg.seed, cfg.threads);
        auto est = moment_estimates(samples, n, cfg.r_values, cfg.bootstrap, cfg.seed, cfg.threads);
        out.insert(out.end(), est.begin(), est.end());
    }
    return out;
}

std::vector<ScalingFit> scaling_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    require(cfg.n_grid.size() >= 4, "scaling fit needs at least four grid points");
    const AlphabetDist dist = cfg.dist();
    const std::size_t points = cfg.n_grid.size();
    const std::size_t rs = cfg.r_values.size();

    std::vector<std::vector<double>> samples;
    std::vector<ScalingFit> fits(rs);
    for (std::size_t j = 0; j < rs; ++j) {
        fits[j].r = cfg.r_values[j];
    }
    for (std::size_t n : cfg.n_grid) {
        samples.push_back(sample_lcs(dist, n, cfg.replicates, cfg.seed, cfg.threads));
        const auto est = moment_estimates(samples.back(), n, cfg.r_values, cfg.bootstrap, cfg.seed, cfg.threads);
        for (std::size_t j = 0; j < rs; ++j) {
            fits[j].points.push_back(est[j]);
        }
    }

    std::vector<double> log_n(points);
    for (std::size_t p = 0; p < points; ++p) {
        log_n[p] = std::log(static_cast<double>(cfg.n_grid[p]));
    }
    for (auto& fit : fits) {
        std::vector<double> log_m(points);
        for (std::size_t p = 0; p < points; ++p) {
            require(fit.points[p].m_r_hat > 0.0,
                    "degenerate data: zero moment estimate at n = " + std::to_string(cfg.n_grid[p]));
            log_m[p] = std::log(fit.points[p].m_r_hat);
        }
        const LinearFit lf = ols(log_n, log_m);
        fit.slope = lf.slope;
        fit.intercept = lf.intercept;
        fit.residuals = lf.residuals;
        fit.r_squared = lf.r_squared;
    }

    // Bootstrap over replicates: resample every grid point, refit every r.
    std::vector<std::vector<double>> slopes(rs, std::vector<double>(cfg.bootstrap));
    parallel_for(cfg.bootstrap, cfg.threads, [&](std::size_t b) {
        std::vector<std::vector<double>> log_m(rs, std::vector<double>(points));
        std::vector<double> resample(cfg.replicates);
        for (std::size_t p = 0; p < points; ++p) {
            Rng rng = Rng::stream(cfg.seed, {cfg.n_grid[p], kBootstrapTag, b, 1});
            for (auto& s : resample) {
                s = samples[p][static_cast<std::size_t>(rng.below(cfg.replicates))];
            }
            for (std::size_t j = 0; j < rs; ++j) {
                // A zero resampled moment leaves the fit undefined; clamp it to
                // the smallest positive double so the replicate stays usable.
                const double m = central_abs_moment(resample, cfg.r_values[j]);
                log_m[j][p] = std::log(std::max(m, std::numeric_limits<double>::min()));
            }
        }
        for (std::size_t j = 0; j < rs; ++j) {
            slopes[j][b] = ols(log_n, log_m[j]).slope;
        }
    });
    for (std::size_t j = 0; j < rs; ++j) {
        fits[j].slope_ci = percentile_interval(slopes[j], 0.99);
        fits[j].slope_ci.lo = std::min(fits[j].slope_ci.lo, fits[j].slope);
        fits[j].slope_ci.hi = std::max(fits[j].slope_ci.hi, fits[j].slope);
    }
    return fits;
}

std::vector<SwapResult> swap_probability_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    const AlphabetDist dist = cfg.dist();
    require(dist.size() >= 2, "swap experiment needs a non-dominant letter");
    const Letter dom = dist.dominant();
    const double K = theorem_K(dist.size());

    std::vector<SwapResult> out;
    for (std::size_t n : cfg.n_grid) {
        std::vector<int> deltas(cfg.replicates);
        std::vector<Membership> member(cfg.replicates, Membership::Unknown);
        parallel_for(cfg.replicates, cfg.threads, [&](std::size_t i) {
            SequencePair pair = sample_pair(dist, n, derive_seed(cfg.seed, {n, i}));
            const std::uint64_t swap_seed = derive_seed(cfg.seed, {n, i, 1});
            if (non_dominant_positions(pair, dom).empty()) {
                deltas[i] = 0;
                member[i] = Membership::Unknown;
                return;
            }
            deltas[i] = swap_experiment(pair, dom, swap_seed).delta;
            if (cfg.stratify) {
                member[i] = in_B_n(pair.x, pair.y, K, dist.size(), cfg.budget, dom).status;
            }
        });

        SwapResult r;
        r.n = n;
        r.replicates = cfg.replicates;
        for (std::size_t i = 0; i < cfg.replicates; ++i) {
            const int d = deltas[i];
            if (d > 0) {
                ++r.plus;
            } else if (d < 0) {
                ++r.minus;
            } else {
                ++r.zero;
            }
            if (d > 1 || d < -1) {
                ++r.violations;
            }
        }
        r.p_plus = proportion_interval(r.plus, r.replicates, 0.99);
        r.p_minus = proportion_interval(r.minus, r.replicates, 0.99);
        r.diff = proportion_difference(r.plus, r.minus, r.replicates, 0.99);
        if (cfg.stratify) {
            for (auto status : {Membership::Member, Membership::NotMember, Membership::Unknown}) {
                SwapStratum s;
                s.membership = status;
                for (std::size_t i = 0; i < cfg.replicates; ++i) {
                    if (member[i] != status) {
                        continue;
                    }
                    ++s.count;
                    s.plus += deltas[i] > 0 ? 1 : 0;
                    s.minus += deltas[i] < 0 ? 1 : 0;
                }
                r.strata.push_back(s);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ChainLawResult> chain_law_test(const ExperimentConfig& cfg)
{
    cfg.validate();
    const AlphabetDist dist = cfg.dist();
    require(dist.size() >= 2 && dist.size() <= 3, "chain-law test needs 2 or 3 letters");
    std::vector<ChainLawResult> out;
    for (std::size_t n : cfg.n_grid) {
        require(n <= 4, "chain-law test needs n <= 4");
        ChainLawResult res;
        res.n = n;
        res.m = dist.size();
        ProbabilityTable mixture = product_law(dist, n);
        std::fill(mixture.p.begin(), mixture.p.end(), 0.0);
        for (std::size_t k = 0; k <= 2 * n; ++k) {
            const ProbabilityTable chain = chain_law_exact(dist, n, k);
            const ProbabilityTable cond = conditional_law_exact(dist, n, k);
            res.tv.push_back(total_variation(chain, cond));
            const double w = dominant_count_pmf(dist, n, k);
            for (std::size_t s = 0; s < chain.states(); ++s) {
                mixture.p[s] += w * chain.p[s];
            }
        }
        res.max_tv = *std::max_element(res.tv.begin(), res.tv.end());
        res.mixture_tv = total_variation(mixture, product_law(dist, n));
        out.push_back(std::move(res));
    }
    return out;
}

SlopeFrequency slope_event_frequency(const AlphabetDist& dist, std::size_t n, double r, double c,
                                     std::size_t replicates, std::uint64_t seed,
                                     std::size_t threads)
{
    require(replicates >= 1, "replicates must be at least 1");
    const TheoremConstants tc = theorem_constants(dist, r);
    SlopeFrequency f;
    f.n = n;
    f.replicates = replicates;
    f.c = c;
    f.ell = tc.ell(static_cast<double>(n));
    const auto [lo, hi] = tc.interval(static_cast<double>(n));
    // The window can poke outside [0, 2n] for small n; the chain only lives there.
    f.lo = std::max(0.0, lo);
    f.hi = std::min(2.0 * static_cast<double>(n), hi);
    std::vector<char> hit(replicates, 0);
    parallel_for(replicates, threads, [&](std::size_t i) {
        const CouplingTrace trace = run_chain(dist, n, derive_seed(seed, {n, i, kSlopeTag}));
        hit[i] = slope_event(trace, f.lo, f.hi, f.ell, c) ? 1 : 0;
    });
    for (char h : hit) {
        f.hits += static_cast<std::size_t>(h);
    }
    return f;
}

bool OracleReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

namespace {

std::string describe(const Word& x, const Word& y, std::size_t m)
{
    return "x=" + format_word(x, m) + " y=" + format_word(y, m);
}

void fail(OracleCheck& check, std::string detail)
{
    if (check.passed) {
        check.passed = false;
        check.detail = std::move(detail);
    }
}

std::size_t max_lambda(const Word& x, const Word& y, Letter dom, std::size_t budget,
                       std::size_t& worst_seen, bool& exceeded, std::size_t lcs)
{
    const std::size_t k_max = std::min(x.size(), y.size());
    const AdmissibleEnumeration en = enumerate_admissible(x, y, k_max, budget, dom);
    if (!en.complete) {
        throw BudgetExhausted("admissible enumeration exceeded the budget of " +
                              std::to_string(budget) + " extensions");
    }
    const AlignmentModel model(x, y, dom);
    std::size_t best = 0;
    for (const auto& v : en.vectors) {
        const auto d = model.decode_admissible(v);
        if (!d) {
            exceeded = true;
            continue;
        }
        const std::size_t lc = lambda_c(*d);
        worst_seen = std::max(worst_seen, lc);
        exceeded = exceeded || lc > lcs;
        best = std::max(best, lc);
    }
    return best;
}

void fixture_checks(OracleCheck& check)
{
    auto expect = [&](bool ok, const std::string& what) {
        ++check.cases;
        if (!ok) {
            fail(check, what);
        }
    };
    {
        const Word x = parse_word("1213131112");
        const Word y = parse_word("1113121112");
        const std::size_t lcs = lcs_length(x, y);
        expect(lcs == 8, "lcs(1213131112, 1113121112) = " + std::to_string(lcs));
        for (const AlignmentVector& v : {AlignmentVector{-1, 0}, AlignmentVector{0, -1}}) {
            const auto r = decode(x, y, v);
            const auto* d = std::get_if<CellDecomposition>(&r);
            expect(d != nullptr && lambda_c(*d) == 8, "decode " + format_vector(v) + " of the cell example");
        }
    }
    {
        const Word x = parse_word("1121131123");
        const Word y = parse_word("112131113");
        const std::size_t lcs = lcs_length(x, y);
        const AlignmentVector v{0, 0};
        const auto r = decode(x, y, v);
        const auto* d = std::get_if<CellDecomposition>(&r);
        expect(d != nullptr && lambda_c(*d) == lcs, "decode 0,0 of the breaking example");
        bool ok = false;
        try {
            const AlignmentVector w = break_cell(x, y, v, 2);
            const auto r2 = decode(x, y, w);
            const auto* d2 = std::get_if<CellDecomposition>(&r2);
            ok = w == AlignmentVector{0, 1, -1} && d2 != nullptr && lambda_c(*d2) == lcs;
        } catch (const std::exception&) {
            ok = false;
        }
        expect(ok, "breaking cell 2 of 0,0 must give 0,1,-1 with the same score");
    }
    {
        const Word x = parse_word("112113112131");
        const Word y = parse_word("131111111131");
        const SwapDistribution s = exact_swap_distribution(SequencePair(x, y), 1);
        expect(s.total() == 6 && 2 * s.plus >= s.total() && 3 * s.minus <= s.total(),
               "swap example: plus=" + std::to_string(s.plus) + " minus=" + std::to_string(s.minus) +
                   " of " + std::to_string(s.total()));
    }
}

}  // namespace

OracleReport oracle_suite(const ExperimentConfig& cfg, const LcsKernel& kernel_in)
{
    cfg.validate();
    const AlphabetDist dist = cfg.dist();
    const Letter dom = dist.dominant();
    const std::size_t m = dist.size();
    const LcsKernel kernel = kernel_in ? kernel_in : LcsKernel(lcs_length_fast);
    const std::size_t n_kernel = cfg.n_grid.back();
    const std::size_t n_small = std::min<std::size_t>(n_kernel, 10);

    OracleCheck admissible{"admissible_max_equals_lcs", true, 0, {}};
    OracleCheck fast{"fast_kernel_equals_dp", true, 0, {}};
    OracleCheck breaking{"break_cell_preserves_score", true, 0, {}};
    OracleCheck roundtrip{"encode_decode_roundtrip", true, 0, {}};
    OracleCheck backtrack{"backtrack_is_optimal_matching", true, 0, {}};
    OracleCheck perturb{"single_letter_change_moves_lcs_by_at_most_one", true, 0, {}};
    OracleCheck fixtures{"worked_examples", true, 0, {}};

    const std::size_t cases = cfg.replicates;
    // Per-case results are computed in parallel and folded in index order so
    // the reported counterexample does not depend on scheduling.
    struct CaseResult {
        std::string admissible;
        std::string fast;
        std::string breaking;
        std::size_t breaks = 0;
        std::string roundtrip;
        std::string backtrack;
    };
    std::vector<CaseResult> results(cases);
    parallel_for(cases, cfg.threads, [&](std::size_t i) {
        CaseResult& res = results[i];
        Rng rng = Rng::stream(cfg.seed, {0x0AC1E, i});
        {
            const std::size_t n = 1 + static_cast<std::size_t>(rng.below(n_small));
            const Word x = sample_word(dist, n, rng);
            const Word y = sample_word(dist, n, rng);
            const std::size_t lcs = lcs_length(x, y);
            std::size_t seen = 0;
            bool exceeded = false;
            const std::size_t best = max_lambda(x, y, dom, cfg.budget, seen, exceeded, lcs);
            if (best != lcs || exceeded) {
                res.admissible = describe(x, y, m) + " lcs=" + std::to_string(lcs) +
                                 " max_score=" + std::to_string(best);
            }

            const AlignmentVector v = encode_optimal(x, y, dom);
            const AlignmentModel model(x, y, dom);
            const auto d = model.decode_admissible(v);
            if (!d || lambda_c(*d) != lcs) {
                res.roundtrip = describe(x, y, m) + " v=" + format_vector(v);
            } else {
                for (std::size_t c = 1; c <= d->cells(); ++c) {
                    if (v[c - 1] != 0 || !find_split(model, *d, c)) {
                        continue;
                    }
                    ++res.breaks;
                    const AlignmentVector w = break_cell(model, v, c);
                    const auto dw = model.decode_admissible(w);
                    if (!dw || lambda_c(*dw) != lcs) {
                        res.breaking = describe(x, y, m) + " v=" + format_vector(v) +
                                       " cell=" + std::to_string(c);
                        break;
                    }
                }
            }

            const MatchedAlignment a = lcs_backtrack(x, y);
            if (!is_valid_matching(x, y, a) || a.pairs.size() != lcs) {
                res.backtrack = describe(x, y, m);
            }
        }
        {
            const std::size_t n = 1 + static_cast<std::size_t>(rng.below(n_kernel));
            const Word x = sample_word(dist, n, rng);
            const Word y = sample_word(dist, n, rng);
            const std::size_t want = lcs_length(x, y);
            const std::size_t got = kernel(x, y);
            if (got != want) {
                res.fast = describe(x, y, m) + " dp=" + std::to_string(want) +
                           " fast=" + std::to_string(got);
            }
        }
    });
    for (const auto& res : results) {
        ++admissible.cases;
        ++fast.cases;
        ++roundtrip.cases;
        ++backtrack.cases;
        breaking.cases += res.breaks;
        if (!res.admissible.empty()) {
            fail(admissible, res.admissible);
        }
        if (!res.fast.empty()) {
            fail(fast, res.fast);
        }
        if (!res.roundtrip.empty()) {
            fail(roundtrip, res.roundtrip);
        }
        if (!res.breaking.empty()) {
            fail(breaking, res.breaking);
        }
        if (!res.backtrack.empty()) {
            fail(backtrack, res.backtrack);
        }
    }

    // Every binary pair up to length 5 and every single-position change.
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t states = std::size_t{1} << (2 * n);
        for (std::size_t code = 0; code < states; ++code) {
            Word x;
            Word y;
            for (std::size_t i = 0; i < n; ++i) {
                x.letters.push_back(static_cast<Letter>(1 + ((code >> i) & 1)));
                y.letters.push_back(static_cast<Letter>(1 + ((code >> (n + i)) & 1)));
            }
            const auto base = static_cast<long>(lcs_length(x, y));
            for (std::size_t pos = 0; pos < 2 * n; ++pos) {
                Word x2 = x;
                Word y2 = y;
                Letter& l = pos < n ? x2.letters[pos] : y2.letters[pos - n];
                l = static_cast<Letter>(3 - l);
                const long now = static_cast<long>(lcs_length(x2, y2));
                ++perturb.cases;
                if (std::abs(now - base) > 1) {
                    fail(perturb, describe(x, y, 2) + " position=" + std::to_string(pos + 1));
                }
            }
        }
    }

    fixture_checks(fixtures);

    OracleReport report;
    report.checks = {admissible, fast, breaking, roundtrip, backtrack, perturb, fixtures};
    return report;
}

}  // namespace lcsm
