#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcsm/bounds.hpp"
#include "lcsm/config.hpp"
#include "lcsm/errors.hpp"
#include "lcsm/experiments.hpp"
#include "lcsm/report.hpp"

namespace {

using namespace lcsm;

enum Exit { kOk = 0, kInvalid = 1, kFailed = 2, kBudget = 3 };

struct Flags {
    std::string config;
    std::size_t n = 0;
    std::string n_grid;
    std::string dist;
    std::size_t dominant = 1;
    std::size_t replicates = 0;
    std::string r;
    std::string seed;
    std::size_t threads = 0;
    std::string out;
    std::string format;
    bool json = false;
    bool emit_config = false;
    std::string emit_distribution;
    std::size_t bootstrap = 0;
    std::size_t budget = 0;
    bool stratify = false;
};

template <class T, class Parse>
std::vector<T> split_list(const std::string& text, Parse parse)
{
    std::vector<T> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        require(!item.empty(), "empty entry in list '" + text + "'");
        out.push_back(parse(item));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

double to_real(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s.size() && used > 0, "not a number: '" + s + "'");
    return v;
}

std::size_t to_count(const std::string& s)
{
    const std::uint64_t v = parse_seed(s);
    return static_cast<std::size_t>(v);
}

void add_options(CLI::App& cmd, Flags& f, std::vector<CLI::Option*>& given)
{
    given.push_back(cmd.add_option("--config", f.config, "JSON config file"));
    given.push_back(cmd.add_option("--n", f.n, "word length"));
    given.push_back(cmd.add_option("--n-grid", f.n_grid, "comma-separated word lengths"));
    given.push_back(cmd.add_option("--dist", f.dist, "comma-separated letter probabilities"));
    given.push_back(cmd.add_option("--dominant", f.dominant, "1-based index of the dominant letter"));
    given.push_back(cmd.add_option("--replicates", f.replicates, "Monte Carlo replicates"));
    given.push_back(cmd.add_option("--r", f.r, "comma-separated moment orders"));
    given.push_back(cmd.add_option("--seed", f.seed, "master seed (decimal or 0x hex)"));
    given.push_back(cmd.add_option("--threads", f.threads, "worker threads"));
    given.push_back(cmd.add_option("--out", f.out, "output path (default stdout)"));
    given.push_back(cmd.add_option("--format", f.format, "csv or json"));
    given.push_back(cmd.add_flag("--json", f.json, "shorthand for --format json"));
    given.push_back(cmd.add_flag("--emit-config", f.emit_config, "print the resolved config and exit"));
    given.push_back(cmd.add_option("--emit-distribution", f.emit_distribution,
                                   "write raw LC_n samples to this CSV path"));
    given.push_back(cmd.add_option("--bootstrap", f.bootstrap, "bootstrap resamples"));
    given.push_back(cmd.add_option("--budget", f.budget, "work limit for exhaustive searches"));
    given.push_back(cmd.add_flag("--stratify", f.stratify, "stratify swap outcomes by B_n membership"));
}

bool set(const CLI::App& cmd, const char* name)
{
    return cmd.count(name) > 0;
}

ExperimentConfig resolve(const CLI::App& cmd, const Flags& f, ExperimentKind kind)
{
    ExperimentConfig cfg;
    if (kind == ExperimentKind::Bounds) {
        cfg.format = "json";
    }
    if (set(cmd, "--config")) {
        cfg = load_config_file(f.config, cfg);
    }
    cfg.kind = kind;
    if (const char* env = std::getenv("LCS_MOMENTS_SEED"); env != nullptr && *env != '\0') {
        cfg.seed = parse_seed(env);
    }
    if (set(cmd, "--n") && set(cmd, "--n-grid")) {
        throw InvalidArgument("--n and --n-grid are mutually exclusive");
    }
    if (set(cmd, "--n")) {
        cfg.n_grid = {f.n};
    }
    if (set(cmd, "--n-grid")) {
        cfg.n_grid = split_list<std::size_t>(f.n_grid, to_count);
    }
    if (set(cmd, "--dist")) {
        cfg.probs = split_list<double>(f.dist, to_real);
    }
    if (set(cmd, "--dominant")) {
        cfg.dominant = f.dominant;
    }
    if (set(cmd, "--replicates")) {
        cfg.replicates = f.replicates;
    }
    if (set(cmd, "--r")) {
        cfg.r_values = split_list<double>(f.r, to_real);
    }
    if (set(cmd, "--seed")) {
        cfg.seed = parse_seed(f.seed);
    }
    if (set(cmd, "--threads")) {
        cfg.threads = f.threads;
    }
    if (set(cmd, "--out")) {
        cfg.output = f.out;
    }
    if (set(cmd, "--format")) {
        cfg.format = f.format;
    }
    if (f.json) {
        cfg.format = "json";
    }
    if (set(cmd, "--emit-distribution")) {
        cfg.emit_distribution = f.emit_distribution;
    }
    if (set(cmd, "--bootstrap")) {
        cfg.bootstrap = f.bootstrap;
    }
    if (set(cmd, "--budget")) {
        cfg.budget = f.budget;
    }
    if (f.stratify) {
        cfg.stratify = true;
    }
    cfg.validate();
    return cfg;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), "cannot open output file " + path);
    out << text;
    require(static_cast<bool>(out), "failed writing output file " + path);
}

int run(const ExperimentConfig& cfg)
{
    const bool json = cfg.format == "json";
    switch (cfg.kind) {
    case ExperimentKind::Moments: {
        const AlphabetDist dist = cfg.dist();
        std::vector<MomentEstimate> rows;
        std::vector<std::vector<double>> raw;
        for (std::size_t n : cfg.n_grid) {
            raw.push_back(sample_lcs(dist, n, cfg.replicates, cfg.seed, cfg.threads));
            auto est = moment_estimates(raw.back(), n, cfg.r_values, cfg.bootstrap, cfg.seed, cfg.threads);
            rows.insert(rows.end(), est.begin(), est.end());
        }
        write_text(cfg.output, json ? moments_json(rows) : moments_csv(rows));
        if (!cfg.emit_distribution.empty()) {
            write_text(cfg.emit_distribution, distribution_csv(cfg.n_grid, raw));
        }
        return kOk;
    }
    case ExperimentKind::Scaling: {
        const auto fits = scaling_experiment(cfg);
        write_text(cfg.output, json ? scaling_json(fits) : scaling_csv(fits));
        return kOk;
    }
    case ExperimentKind::Swap: {
        const auto rows = swap_probability_experiment(cfg);
        write_text(cfg.output, json ? swap_json(rows) : swap_csv(rows));
        return kOk;
    }
    case ExperimentKind::ChainLaw: {
        const auto rows = chain_law_test(cfg);
        write_text(cfg.output, json ? chain_law_json(rows) : chain_law_csv(rows));
        return kOk;
    }
    case ExperimentKind::Bounds: {
        const AlphabetDist dist = cfg.dist();
        std::vector<BoundReport> rows;
        for (std::size_t n : cfg.n_grid) {
            auto reps = all_bound_reports(dist, n, cfg.r_values);
            rows.insert(rows.end(), reps.begin(), reps.end());
        }
        write_text(cfg.output, json ? bounds_json(rows) : bounds_csv(rows));
        return kOk;
    }
    case ExperimentKind::Oracle: {
        const OracleReport report = oracle_suite(cfg);
        write_text(cfg.output, json ? oracle_json(report) : oracle_csv(report));
        for (const auto& c : report.checks) {
            if (!c.passed) {
                std::cerr << "oracle check " << c.name << " failed: " << c.detail << '\n';
            }
        }
        return report.passed() ? kOk : kFailed;
    }
    }
    return kInvalid;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo and exact experiments on the longest common subsequence of random words"};
    app.require_subcommand(1);
    Flags flags;
    struct Entry {
        ExperimentKind kind;
        const char* help;
        CLI::App* cmd = nullptr;
        std::vector<CLI::Option*> opts;
    };
    std::vector<Entry> entries = {
        {ExperimentKind::Moments, "central absolute moments of LC_n with bootstrap intervals", nullptr, {}},
        {ExperimentKind::Scaling, "log-log fit of moment growth over an n grid", nullptr, {}},
        {ExperimentKind::Swap, "effect on LC_n of turning one non-dominant letter dominant", nullptr, {}},
        {ExperimentKind::ChainLaw, "exact law of the dominant-letter chain against the conditional law", nullptr, {}},
        {ExperimentKind::Bounds, "evaluate every closed-form bound for a parameter set", nullptr, {}},
        {ExperimentKind::Oracle, "brute-force consistency checks of the alignment machinery", nullptr, {}},
    };
    for (auto& e : entries) {
        e.cmd = app.add_subcommand(std::string(kind_name(e.kind)), e.help);
        add_options(*e.cmd, flags, e.opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        for (auto& e : entries) {
            if (!e.cmd->parsed()) {
                continue;
            }
            const ExperimentConfig cfg = resolve(*e.cmd, flags, e.kind);
            if (flags.emit_config) {
                std::cout << config_to_json(cfg);
                return kOk;
            }
            return run(cfg);
        }
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
