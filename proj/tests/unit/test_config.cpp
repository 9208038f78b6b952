#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lcsm/config.hpp"
#include "lcsm/errors.hpp"

using namespace lcsm;

TEST_CASE("seeds parse in decimal and hex")
{
    CHECK(parse_seed("0") == 0);
    CHECK(parse_seed("18446744073709551615") == 0xffffffffffffffffULL);
    CHECK(parse_seed("0x2A") == 42);
    CHECK_THROWS_AS(parse_seed(""), InvalidArgument);
    CHECK_THROWS_AS(parse_seed("-1"), InvalidArgument);
    CHECK_THROWS_AS(parse_seed("12abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_seed("18446744073709551616"), InvalidArgument);
}

TEST_CASE("config fields apply over a base")
{
    const auto cfg = apply_config_json(R"({"kind": "swap", "dist": [0.9, 0.1], "n_grid": [8, 16],
        "replicates": 12, "r": 3, "seed": "0x10", "threads": 2, "format": "json", "stratify": true})");
    CHECK(cfg.kind == ExperimentKind::Swap);
    CHECK(cfg.probs == std::vector<double>{0.9, 0.1});
    CHECK(cfg.n_grid == std::vector<std::size_t>{8, 16});
    CHECK(cfg.replicates == 12);
    CHECK(cfg.r_values == std::vector<double>{3.0});
    CHECK(cfg.seed == 16);
    CHECK(cfg.threads == 2);
    CHECK(cfg.format == "json");
    CHECK(cfg.stratify);
    CHECK(cfg.bootstrap == ExperimentConfig{}.bootstrap);

    ExperimentConfig base;
    base.replicates = 77;
    const auto kept = apply_config_json(R"({"n": 5})", base);
    CHECK(kept.replicates == 77);
    CHECK(kept.n_grid == std::vector<std::size_t>{5});
}

TEST_CASE("bad configs are rejected")
{
    CHECK_THROWS_AS(apply_config_json("{"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json("[1, 2]"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"replicate": 3})"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"replicates": -3})"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"replicates": "3"})"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"seed": -1})"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"kind": "nope"})"), InvalidArgument);
    CHECK_THROWS_AS(apply_config_json(R"({"dist": "0.5,0.5"})"), InvalidArgument);
    CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"), InvalidArgument);
}

TEST_CASE("resolved config round-trips")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::ChainLaw;
    cfg.probs = {0.6, 0.3, 0.1};
    cfg.n_grid = {1, 2, 3};
    cfg.r_values = {1.0, 2.5};
    cfg.seed = 0xfedcba9876543210ULL;
    cfg.output = "out.csv";
    cfg.emit_distribution = "dist.csv";
    const std::string text = config_to_json(cfg);
    const auto back = apply_config_json(text);
    CHECK(config_to_json(back) == text);
    CHECK(back.seed == cfg.seed);
    CHECK(back.kind == cfg.kind);

    const std::string path = "test_config_roundtrip.json";
    {
        std::ofstream out(path);
        out << text;
    }
    CHECK(config_to_json(load_config_file(path)) == text);
    std::remove(path.c_str());
}
