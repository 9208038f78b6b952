#include "lcsm/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcsm/errors.hpp"

namespace lcsm {

namespace {

using nlohmann::json;

template <class T>
T get_as(const json& j, const char* key)
{
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw InvalidArgument(std::string("config field '") + key + "' has the wrong type");
    }
}

std::size_t get_count(const json& j, const char* key)
{
    require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
            std::string("config field '") + key + "' must be a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

std::uint64_t parse_seed(std::string_view text)
{
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value, base);
    require(!text.empty() && res.ec == std::errc() && res.ptr == end,
            "seed must be an unsigned 64-bit integer");
    return value;
}

ExperimentConfig apply_config_json(std::string_view text, ExperimentConfig cfg)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    require(j.is_object(), "config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "kind") {
            cfg.kind = parse_kind(get_as<std::string>(v, "kind"));
        } else if (key == "dist") {
            cfg.probs = get_as<std::vector<double>>(v, "dist");
        } else if (key == "dominant") {
            cfg.dominant = get_count(v, "dominant");
        } else if (key == "n_grid") {
            require(v.is_array(), "config field 'n_grid' must be an array");
            cfg.n_grid.clear();
            for (const auto& e : v) {
                cfg.n_grid.push_back(get_count(e, "n_grid"));
            }
        } else if (key == "n") {
            cfg.n_grid = {get_count(v, "n")};
        } else if (key == "replicates") {
            cfg.replicates = get_count(v, "replicates");
        } else if (key == "r") {
            cfg.r_values = v.is_array() ? get_as<std::vector<double>>(v, "r")
                                        : std::vector<double>{get_as<double>(v, "r")};
        } else if (key == "seed") {
            require(v.is_string() || v.is_number_unsigned(),
                    "config field 'seed' must be an unsigned integer or a string");
            cfg.seed = v.is_string() ? parse_seed(v.get<std::string>()) : v.get<std::uint64_t>();
        } else if (key == "threads") {
            cfg.threads = get_count(v, "threads");
        } else if (key == "output") {
            cfg.output = get_as<std::string>(v, "output");
        } else if (key == "format") {
            cfg.format = get_as<std::string>(v, "format");
        } else if (key == "bootstrap") {
            cfg.bootstrap = get_count(v, "bootstrap");
        } else if (key == "budget") {
            cfg.budget = get_count(v, "budget");
        } else if (key == "stratify") {
            cfg.stratify = get_as<bool>(v, "stratify");
        } else if (key == "emit_distribution") {
            cfg.emit_distribution = get_as<std::string>(v, "emit_distribution");
        } else {
            throw InvalidArgument("unknown config field '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return apply_config_json(buf.str(), std::move(base));
}

std::string config_to_json(const ExperimentConfig& cfg)
{
    json j;
    j["kind"] = std::string(kind_name(cfg.kind));
    j["dist"] = cfg.probs;
    j["dominant"] = cfg.dominant;
    j["n_grid"] = cfg.n_grid;
    j["replicates"] = cfg.replicates;
    j["r"] = cfg.r_values;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["output"] = cfg.output;
    j["format"] = cfg.format;
    j["bootstrap"] = cfg.bootstrap;
    j["budget"] = cfg.budget;
    j["stratify"] = cfg.stratify;
    j["emit_distribution"] = cfg.emit_distribution;
    return j.dump(2) + "\n";
}

}  // namespace lcsm
