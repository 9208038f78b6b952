#pragma once

#include <string>
#include <string_view>

#include "lcsm/experiments.hpp"

namespace lcsm {

/// Applies the fields present in a JSON object to `base`. Unknown keys and
/// ill-typed values throw InvalidArgument.
ExperimentConfig apply_config_json(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

/// Fully resolved configuration as a JSON object; round-trips through apply_config_json.
std::string config_to_json(const ExperimentConfig& cfg);

/// Reads an unsigned 64-bit seed in decimal or 0x-prefixed hex.
std::uint64_t parse_seed(std::string_view text);

}  // namespace lcsm
