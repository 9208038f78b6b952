#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcsm/bounds.hpp"
#include "lcsm/experiments.hpp"

namespace lcsm {

/// Shortest decimal text that reads back to the same double, or "nan",
/// "inf", "-inf".
std::string format_real(double x);

std::string moments_csv(std::span<const MomentEstimate> rows);
std::string moments_json(std::span<const MomentEstimate> rows);

/// One block per r: point rows, then the "slope,slope_ci_lo,slope_ci_hi" summary.
std::string scaling_csv(std::span<const ScalingFit> fits);
std::string scaling_json(std::span<const ScalingFit> fits);

std::string swap_csv(std::span<const SwapResult> rows);
std::string swap_json(std::span<const SwapResult> rows);

std::string chain_law_csv(std::span<const ChainLawResult> rows);
std::string chain_law_json(std::span<const ChainLawResult> rows);

std::string bounds_csv(std::span<const BoundReport> rows);
/// JSON array of {name, inputs, value, vacuous}; non-finite values become null.
std::string bounds_json(std::span<const BoundReport> rows);

std::string oracle_csv(const OracleReport& report);
std::string oracle_json(const OracleReport& report);

/// Raw samples as "n,replicate,lc,scaled" with scaled = (lc - mean) / sqrt(n),
/// the mean taken per n.
std::string distribution_csv(std::span<const std::size_t> ns,
                             std::span<const std::vector<double>> samples);

std::string membership_name(Membership m);

/// {"v", "pi", "nu", "S", "r", "lambda"} for one decoded vector.
std::string decomposition_json(const CellDecomposition& d);

}  // namespace lcsm
