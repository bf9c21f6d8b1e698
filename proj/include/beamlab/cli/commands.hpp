#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include <json.hpp>

#include "beamlab/cli/config.hpp"
#include "beamlab/cli/serialize.hpp"

namespace beamlab::cli {

/// A command result. The JSON document is the full report; `table` is what
/// --format csv writes (reports without one are flattened to a single row).
struct CommandOutput {
  nlohmann::json report;
  std::optional<Table> table;
  OutputFormat default_format = OutputFormat::json;
};

/// Points per axis for 2D kernel PSD checks run by --numeric.
inline constexpr int kCliPsdPointsPerAxis = 24;

CommandOutput cmd_propagate(const ScanConfig& c);
CommandOutput cmd_witness(const ScanConfig& c);
CommandOutput cmd_physicality(const ScanConfig& c);
CommandOutput cmd_classify(const ScanConfig& c);
CommandOutput cmd_pt(const ScanConfig& c);
CommandOutput cmd_compare_oracle(const ScanConfig& c);

/// Dispatch by subcommand name; throws ParameterError for unknown names.
CommandOutput run_command(std::string_view name, const ScanConfig& c);

/// Writes the output in the configured (or default) format to
/// c.output_path, or to `fallback` when no path is set.
void emit(const CommandOutput& out, const ScanConfig& c, std::ostream& fallback);

}  // namespace beamlab::cli
