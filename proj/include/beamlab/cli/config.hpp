#pragma once

// Scan configuration shared by every subcommand. A config is one JSON
// document; command-line flags are applied on top of it afterwards.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "beamlab/core_beams.hpp"
#include "beamlab/ext_real.hpp"
#include "beamlab/gaussian_family.hpp"

namespace beamlab::cli {

enum class Family { coherent1d, gsm, elliptic2d, tgsm, curv, agsm };
enum class OutputFormat { csv, json };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);  // throws ParameterError
std::string_view to_string(OutputFormat f);
OutputFormat format_from_string(std::string_view s);

/// Inclusive linear range; steps == 1 yields {start}.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> values() const;
  friend bool operator==(const Range&, const Range&) = default;
};

/// "start,stop,steps"
Range parse_range(std::string_view text, std::string_view field);

struct ScanConfig {
  Family family = Family::coherent1d;
  std::map<std::string, ExtReal> parameters;
  std::optional<std::string> scan_axis;
  std::optional<Range> scan_range;
  std::optional<Range> z_range;
  std::optional<std::string> output_path;
  std::optional<OutputFormat> output_format;

  bool verify = false;
  bool numeric = false;
  std::optional<std::uint64_t> seed;
  int draws = 5;  // random parameter sets drawn by compare-oracle --seed

  /// Every parameter name known to family, with its default value.
  static const std::map<std::string, ExtReal>& defaults(Family family);

  /// Parameter value: the explicit entry, else the family default.
  ExtReal param(const std::string& name) const;
  double finite_param(const std::string& name) const;

  /// Checks parameter names and the scan axis against the family, and the
  /// range step counts. Throws ParameterError naming the offending field.
  void validate() const;

  /// Scan axis values, or a single empty slot when no scan is configured.
  std::vector<std::optional<double>> scan_points() const;

  /// Copy with the scan axis parameter set to value.
  ScanConfig at(std::optional<double> value) const;

  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

/// Parameter values accept JSON numbers or the string "inf" (or "-inf").
ExtReal parse_param_value(const nlohmann::json& j, std::string_view name);
ExtReal parse_param_text(std::string_view text, std::string_view name);

ScanConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScanConfig& c);
ScanConfig load_config(const std::string& path);

// Typed parameter records, built from the (scan-point) config.
BeamParams1D coherent1d_params(const ScanConfig& c);
GsmParams gsm_params(const ScanConfig& c);
BeamParams2D elliptic2d_params(const ScanConfig& c);
TgsmParams tgsm_params(const ScanConfig& c);
CurvParams curv_params(const ScanConfig& c);
AgsmParams agsm_params(const ScanConfig& c);

}  // namespace beamlab::cli
