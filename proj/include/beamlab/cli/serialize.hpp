#pragma once

// Output records: tables (CSV or JSON) and JSON reports that re-parse into
// the library's record types.

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "beamlab/ext_real.hpp"
#include "beamlab/gaussian_family.hpp"
#include "beamlab/projection_witness.hpp"

namespace beamlab {

// Infinite values are the string "inf".
void to_json(nlohmann::json& j, const ExtReal& v);
void from_json(const nlohmann::json& j, ExtReal& v);

// effective_delta is null with "effective_delta_infinite": true when infinite.
void to_json(nlohmann::json& j, const WitnessReport& r);
void from_json(const nlohmann::json& j, WitnessReport& r);

void to_json(nlohmann::json& j, const WidthScanFit& f);
void from_json(const nlohmann::json& j, WidthScanFit& f);

void to_json(nlohmann::json& j, const PhysicalityVerdict& v);
void from_json(const nlohmann::json& j, PhysicalityVerdict& v);

void to_json(nlohmann::json& j, const SeparabilityReport& r);
void from_json(const nlohmann::json& j, SeparabilityReport& r);

/// {"lambda_bar": .., "V": [[..] x 4]}
void to_json(nlohmann::json& j, const VarianceMatrix& v);
void from_json(const nlohmann::json& j, VarianceMatrix& v);

}  // namespace beamlab

namespace beamlab::cli {

/// std::monostate is "not applicable" (null).
using Cell = std::variant<std::monostate, double, ExtReal, bool, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// %.16e for numbers (17 significant digits), "inf", "null", true/false.
std::string format_cell(const Cell& c);

void write_csv(std::ostream& out, const Table& t);

/// {"columns": [...], "rows": [[...], ...]}
nlohmann::json table_to_json(const Table& t);
Table table_from_json(const nlohmann::json& j);

/// Flattens nested objects and arrays into dotted column names, one row.
Table flatten_report(const nlohmann::json& report);

}  // namespace beamlab::cli
