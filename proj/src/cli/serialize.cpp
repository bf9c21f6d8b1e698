#include "beamlab/cli/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "beamlab/errors.hpp"

namespace beamlab {

using nlohmann::json;

void to_json(json& j, const ExtReal& v) {
  if (v.is_infinite()) {
    j = "inf";
  } else {
    j = v.value();
  }
}

void from_json(const json& j, ExtReal& v) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    v = ExtReal::infinite();
  } else if (j.is_number()) {
    v = ExtReal::finite(j.get<double>());
  } else {
    throw ParameterError("expected a number or \"inf\"");
  }
}

void to_json(json& j, const WitnessReport& r) {
  j = json{{"projected_waist", r.projected_waist},
           {"effective_coherence_ratio", r.effective_coherence_ratio},
           {"effective_delta", r.effective_delta.is_infinite() ? json(nullptr) : json(r.effective_delta.value())},
           {"effective_delta_infinite", r.effective_delta.is_infinite()},
           {"entangled", r.entangled}};
}

void from_json(const json& j, WitnessReport& r) {
  r.projected_waist = j.at("projected_waist").get<double>();
  r.effective_coherence_ratio = j.at("effective_coherence_ratio").get<double>();
  r.effective_delta = j.at("effective_delta_infinite").get<bool>()
                          ? ExtReal::infinite()
                          : ExtReal::finite(j.at("effective_delta").get<double>());
  r.entangled = j.at("entangled").get<bool>();
}

void to_json(json& j, const WidthScanFit& f) {
  j = json{{"waist_sq", f.waist_sq}, {"slope", f.slope}, {"coherence_term", f.coherence_term}};
}

void from_json(const json& j, WidthScanFit& f) {
  f.waist_sq = j.at("waist_sq").get<double>();
  f.slope = j.at("slope").get<double>();
  f.coherence_term = j.at("coherence_term").get<double>();
}

void to_json(json& j, const PhysicalityVerdict& v) {
  j = json{{"physical", v.physical}, {"min_eigenvalue", v.min_eigenvalue}, {"eigenvalues", v.eigenvalues}};
}

void from_json(const json& j, PhysicalityVerdict& v) {
  v.physical = j.at("physical").get<bool>();
  v.min_eigenvalue = j.at("min_eigenvalue").get<double>();
  v.eigenvalues = j.at("eigenvalues").get<std::array<double, 4>>();
}

void to_json(json& j, const SeparabilityReport& r) {
  j = json{{"verdict", std::string(to_string(r.verdict))}, {"before_pt", r.before}, {"after_pt", r.after}};
}

void from_json(const json& j, SeparabilityReport& r) {
  r.verdict = separability_from_string(j.at("verdict").get<std::string>());
  r.before = j.at("before_pt").get<PhysicalityVerdict>();
  r.after = j.at("after_pt").get<PhysicalityVerdict>();
}

void to_json(json& j, const VarianceMatrix& v) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) rows.push_back({v.V(r, 0), v.V(r, 1), v.V(r, 2), v.V(r, 3)});
  j = json{{"lambda_bar", v.lambda_bar}, {"V", rows}};
}

void from_json(const json& j, VarianceMatrix& v) {
  v.lambda_bar = j.at("lambda_bar").get<double>();
  const json& rows = j.at("V");
  if (!rows.is_array() || rows.size() != 4) throw ParameterError("V must be a 4x4 array");
  for (int r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) throw ParameterError("V must be a 4x4 array");
    for (int c = 0; c < 4; ++c) v.V(r, c) = rows[r][c].get<double>();
  }
}

}  // namespace beamlab

namespace beamlab::cli {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json cell_to_json(const Cell& c) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(double v) const { return std::isfinite(v) ? json(v) : json(format_double(v)); }
    json operator()(const ExtReal& v) const { return json(v); }
    json operator()(bool v) const { return v; }
    json operator()(long long v) const { return v; }
    json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

Cell cell_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return ExtReal::infinite();
    return s;
  }
  throw ParameterError("table cell must be a scalar");
}

void flatten(const json& j, const std::string& prefix, Table& t, std::vector<Cell>& row) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, t, row);
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "." + std::to_string(k), t, row);
  } else {
    t.columns.push_back(prefix);
    row.push_back(cell_from_json(j));
  }
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const ExtReal& v) const { return v.is_infinite() ? "inf" : format_double(v.value()); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, c);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << csv_escape(t.columns[k]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_cell(row[k]);
    out << '\n';
  }
}

json table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  return json{{"columns", t.columns}, {"rows", rows}};
}

Table table_from_json(const json& j) {
  Table t;
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : r) row.push_back(cell_from_json(c));
    t.add_row(std::move(row));
  }
  return t;
}

Table flatten_report(const json& report) {
  Table t;
  std::vector<Cell> row;
  flatten(report, "", t, row);
  t.add_row(std::move(row));
  return t;
}

}  // namespace beamlab::cli
