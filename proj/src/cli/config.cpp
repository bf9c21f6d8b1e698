#include "beamlab/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "beamlab/errors.hpp"

namespace beamlab::cli {

namespace {

using json = nlohmann::json;

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::coherent1d, "coherent1d"}, {Family::gsm, "gsm"},   {Family::elliptic2d, "elliptic2d"},
    {Family::tgsm, "tgsm"},             {Family::curv, "curv"}, {Family::agsm, "agsm"},
};

ExtReal num(double v) { return ExtReal::finite(v); }

[[noreturn]] void config_error(std::string_view field, const std::string& what) {
  throw ParameterError("config field '" + std::string(field) + "': " + what);
}

Range range_from_json(const json& j, std::string_view field) {
  if (j.is_string()) return parse_range(j.get<std::string>(), field);
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number_integer()) {
    config_error(field, "expected [start, stop, steps]");
  }
  Range r{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) config_error(field, "range ends must be finite");
  if (r.steps < 1) config_error(field, "steps must be >= 1");
  return r;
}

json param_to_json(const ExtReal& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family family_from_string(std::string_view s) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (name == s) return fam;
  }
  config_error("family", "unknown family '" + std::string(s) +
                             "' (expected coherent1d, gsm, elliptic2d, tgsm, curv or agsm)");
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat format_from_string(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  config_error("output_format", "expected csv or json, got '" + std::string(s) + "'");
}

std::vector<double> Range::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  for (int k = 0; k < steps; ++k) {
    // Endpoints are exact; interior points use start + k * step.
    out.push_back(k == steps - 1 ? stop : start + k * (stop - start) / (steps - 1));
  }
  return out;
}

Range parse_range(std::string_view text, std::string_view field) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) config_error(field, "expected start,stop,steps");
  Range r;
  try {
    std::size_t used = 0;
    r.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("trailing");
    r.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    r.steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    config_error(field, "cannot parse '" + std::string(text) + "' as start,stop,steps");
  }
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) config_error(field, "range ends must be finite");
  if (r.steps < 1) config_error(field, "steps must be >= 1");
  return r;
}

const std::map<std::string, ExtReal>& ScanConfig::defaults(Family family) {
  static const std::map<std::string, ExtReal> coherent{{"I", num(1)}, {"w", num(1)}, {"lambda_bar", num(1)}};
  static const std::map<std::string, ExtReal> gsm{
      {"I", num(1)}, {"w", num(1)}, {"delta", ExtReal::infinite()}, {"lambda_bar", num(1)}};
  static const std::map<std::string, ExtReal> elliptic{{"I1", num(1)}, {"I2", num(1)}, {"w1", num(2)},
                                                       {"w2", num(1)}, {"theta", num(0)},
                                                       {"lambda_bar", num(1)}};
  static const std::map<std::string, ExtReal> sub{{"I", num(1)}, {"w", num(1)}, {"delta", num(1)},
                                                  {"R", ExtReal::infinite()}, {"u", num(0)},
                                                  {"lambda_bar", num(1)}};
  static const std::map<std::string, ExtReal> agsm{
      {"I", num(1)},   {"lambda_bar", num(1)}, {"L11", num(4)}, {"L12", num(0)},
      {"L22", num(4)}, {"M11", num(0)},        {"M12", num(0)}, {"M22", num(0)},
      {"K11", num(0)}, {"K12", num(0)},        {"K21", num(0)}, {"K22", num(0)}};
  switch (family) {
    case Family::coherent1d: return coherent;
    case Family::gsm: return gsm;
    case Family::elliptic2d: return elliptic;
    case Family::tgsm:
    case Family::curv: return sub;
    case Family::agsm: return agsm;
  }
  return coherent;
}

ExtReal ScanConfig::param(const std::string& name) const {
  if (auto it = parameters.find(name); it != parameters.end()) return it->second;
  const auto& d = defaults(family);
  auto it = d.find(name);
  if (it == d.end()) config_error("parameters." + name, "not a parameter of family " + std::string(to_string(family)));
  return it->second;
}

double ScanConfig::finite_param(const std::string& name) const {
  const ExtReal v = param(name);
  if (v.is_infinite()) config_error("parameters." + name, "must be finite");
  return v.value();
}

void ScanConfig::validate() const {
  const auto& d = defaults(family);
  for (const auto& [name, value] : parameters) {
    if (!d.contains(name)) {
      config_error("parameters." + name, "not a parameter of family " + std::string(to_string(family)));
    }
  }
  if (scan_axis && !d.contains(*scan_axis)) {
    config_error("scan_axis", "'" + *scan_axis + "' is not a parameter of family " +
                                  std::string(to_string(family)));
  }
  if (scan_axis && !scan_range) config_error("scan_range", "required when scan_axis is set");
  if (scan_range && !scan_axis) config_error("scan_axis", "required when scan_range is set");
  if (scan_range && scan_range->steps < 1) config_error("scan_range", "steps must be >= 1");
  if (z_range && z_range->steps < 1) config_error("z_range", "steps must be >= 1");
  if (draws < 1) config_error("draws", "must be >= 1");
}

std::vector<std::optional<double>> ScanConfig::scan_points() const {
  std::vector<std::optional<double>> out;
  if (!scan_axis || !scan_range) {
    out.emplace_back();
    return out;
  }
  for (double v : scan_range->values()) out.emplace_back(v);
  return out;
}

ScanConfig ScanConfig::at(std::optional<double> value) const {
  ScanConfig c = *this;
  if (value && scan_axis) c.parameters.insert_or_assign(*scan_axis, ExtReal::finite(*value));
  return c;
}

ExtReal parse_param_value(const json& j, std::string_view name) {
  const std::string field = "parameters." + std::string(name);
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) config_error(field, "numbers must be finite; use \"inf\"");
    return ExtReal::finite(v);
  }
  if (j.is_string()) return parse_param_text(j.get<std::string>(), name);
  config_error(field, "expected a number or \"inf\"");
}

ExtReal parse_param_text(std::string_view text, std::string_view name) {
  const std::string field = "parameters." + std::string(name);
  if (text == "inf") return ExtReal::infinite();
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
    config_error(field, "cannot parse '" + std::string(text) + "' as a number or \"inf\"");
  }
  return ExtReal::finite(v);
}

ScanConfig config_from_json(const json& j) {
  if (!j.is_object()) config_error("<root>", "config must be a JSON object");
  static const char* kKnown[] = {"family", "parameters", "scan_axis", "scan_range", "z_range",
                                 "output_path", "output_format", "verify", "numeric", "seed", "draws"};
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) config_error(key, "unknown config key");
  }
  ScanConfig c;
  if (!j.contains("family") || !j["family"].is_string()) config_error("family", "required string");
  c.family = family_from_string(j["family"].get<std::string>());
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) config_error("parameters", "expected an object");
    for (const auto& [name, value] : j["parameters"].items()) c.parameters.insert_or_assign(name, parse_param_value(value, name));
  }
  auto opt_string = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) config_error(key, "expected a string");
    return j[key].get<std::string>();
  };
  auto opt_bool = [&](const char* key) {
    if (!j.contains(key)) return false;
    if (!j[key].is_boolean()) config_error(key, "expected true or false");
    return j[key].get<bool>();
  };
  c.scan_axis = opt_string("scan_axis");
  if (j.contains("scan_range") && !j["scan_range"].is_null()) c.scan_range = range_from_json(j["scan_range"], "scan_range");
  if (j.contains("z_range") && !j["z_range"].is_null()) c.z_range = range_from_json(j["z_range"], "z_range");
  c.output_path = opt_string("output_path");
  if (auto f = opt_string("output_format")) c.output_format = format_from_string(*f);
  c.verify = opt_bool("verify");
  c.numeric = opt_bool("numeric");
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_unsigned()) config_error("seed", "expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("draws")) {
    if (!j["draws"].is_number_integer()) config_error("draws", "expected an integer");
    c.draws = j["draws"].get<int>();
  }
  c.validate();
  return c;
}

json config_to_json(const ScanConfig& c) {
  json j;
  j["family"] = to_string(c.family);
  json params = json::object();
  for (const auto& [name, value] : c.parameters) params[name] = param_to_json(value);
  j["parameters"] = params;
  j["scan_axis"] = c.scan_axis ? json(*c.scan_axis) : json(nullptr);
  auto range = [](const std::optional<Range>& r) {
    return r ? json::array({r->start, r->stop, r->steps}) : json(nullptr);
  };
  j["scan_range"] = range(c.scan_range);
  j["z_range"] = range(c.z_range);
  j["output_path"] = c.output_path ? json(*c.output_path) : json(nullptr);
  j["output_format"] = c.output_format ? json(to_string(*c.output_format)) : json(nullptr);
  j["verify"] = c.verify;
  j["numeric"] = c.numeric;
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  j["draws"] = c.draws;
  return j;
}

ScanConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("config", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    config_error("config", std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

BeamParams1D coherent1d_params(const ScanConfig& c) {
  BeamParams1D p{c.finite_param("I"), c.finite_param("w"), c.finite_param("lambda_bar")};
  p.validate();
  return p;
}

GsmParams gsm_params(const ScanConfig& c) {
  GsmParams p{c.finite_param("I"), c.finite_param("w"), c.param("delta"), c.finite_param("lambda_bar")};
  p.validate();
  return p;
}

BeamParams2D elliptic2d_params(const ScanConfig& c) {
  BeamParams2D p{c.finite_param("I1"), c.finite_param("I2"), c.finite_param("w1"), c.finite_param("w2"),
                 c.finite_param("lambda_bar")};
  p.validate();
  return p;
}

namespace {

template <class P>
P subfamily(const ScanConfig& c) {
  P p;
  p.intensity = c.finite_param("I");
  p.width = c.finite_param("w");
  p.delta = c.param("delta");
  p.radius = c.param("R");
  p.twist = c.finite_param("u");
  p.lambda_bar = c.finite_param("lambda_bar");
  p.validate();
  return p;
}

}  // namespace

TgsmParams tgsm_params(const ScanConfig& c) { return subfamily<TgsmParams>(c); }
CurvParams curv_params(const ScanConfig& c) { return subfamily<CurvParams>(c); }

AgsmParams agsm_params(const ScanConfig& c) {
  AgsmParams p;
  p.intensity = c.finite_param("I");
  p.lambda_bar = c.finite_param("lambda_bar");
  p.L << c.finite_param("L11"), c.finite_param("L12"), c.finite_param("L12"), c.finite_param("L22");
  p.M << c.finite_param("M11"), c.finite_param("M12"), c.finite_param("M12"), c.finite_param("M22");
  p.K << c.finite_param("K11"), c.finite_param("K12"), c.finite_param("K21"), c.finite_param("K22");
  p.validate();
  return p;
}

}  // namespace beamlab::cli
