#include "beamlab/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "beamlab/errors.hpp"
#include "beamlab/oracle/kernel_grid.hpp"
#include "beamlab/oracle/propagate.hpp"
#include "beamlab/oracle/width_scan.hpp"
#include "beamlab/oracle/wigner.hpp"
#include "beamlab/random_draws.hpp"

namespace beamlab::cli {

namespace {

using json = nlohmann::json;
using oracle::Grid1D;

constexpr double kWignerRelativeTolerance = 1e-3;

[[noreturn]] void config_error(std::string_view field, const std::string& what) {
  throw ParameterError("config field '" + std::string(field) + "': " + what);
}

void require_family(const ScanConfig& c, std::string_view command, std::initializer_list<Family> allowed) {
  if (std::find(allowed.begin(), allowed.end(), c.family) != allowed.end()) return;
  std::string names;
  for (Family f : allowed) names += (names.empty() ? "" : ", ") + std::string(to_string(f));
  config_error("family", std::string(command) + " accepts " + names + ", not " + std::string(to_string(c.family)));
}

/// Column list with the scan axis in front when one is configured.
Table make_table(const ScanConfig& c, std::vector<std::string> columns) {
  Table t;
  if (c.scan_axis) t.columns.push_back(*c.scan_axis);
  for (auto& col : columns) t.columns.push_back(std::move(col));
  return t;
}

std::vector<Cell> row_start(const ScanConfig& c, std::optional<double> point) {
  std::vector<Cell> row;
  if (c.scan_axis) row.emplace_back(*point);
  return row;
}

json table_report(std::string_view command, const ScanConfig& c, const Table& t) {
  return json{{"command", command}, {"config", config_to_json(c)}, {"table", table_to_json(t)}};
}

double z_far(const std::vector<double>& zs) {
  double out = 0.0;
  for (double z : zs) out = std::max(out, std::abs(z));
  return out;
}

// |d_a - d_b| when both finite, |w/d_a - w/d_b| when either is infinite.
double delta_error(const ExtReal& a, const ExtReal& b, double width) {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
  return width * std::abs(a.reciprocal() - b.reciprocal());
}

double max_relative_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

// --- numeric twins used by propagate --verify and compare-oracle ----------

struct CoherentOracle {
  std::vector<double> widths;
  std::vector<double> amplitude_errors;
};

CoherentOracle coherent_oracle(const BeamParams1D& p, const std::vector<double>& zs) {
  const double w_max = beam_geometry_1d(p, z_far(zs)).width;
  const Grid1D grid = Grid1D::propagation(oracle::default_grid_points(), 8.0 * w_max);
  const auto f0 = oracle::sample_field_1d([&](double x) { return coherent_amplitude_1d(p, x, 0.0); }, grid);
  CoherentOracle out;
  for (double z : zs) {
    const auto f = z == 0.0 ? f0 : oracle::propagate_field_1d(f0, grid, z, p.lambda_bar);
    out.widths.push_back(2.0 * std::sqrt(oracle::second_moment_1d(f, grid)));
    double err = 0.0, peak = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
      const cplx exact = coherent_amplitude_1d(p, grid.x(j), z);
      err = std::max(err, std::abs(f[j] - exact));
      peak = std::max(peak, std::abs(exact));
    }
    out.amplitude_errors.push_back(err / peak);
  }
  return out;
}

struct GsmOracle {
  std::vector<oracle::GsmFit> fits;
  std::vector<double> kernel_errors;
};

GsmOracle gsm_oracle(const GsmParams& p, const std::vector<double>& zs) {
  const double w_max = gsm_geometry(p, z_far(zs)).width;
  const Grid1D grid = Grid1D::propagation(oracle::default_grid_points(), 8.0 * w_max);
  const auto k0 = oracle::sample_kernel_1d([&](double x, double xp) { return gsm_gamma(p, x, xp, 0.0); }, grid);
  GsmOracle out;
  for (double z : zs) {
    const auto k = z == 0.0 ? k0 : oracle::propagate_kernel_1d(k0, z, p.lambda_bar);
    out.fits.push_back(oracle::fit_gsm_kernel(k));
    const auto exact = oracle::sample_kernel_1d([&](double x, double xp) { return gsm_gamma(p, x, xp, z); }, grid);
    out.kernel_errors.push_back(max_relative_diff(k.values, exact.values));
  }
  return out;
}

std::vector<double> elliptic_oracle_widths(const BeamParams2D& p, RotationAngle theta, const std::vector<double>& zs) {
  const double w_max =
      std::max(beam_geometry_1d(p.x_axis(), z_far(zs)).width, beam_geometry_1d(p.y_axis(), z_far(zs)).width);
  const Grid1D grid = Grid1D::propagation(oracle::default_grid_points(), 8.0 * w_max);
  const auto f0 = oracle::sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.0); }, grid);
  std::vector<double> out;
  for (double z : zs) {
    const auto f = z == 0.0 ? f0 : oracle::propagate_field_2d(f0, z, p.lambda_bar);
    out.push_back(oracle::projected_width_numeric(f, theta));
  }
  return out;
}

// --- Gaussian-family helpers ----------------------------------------------

VarianceMatrix family_variance(const ScanConfig& c) {
  switch (c.family) {
    case Family::tgsm: return tgsm_variance(tgsm_params(c)).first;
    case Family::curv: return curv_variance(curv_params(c)).first;
    case Family::agsm: return variance_from_lmk(agsm_params(c));
    default: config_error("family", "no variance matrix for " + std::string(to_string(c.family)));
  }
}

AgsmParams family_agsm(const ScanConfig& c) {
  switch (c.family) {
    case Family::tgsm: return beamlab::agsm_params(tgsm_params(c));
    case Family::curv: return beamlab::agsm_params(curv_params(c));
    default: return agsm_params(c);
  }
}

/// Sampling window of +-4 intensity widths, w = 2 / sqrt(lambda_min(L)).
Grid1D psd_axis(const AgsmParams& p) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(p.L, Eigen::EigenvaluesOnly);
  return Grid1D::sampling(kCliPsdPointsPerAxis, 8.0 / std::sqrt(es.eigenvalues()(0)));
}

Kernel2DFn family_kernel(const ScanConfig& c) {
  switch (c.family) {
    case Family::tgsm: {
      const TgsmParams p = tgsm_params(c);
      return [p](const Vec2& a, const Vec2& b) { return tgsm_gamma(p, a, b); };
    }
    case Family::curv: {
      const CurvParams p = curv_params(c);
      return [p](const Vec2& a, const Vec2& b) { return curv_gamma(p, a, b); };
    }
    default: {
      const AgsmParams p = agsm_params(c);
      return agsm_kernel(p);
    }
  }
}

json psd_json(const oracle::PsdResult& r) {
  return json{{"psd", r.psd}, {"min_eigenvalue_ratio", r.min_eigenvalue_ratio}};
}

json agsm_json(const AgsmParams& p) {
  auto m = [](const Mat2& a) { return json::array({json::array({a(0, 0), a(0, 1)}), json::array({a(1, 0), a(1, 1)})}); };
  return json{{"I", p.intensity}, {"lambda_bar", p.lambda_bar}, {"L", m(p.L)}, {"M", m(p.M)}, {"K", m(p.K)}};
}

template <class P>
json subfamily_json(const P& p) {
  return json{{"I", p.intensity}, {"w", p.width},   {"delta", p.delta},
              {"R", p.radius},    {"u", p.twist}, {"lambda_bar", p.lambda_bar}};
}

template <class To, class From>
To retag(const From& p) {
  To out;
  out.intensity = p.intensity;
  out.width = p.width;
  out.delta = p.delta;
  out.radius = p.radius;
  out.twist = p.twist;
  out.lambda_bar = p.lambda_bar;
  return out;
}

struct WignerRow {
  double max_abs_error = 0.0;
  double relative_error = 0.0;
  double imag_ratio = 0.0;
};

WignerRow wigner_row(const AgsmParams& p) {
  const Kernel2DFn gamma = agsm_kernel(p);
  const auto m = oracle::wigner_moments(gamma, oracle::suggest_phase_space_grid(p), p.lambda_bar, p.intensity);
  const Mat4 closed = variance_from_lmk(p).V;
  WignerRow r;
  r.max_abs_error = (m.variance.V - closed).cwiseAbs().maxCoeff();
  r.relative_error = r.max_abs_error / closed.norm();
  r.imag_ratio = m.imag_ratio;
  return r;
}

std::vector<double> witness_z_samples(const ScanConfig& c, const BeamParams2D& p) {
  if (c.z_range) return c.z_range->values();
  const double zr = std::max(p.width_x * p.width_x, p.width_y * p.width_y) / (2.0 * p.lambda_bar);
  return Range{0.0, 2.0 * zr, 5}.values();
}

}  // namespace

CommandOutput cmd_propagate(const ScanConfig& c) {
  require_family(c, "propagate", {Family::coherent1d, Family::gsm, Family::elliptic2d});
  if (!c.z_range) config_error("z_range", "required by propagate");
  const std::vector<double> zs = c.z_range->values();

  std::vector<std::string> cols{"z", "w", "R", "guoy"};
  if (c.family == Family::gsm) cols.push_back("delta");
  if (c.family == Family::elliptic2d) cols.insert(cols.end(), {"w1", "w2", "R1", "R2"});
  if (c.verify) {
    cols.push_back("oracle_width");
    if (c.family == Family::gsm) cols.push_back("oracle_delta");
    cols.push_back("abs_error");
  }
  Table t = make_table(c, cols);

  for (const auto& point : c.scan_points()) {
    const ScanConfig sc = c.at(point);
    std::vector<std::vector<Cell>> rows(zs.size(), row_start(c, point));
    if (c.family == Family::coherent1d) {
      const BeamParams1D p = coherent1d_params(sc);
      std::optional<CoherentOracle> o;
      if (c.verify) o = coherent_oracle(p, zs);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const PropagatedBeam1D g = beam_geometry_1d(p, zs[k]);
        auto& row = rows[k];
        row.insert(row.end(), {zs[k], g.width, g.curvature_radius, g.guoy_phase});
        if (o) row.insert(row.end(), {o->widths[k], std::abs(o->widths[k] - g.width)});
      }
    } else if (c.family == Family::gsm) {
      const GsmParams p = gsm_params(sc);
      std::optional<GsmOracle> o;
      if (c.verify) o = gsm_oracle(p, zs);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const GsmGeometry g = gsm_geometry(p, zs[k]);
        auto& row = rows[k];
        row.insert(row.end(), {zs[k], g.width, g.curvature_radius, std::monostate{}, g.delta});
        if (o) {
          const auto& f = o->fits[k];
          const double err = std::max(std::abs(f.width - g.width), delta_error(f.delta, g.delta, g.width));
          row.insert(row.end(), {f.width, f.delta, err});
        }
      }
    } else {
      const BeamParams2D p = elliptic2d_params(sc);
      const RotationAngle theta(sc.finite_param("theta"));
      std::vector<double> ow;
      if (c.verify) ow = elliptic_oracle_widths(p, theta, zs);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const auto gx = beam_geometry_1d(p.x_axis(), zs[k]);
        const auto gy = beam_geometry_1d(p.y_axis(), zs[k]);
        const double w = projected_width(p, theta, zs[k]);
        auto& row = rows[k];
        row.insert(row.end(), {zs[k], w, std::monostate{}, gx.guoy_phase + gy.guoy_phase, gx.width, gy.width,
                               gx.curvature_radius, gy.curvature_radius});
        if (c.verify) row.insert(row.end(), {ow[k], std::abs(ow[k] - w)});
      }
    }
    for (auto& row : rows) t.add_row(std::move(row));
  }
  return {table_report("propagate", c, t), t, OutputFormat::csv};
}

CommandOutput cmd_witness(const ScanConfig& c) {
  require_family(c, "witness", {Family::elliptic2d});

  if (c.scan_axis) {
    std::vector<std::string> cols{"projected_waist", "effective_coherence_ratio", "effective_delta", "entangled"};
    if (c.numeric) cols.insert(cols.end(), {"numeric_coherence_ratio", "numeric_entangled"});
    Table t = make_table(c, cols);
    for (const auto& point : c.scan_points()) {
      const ScanConfig sc = c.at(point);
      const BeamParams2D p = elliptic2d_params(sc);
      const RotationAngle theta(sc.finite_param("theta"));
      const WitnessReport r = effective_gsm_parameters(p, theta);
      auto row = row_start(c, point);
      row.insert(row.end(), {r.projected_waist, r.effective_coherence_ratio, r.effective_delta, r.entangled});
      if (c.numeric) {
        const auto zs = witness_z_samples(sc, p);
        const auto n = oracle::numeric_width_scan(p, theta, zs, oracle::default_grid_points());
        row.insert(row.end(), {n.report.effective_coherence_ratio, n.report.entangled});
      }
      t.add_row(std::move(row));
    }
    return {table_report("witness", c, t), t, OutputFormat::csv};
  }

  const BeamParams2D p = elliptic2d_params(c);
  const RotationAngle theta(c.finite_param("theta"));
  const std::vector<double> zs = witness_z_samples(c, p);
  std::vector<double> widths;
  for (double z : zs) widths.push_back(projected_width(p, theta, z));
  const WidthScanFit fit = fit_width_scan(zs, widths, p.lambda_bar);

  std::optional<oracle::NumericWidthScan> numeric;
  if (c.numeric) numeric = oracle::numeric_width_scan(p, theta, zs, oracle::default_grid_points());

  std::vector<std::string> cols{"z", "projected_width"};
  if (numeric) cols.insert(cols.end(), {"oracle_width", "abs_error"});
  Table t;
  t.columns = cols;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    std::vector<Cell> row{zs[k], widths[k]};
    if (numeric) row.insert(row.end(), {numeric->widths[k], std::abs(numeric->widths[k] - widths[k])});
    t.add_row(std::move(row));
  }

  json report{{"command", "witness"},
              {"config", config_to_json(c)},
              {"report", effective_gsm_parameters(p, theta)},
              {"width_scan_fit", fit},
              {"width_scan", table_to_json(t)},
              {"numeric", nullptr}};
  if (numeric) report["numeric"] = json{{"report", numeric->report}, {"fit", numeric->fit}};
  return {report, t, OutputFormat::json};
}

CommandOutput cmd_physicality(const ScanConfig& c) {
  require_family(c, "physicality", {Family::tgsm, Family::curv});
  std::vector<std::string> cols{"u", "min_eigenvalue", "physical"};
  if (c.family == Family::tgsm) cols.insert(cols.end(), {"bound", "bound_holds"});
  if (c.numeric) cols.insert(cols.end(), {"kernel_psd", "kernel_min_ratio"});
  if (c.scan_axis == "u") cols.erase(cols.begin());
  Table t = make_table(c, cols);

  for (const auto& point : c.scan_points()) {
    const ScanConfig sc = c.at(point);
    auto row = row_start(c, point);
    if (c.scan_axis != "u") row.emplace_back(sc.finite_param("u"));
    if (c.family == Family::tgsm) {
      const TgsmParams p = tgsm_params(sc);
      const PhysicalityVerdict v = tgsm_physicality(p);
      row.insert(row.end(), {v.min_eigenvalue, v.physical, p.lambda_bar * p.delta.inverse_square(),
                             tgsm_twist_bound_holds(p)});
    } else {
      const PhysicalityVerdict v = curv_physicality(curv_params(sc));
      row.insert(row.end(), {v.min_eigenvalue, v.physical});
    }
    if (c.numeric) {
      const auto k = oracle::sample_kernel_2d(family_kernel(sc), psd_axis(family_agsm(sc)));
      const auto r = oracle::kernel_psd_check(k);
      row.insert(row.end(), {r.psd, r.min_eigenvalue_ratio});
    }
    t.add_row(std::move(row));
  }
  return {table_report("physicality", c, t), t, OutputFormat::csv};
}

CommandOutput cmd_classify(const ScanConfig& c) {
  require_family(c, "classify", {Family::tgsm, Family::curv, Family::agsm});
  if (!c.scan_axis) {
    const VarianceMatrix v = family_variance(c);
    const json report{{"command", "classify"}, {"config", config_to_json(c)}, {"variance", v},
                      {"separability", classify_report(v)}};
    return {report, std::nullopt, OutputFormat::json};
  }
  Table t = make_table(c, {"verdict", "min_eigenvalue_before_pt", "min_eigenvalue_after_pt"});
  for (const auto& point : c.scan_points()) {
    const SeparabilityReport r = classify_report(family_variance(c.at(point)));
    auto row = row_start(c, point);
    row.insert(row.end(), {std::string(to_string(r.verdict)), r.before.min_eigenvalue, r.after.min_eigenvalue});
    t.add_row(std::move(row));
  }
  return {table_report("classify", c, t), t, OutputFormat::csv};
}

CommandOutput cmd_pt(const ScanConfig& c) {
  require_family(c, "pt", {Family::tgsm, Family::curv, Family::agsm});

  // Max entrywise gap between the PT image and the dual family's variance.
  auto dual_gap = [](const ScanConfig& sc, const VarianceMatrix& image) -> Cell {
    if (sc.family == Family::tgsm) return (image.V - curv_variance(retag<CurvParams>(tgsm_params(sc))).first.V).cwiseAbs().maxCoeff();
    if (sc.family == Family::curv) return (image.V - tgsm_variance(retag<TgsmParams>(curv_params(sc))).first.V).cwiseAbs().maxCoeff();
    return std::monostate{};
  };
  auto dual_name = [](Family f) -> json {
    if (f == Family::tgsm) return "curv";
    if (f == Family::curv) return "tgsm";
    return nullptr;
  };
  auto numeric_psd = [](const ScanConfig& sc) {
    const auto k = oracle::sample_kernel_2d(family_kernel(sc), psd_axis(family_agsm(sc)));
    return std::pair{oracle::kernel_psd_check(k), oracle::kernel_psd_check(oracle::partial_transpose_kernel(k))};
  };

  if (!c.scan_axis) {
    const VarianceMatrix v = family_variance(c);
    const VarianceMatrix image = partial_transpose_variance(v);
    const Cell gap = dual_gap(c, image);
    json report{{"command", "pt"},
                {"config", config_to_json(c)},
                {"variance", v},
                {"pt_variance", image},
                {"separability", classify_report(v)},
                {"pt_separability", classify_report(image)},
                {"dual_family", dual_name(c.family)},
                {"dual_max_abs_diff", std::holds_alternative<double>(gap) ? json(std::get<double>(gap)) : json(nullptr)},
                {"numeric", nullptr}};
    if (c.numeric) {
      const auto [k, kpt] = numeric_psd(c);
      report["numeric"] = json{{"points_per_axis", kCliPsdPointsPerAxis}, {"kernel", psd_json(k)},
                               {"pt_kernel", psd_json(kpt)}};
    }
    return {report, std::nullopt, OutputFormat::json};
  }

  std::vector<std::string> cols{"verdict", "pt_physical", "dual_max_abs_diff"};
  if (c.numeric) cols.insert(cols.end(), {"kernel_psd", "pt_kernel_psd", "pt_kernel_min_ratio"});
  Table t = make_table(c, cols);
  for (const auto& point : c.scan_points()) {
    const ScanConfig sc = c.at(point);
    const VarianceMatrix v = family_variance(sc);
    const VarianceMatrix image = partial_transpose_variance(v);
    const SeparabilityReport r = classify_report(v);
    auto row = row_start(c, point);
    row.insert(row.end(), {std::string(to_string(r.verdict)), r.after.physical, dual_gap(sc, image)});
    if (c.numeric) {
      const auto [k, kpt] = numeric_psd(sc);
      row.insert(row.end(), {k.psd, kpt.psd, kpt.min_eigenvalue_ratio});
    }
    t.add_row(std::move(row));
  }
  return {table_report("pt", c, t), t, OutputFormat::csv};
}

CommandOutput cmd_compare_oracle(const ScanConfig& c) {
  c.validate();
  json report{{"command", "compare-oracle"}, {"config", config_to_json(c)}};

  if (c.family == Family::coherent1d || c.family == Family::gsm || c.family == Family::elliptic2d) {
    std::vector<std::string> cols{"z", "closed_width", "oracle_width"};
    if (c.family == Family::gsm) cols.insert(cols.end(), {"closed_delta", "oracle_delta"});
    cols.push_back("abs_error");
    if (c.family != Family::elliptic2d) cols.push_back(c.family == Family::gsm ? "kernel_error" : "amplitude_error");
    Table t = make_table(c, cols);
    for (const auto& point : c.scan_points()) {
      const ScanConfig sc = c.at(point);
      if (c.family == Family::coherent1d) {
        const BeamParams1D p = coherent1d_params(sc);
        const double zr = beam_geometry_1d(p, 0.0).rayleigh_range;
        const auto zs = c.z_range ? c.z_range->values() : std::vector<double>{0.0, zr, 2.0 * zr};
        const auto o = coherent_oracle(p, zs);
        for (std::size_t k = 0; k < zs.size(); ++k) {
          const double w = beam_geometry_1d(p, zs[k]).width;
          auto row = row_start(c, point);
          row.insert(row.end(), {zs[k], w, o.widths[k], std::abs(o.widths[k] - w), o.amplitude_errors[k]});
          t.add_row(std::move(row));
        }
      } else if (c.family == Family::gsm) {
        const GsmParams p = gsm_params(sc);
        const double zr = gsm_rayleigh_range(p);
        const auto zs = c.z_range ? c.z_range->values() : std::vector<double>{0.0, zr, 2.0 * zr};
        const auto o = gsm_oracle(p, zs);
        for (std::size_t k = 0; k < zs.size(); ++k) {
          const GsmGeometry g = gsm_geometry(p, zs[k]);
          const auto& f = o.fits[k];
          const double err = std::max(std::abs(f.width - g.width), delta_error(f.delta, g.delta, g.width));
          auto row = row_start(c, point);
          row.insert(row.end(), {zs[k], g.width, f.width, g.delta, f.delta, err, o.kernel_errors[k]});
          t.add_row(std::move(row));
        }
      } else {
        const BeamParams2D p = elliptic2d_params(sc);
        const RotationAngle theta(sc.finite_param("theta"));
        const auto zs = witness_z_samples(sc, p);
        const auto o = oracle::numeric_width_scan(p, theta, zs, oracle::default_grid_points());
        for (std::size_t k = 0; k < zs.size(); ++k) {
          const double w = projected_width(p, theta, zs[k]);
          auto row = row_start(c, point);
          row.insert(row.end(), {zs[k], w, o.widths[k], std::abs(o.widths[k] - w)});
          t.add_row(std::move(row));
        }
        if (!c.scan_axis) {
          report["closed_report"] = effective_gsm_parameters(p, theta);
          report["numeric_report"] = o.report;
          report["numeric_fit"] = o.fit;
        }
      }
    }
    report["table"] = table_to_json(t);
    return {report, t, OutputFormat::csv};
  }

  // Gaussian family: Wigner moments of the sampled kernel against V(L, M, K).
  Table t;
  t.columns = {"index"};
  if (c.scan_axis) t.columns.push_back(*c.scan_axis);
  t.columns.insert(t.columns.end(), {"max_abs_error", "relative_error", "imag_ratio", "pass"});
  json params = json::array();
  std::vector<std::pair<std::optional<double>, AgsmParams>> cases;
  if (c.seed) {
    Rng rng(*c.seed);
    for (int k = 0; k < c.draws; ++k) {
      if (c.family == Family::tgsm) {
        const TgsmParams p = random_tgsm(rng);
        params.push_back(subfamily_json(p));
        cases.emplace_back(std::nullopt, beamlab::agsm_params(p));
      } else if (c.family == Family::curv) {
        const CurvParams p = random_curv(rng);
        params.push_back(subfamily_json(p));
        cases.emplace_back(std::nullopt, beamlab::agsm_params(p));
      } else {
        const AgsmParams p = random_agsm(rng);
        params.push_back(agsm_json(p));
        cases.emplace_back(std::nullopt, p);
      }
    }
  } else {
    for (const auto& point : c.scan_points()) {
      const AgsmParams p = family_agsm(c.at(point));
      params.push_back(agsm_json(p));
      cases.emplace_back(point, p);
    }
  }
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const WignerRow r = wigner_row(cases[k].second);
    std::vector<Cell> row{static_cast<long long>(k)};
    if (c.scan_axis) row.emplace_back(cases[k].first ? Cell(*cases[k].first) : Cell(std::monostate{}));
    row.insert(row.end(), {r.max_abs_error, r.relative_error, r.imag_ratio, r.relative_error <= kWignerRelativeTolerance});
    t.add_row(std::move(row));
  }
  report["parameters"] = params;
  report["table"] = table_to_json(t);
  return {report, t, OutputFormat::csv};
}

CommandOutput run_command(std::string_view name, const ScanConfig& c) {
  c.validate();
  if (name == "propagate") return cmd_propagate(c);
  if (name == "witness") return cmd_witness(c);
  if (name == "physicality") return cmd_physicality(c);
  if (name == "classify") return cmd_classify(c);
  if (name == "pt") return cmd_pt(c);
  if (name == "compare-oracle") return cmd_compare_oracle(c);
  config_error("command", "unknown subcommand '" + std::string(name) + "'");
}

void emit(const CommandOutput& out, const ScanConfig& c, std::ostream& fallback) {
  std::ofstream file;
  if (c.output_path) {
    file.open(*c.output_path, std::ios::binary | std::ios::trunc);
    if (!file) config_error("output_path", "cannot open '" + *c.output_path + "' for writing");
  }
  std::ostream& os = c.output_path ? file : fallback;
  if (c.output_format.value_or(out.default_format) == OutputFormat::json) {
    os << out.report.dump(2) << '\n';
  } else {
    write_csv(os, out.table ? *out.table : flatten_report(out.report));
  }
  os.flush();
  if (!os) config_error("output_path", "write failed");
}

}  // namespace beamlab::cli
