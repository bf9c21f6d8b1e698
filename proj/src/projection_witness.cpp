#include "beamlab/projection_witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "beamlab/errors.hpp"

namespace beamlab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

RotationAngle::RotationAngle(double radians) {
  require(std::isfinite(radians), "RotationAngle: angle must be finite");
  double t = std::fmod(radians, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  theta_ = t;
  if (t == 0.0) {
    cos_ = 1.0;
    sin_ = 0.0;
  } else if (t == kPi / 2) {
    cos_ = 0.0;
    sin_ = 1.0;
  } else {
    cos_ = std::cos(t);
    sin_ = std::sin(t);
  }
}

double RotationAngle::abs_sin_2theta() const { return std::abs(2.0 * sin_ * cos_); }

cplx reduced_gamma(const BeamParams2D& p, RotationAngle theta, double x1, double x2, double z) {
  p.validate();
  const double lb = p.lambda_bar;
  // psi_k(x; z) = n_k (1 + i zeta_k)^(-1/2) exp(-a_k x^2), a_k = 1 / (w_k^2 + 2 i lb z)
  const cplx a1 = 1.0 / cplx(p.width_x * p.width_x, 2.0 * lb * z);
  const cplx a2 = 1.0 / cplx(p.width_y * p.width_y, 2.0 * lb * z);
  const double c = theta.cos();
  const double s = theta.sin();
  // Rotated exponent: -A x'^2 - B y'^2 + 2 C x' y'
  const cplx big_a = a1 * c * c + a2 * s * s;
  const cplx big_b = a1 * s * s + a2 * c * c;
  const cplx big_c = (a1 - a2) * c * s;

  auto norm_sq = [&](double intensity, double width) {
    const double zeta = 2.0 * lb * z / (width * width);
    return std::sqrt(2.0 * intensity / (kPi * width * width)) / std::sqrt(1.0 + zeta * zeta);
  };
  const double pref = norm_sq(p.intensity_x, p.width_x) * norm_sq(p.intensity_y, p.width_y);

  const double two_re_b = 2.0 * big_b.real();
  const cplx lin = big_c * x1 + std::conj(big_c) * x2;
  const cplx expo = -big_a * x1 * x1 - std::conj(big_a) * x2 * x2 + lin * lin / two_re_b;
  return pref * std::sqrt(kPi / two_re_b) * std::exp(expo);
}

double projected_width(const BeamParams2D& p, RotationAngle theta, double z) {
  p.validate();
  const double w1 = beam_geometry_1d(p.x_axis(), z).width;
  const double w2 = beam_geometry_1d(p.y_axis(), z).width;
  const double c = theta.cos();
  const double s = theta.sin();
  return std::sqrt(c * c * w1 * w1 + s * s * w2 * w2);
}

WitnessReport effective_gsm_parameters(const BeamParams2D& p, RotationAngle theta) {
  p.validate();
  const double w1 = p.width_x;
  const double w2 = p.width_y;
  const double c = theta.cos();
  const double s = theta.sin();

  WitnessReport r;
  r.projected_waist = std::sqrt(c * c * w1 * w1 + s * s * w2 * w2);
  if (w1 == w2) return r;

  const double anisotropy = std::abs(w1 * w1 - w2 * w2) / (2.0 * w1 * w2);
  const double ratio = anisotropy * theta.abs_sin_2theta();

  // w'(0)^2 (cos^2/w1^2 + sin^2/w2^2) = 1 + ratio^2
  const double lhs = r.projected_waist * r.projected_waist * (c * c / (w1 * w1) + s * s / (w2 * w2));
  if (std::abs(lhs - (1.0 + ratio * ratio)) > 1e-10 * lhs) {
    throw NumericalGuardError("effective_gsm_parameters: divergence identity violated");
  }

  if (ratio > 0.0) {
    r.effective_coherence_ratio = ratio;
    r.effective_delta = ExtReal::finite(r.projected_waist / ratio);
    r.entangled = true;
  }
  return r;
}

GsmParams reduced_gsm_params(const BeamParams2D& p, RotationAngle theta) {
  const WitnessReport r = effective_gsm_parameters(p, theta);
  return GsmParams{p.intensity_x * p.intensity_y, r.projected_waist, r.effective_delta, p.lambda_bar};
}

WidthScanFit fit_width_scan(std::span<const double> z_samples, std::span<const double> widths,
                            double lambda_bar) {
  require(z_samples.size() == widths.size(), "fit_width_scan: z and width sample counts differ");
  require(z_samples.size() >= 3, "fit_width_scan: need at least 3 z samples");
  require(std::isfinite(lambda_bar) && lambda_bar > 0.0, "fit_width_scan: lambda_bar must be > 0");
  require(std::find(z_samples.begin(), z_samples.end(), 0.0) != z_samples.end(),
          "fit_width_scan: z samples must include the waist plane z = 0");

  const auto n = static_cast<double>(z_samples.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < z_samples.size(); ++i) {
    require(std::isfinite(widths[i]) && widths[i] > 0.0, "fit_width_scan: widths must be > 0");
    sx += z_samples[i] * z_samples[i];
    sy += widths[i] * widths[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < z_samples.size(); ++i) {
    const double dx = z_samples[i] * z_samples[i] - mx;
    sxx += dx * dx;
    sxy += dx * (widths[i] * widths[i] - my);
  }
  require(sxx > 0.0, "fit_width_scan: z samples are degenerate (all z^2 equal)");

  WidthScanFit fit;
  fit.slope = sxy / sxx;
  fit.waist_sq = my - fit.slope * mx;
  require(fit.waist_sq > 0.0, "fit_width_scan: fitted waist is not positive");
  fit.coherence_term = fit.waist_sq * fit.slope / (4.0 * lambda_bar * lambda_bar) - 1.0;
  return fit;
}

WitnessReport report_from_fit(const WidthScanFit& fit) {
  WitnessReport r;
  r.projected_waist = std::sqrt(fit.waist_sq);
  if (fit.coherence_term > kWitnessThreshold) {
    r.effective_coherence_ratio = std::sqrt(fit.coherence_term);
    r.effective_delta = ExtReal::finite(r.projected_waist / r.effective_coherence_ratio);
    r.entangled = true;
  }
  return r;
}

WitnessReport witness_via_width_scan(const BeamParams2D& p, RotationAngle theta,
                                     std::span<const double> z_samples) {
  p.validate();
  std::vector<double> widths;
  widths.reserve(z_samples.size());
  for (double z : z_samples) widths.push_back(projected_width(p, theta, z));
  const WidthScanFit fit = fit_width_scan(z_samples, widths, p.lambda_bar);
  if (p.width_x == p.width_y) return effective_gsm_parameters(p, theta);
  return report_from_fit(fit);
}

}  // namespace beamlab
