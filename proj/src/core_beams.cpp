#include "beamlab/core_beams.hpp"

#include <cmath>
#include <numbers>

#include "beamlab/errors.hpp"

namespace beamlab {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Width growth factor (1 + (z/z_R)^2).
double growth(double z, double rayleigh_range) {
  const double t = z / rayleigh_range;
  return 1.0 + t * t;
}

}  // namespace

void BeamParams1D::validate() const {
  require(positive_finite(intensity), "BeamParams1D: intensity must be > 0");
  require(positive_finite(width), "BeamParams1D: width must be > 0");
  require(positive_finite(lambda_bar), "BeamParams1D: lambda_bar must be > 0");
}

void GsmParams::validate() const {
  require(positive_finite(intensity), "GsmParams: intensity must be > 0");
  require(positive_finite(width), "GsmParams: width must be > 0");
  require(delta.is_infinite() || positive_finite(delta.value()),
          "GsmParams: delta must be > 0 or inf");
  require(positive_finite(lambda_bar), "GsmParams: lambda_bar must be > 0");
}

void BeamParams2D::validate() const {
  require(positive_finite(intensity_x), "BeamParams2D: intensity_x must be > 0");
  require(positive_finite(intensity_y), "BeamParams2D: intensity_y must be > 0");
  require(positive_finite(width_x), "BeamParams2D: width_x must be > 0");
  require(positive_finite(width_y), "BeamParams2D: width_y must be > 0");
  require(positive_finite(lambda_bar), "BeamParams2D: lambda_bar must be > 0");
}

double inverse_curvature(double z, double rayleigh_range) {
  // 1/R = -z / (z^2 + z_R^2); exactly 0 at the waist.
  return -z / (z * z + rayleigh_range * rayleigh_range);
}

PropagatedBeam1D beam_geometry_1d(const BeamParams1D& p, double z) {
  p.validate();
  PropagatedBeam1D out;
  out.rayleigh_range = p.width * p.width / (2.0 * p.lambda_bar);
  out.width = p.width * std::sqrt(growth(z, out.rayleigh_range));
  out.curvature_radius = z == 0.0
      ? ExtReal::infinite()
      : ExtReal::finite(-(z + out.rayleigh_range * out.rayleigh_range / z));
  out.guoy_phase = z == 0.0 ? 0.0 : -0.5 * std::atan(z / out.rayleigh_range);
  return out;
}

cplx coherent_amplitude_1d(const BeamParams1D& p, double x, double z) {
  const PropagatedBeam1D g = beam_geometry_1d(p, z);
  const double amp = std::pow(2.0 * p.intensity / (kPi * g.width * g.width), 0.25);
  const double inv_r = inverse_curvature(z, g.rayleigh_range);
  const double re = -x * x / (g.width * g.width);
  const double im = g.guoy_phase - x * x * inv_r / (2.0 * p.lambda_bar);
  return amp * std::exp(cplx(re, im));
}

double gsm_rayleigh_range(const GsmParams& p) {
  p.validate();
  const double coherent = p.width * p.width / (2.0 * p.lambda_bar);
  return coherent / std::sqrt(1.0 + p.width * p.width * p.delta.inverse_square());
}

GsmGeometry gsm_geometry(const GsmParams& p, double z) {
  GsmGeometry g;
  g.rayleigh_range = gsm_rayleigh_range(p);
  const double scale = std::sqrt(growth(z, g.rayleigh_range));
  g.width = p.width * scale;
  g.delta = p.delta.is_infinite() ? ExtReal::infinite() : ExtReal::finite(p.delta.value() * scale);
  g.curvature_radius = z == 0.0
      ? ExtReal::infinite()
      : ExtReal::finite(-(z + g.rayleigh_range * g.rayleigh_range / z));
  return g;
}

cplx gsm_gamma(const GsmParams& p, double x, double x_prime, double z) {
  const GsmGeometry g = gsm_geometry(p, z);
  const double w2 = g.width * g.width;
  const double amp = std::sqrt(2.0 * p.intensity / (kPi * w2));
  const double inv_r = inverse_curvature(z, g.rayleigh_range);
  const double diff = x - x_prime;
  const double re = -(x * x + x_prime * x_prime) / w2 - 0.5 * diff * diff * g.delta.inverse_square();
  const double im = -(x * x - x_prime * x_prime) * inv_r / (2.0 * p.lambda_bar);
  return amp * std::exp(cplx(re, im));
}

cplx elliptic_amplitude_2d(const BeamParams2D& p, double x, double y, double z) {
  p.validate();
  return coherent_amplitude_1d(p.x_axis(), x, z) * coherent_amplitude_1d(p.y_axis(), y, z);
}

}  // namespace beamlab
