#pragma once

// Closed-form paraxial Gaussian beams: 1D coherent, 1D Gaussian Schell model,
// and 2D elliptic (product) coherent beams.
//
// Conventions shared by the whole library:
//   - every length uses one unit; lambda_bar is wavelength / 2pi in that unit
//   - paraxial equation  i d/dz psi = -(lambda_bar/2) d^2/dx^2 psi
//   - curvature radius R(z) = -(z + z_R^2 / z), negative for z > 0, infinite at
//     the waist; phase factor exp(-i x^2 / (2 lambda_bar R))

#include <complex>

#include "beamlab/ext_real.hpp"

namespace beamlab {

using cplx = std::complex<double>;

struct BeamParams1D {
  double intensity = 1.0;
  double width = 1.0;
  double lambda_bar = 1.0;

  void validate() const;
};

struct GsmParams {
  double intensity = 1.0;
  double width = 1.0;
  ExtReal delta = ExtReal::infinite();
  double lambda_bar = 1.0;

  void validate() const;
};

struct BeamParams2D {
  double intensity_x = 1.0;
  double intensity_y = 1.0;
  double width_x = 1.0;
  double width_y = 1.0;
  double lambda_bar = 1.0;

  void validate() const;
  BeamParams1D x_axis() const { return {intensity_x, width_x, lambda_bar}; }
  BeamParams1D y_axis() const { return {intensity_y, width_y, lambda_bar}; }
};

struct PropagatedBeam1D {
  double width = 0.0;
  ExtReal curvature_radius = ExtReal::infinite();
  double guoy_phase = 0.0;
  double rayleigh_range = 0.0;
};

/// GSM counterpart of PropagatedBeam1D: both width and coherence length
/// scale with (1 + (z/z_R)^2)^(1/2), using the coherence-dependent z_R.
struct GsmGeometry {
  double width = 0.0;
  ExtReal delta = ExtReal::infinite();
  ExtReal curvature_radius = ExtReal::infinite();
  double rayleigh_range = 0.0;
};

/// psi(x; z) including the Guoy phase factor.
cplx coherent_amplitude_1d(const BeamParams1D& p, double x, double z);

PropagatedBeam1D beam_geometry_1d(const BeamParams1D& p, double z);

/// 1 / R(z) with the waist-plane value 0.
double inverse_curvature(double z, double rayleigh_range);

double gsm_rayleigh_range(const GsmParams& p);

GsmGeometry gsm_geometry(const GsmParams& p, double z);

/// Two-point function Gamma(x, x'; z) of a GSM beam.
cplx gsm_gamma(const GsmParams& p, double x, double x_prime, double z);

/// Product amplitude psi_1(x; z) psi_2(y; z) with per-axis Rayleigh ranges.
cplx elliptic_amplitude_2d(const BeamParams2D& p, double x, double y, double z);

}  // namespace beamlab
