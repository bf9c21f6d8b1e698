#pragma once

// Projected-width entanglement witness for a coherent elliptic 2D Gaussian.
//
// Rotating the transverse frame by theta and tracing out y' leaves a 1D GSM
// beam in x'. Its coherence length is finite exactly when the 2D amplitude is
// non-separable in (x', y'), and that finite coherence shows up as excess
// divergence of the projected width w'(z).

#include <span>

#include "beamlab/core_beams.hpp"
#include "beamlab/ext_real.hpp"

namespace beamlab {

/// Anti-clockwise frame rotation angle, canonicalized to [0, pi).
class RotationAngle {
 public:
  explicit RotationAngle(double radians);
  double radians() const { return theta_; }
  /// cos(theta), sin(theta) with the axis angles 0 and pi/2 snapped exactly.
  double cos() const { return cos_; }
  double sin() const { return sin_; }
  /// |sin 2 theta|, exactly zero on the axes.
  double abs_sin_2theta() const;

 private:
  double theta_;
  double cos_;
  double sin_;
};

struct WitnessReport {
  double projected_waist = 0.0;            // w'(0)
  double effective_coherence_ratio = 0.0;  // w'(0) / delta
  ExtReal effective_delta = ExtReal::infinite();
  bool entangled = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// Least-squares fit of w'(z)^2 = A + B z^2 and the derived coherence term
/// kappa = w'(0)^2 / delta^2 = A B / (4 lambda_bar^2) - 1.
struct WidthScanFit {
  double waist_sq = 0.0;  // A
  double slope = 0.0;     // B
  double coherence_term = 0.0;  // kappa, raw (may be slightly negative)
};

/// Verdict floor on the fitted coherence term.
inline constexpr double kWitnessThreshold = 1e-6;

/// Gamma''(x', x''; z): y'-trace of the rotated product kernel, evaluated in
/// closed form as a complex Gaussian integral.
cplx reduced_gamma(const BeamParams2D& p, RotationAngle theta, double x1, double x2, double z);

/// w'(z) with w'(z)^2 = cos^2 w_1(z)^2 + sin^2 w_2(z)^2.
double projected_width(const BeamParams2D& p, RotationAngle theta, double z);

WitnessReport effective_gsm_parameters(const BeamParams2D& p, RotationAngle theta);

/// The GSM beam the reduced kernel equals: width w'(0), coherence length from
/// the witness ratio, intensity I_x I_y.
GsmParams reduced_gsm_params(const BeamParams2D& p, RotationAngle theta);

WidthScanFit fit_width_scan(std::span<const double> z_samples, std::span<const double> widths,
                            double lambda_bar);

WitnessReport report_from_fit(const WidthScanFit& fit);

/// Fits the closed-form projected widths at the given z samples.
WitnessReport witness_via_width_scan(const BeamParams2D& p, RotationAngle theta,
                                     std::span<const double> z_samples);

}  // namespace beamlab
