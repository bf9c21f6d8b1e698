#pragma once

#include <span>
#include <vector>

#include "beamlab/core_beams.hpp"
#include "beamlab/projection_witness.hpp"

namespace beamlab::oracle {

struct NumericWidthScan {
  std::vector<double> z;
  std::vector<double> widths;  // sqrt(4 <x'^2>) of the propagated field
  WidthScanFit fit;
  WitnessReport report;
};

/// Samples the waist-plane elliptic field on an n x n grid (half width 8x the
/// largest beam width reached in the scan), propagates it to every z with the
/// 2D transfer function, measures the projected width by quadrature and fits
/// the GSM divergence law.
NumericWidthScan numeric_width_scan(const BeamParams2D& p, RotationAngle theta,
                                    std::span<const double> z_samples, int n_points);

}  // namespace beamlab::oracle
