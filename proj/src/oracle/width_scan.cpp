#include "beamlab/oracle/width_scan.hpp"

#include <algorithm>
#include <cmath>

#include "beamlab/oracle/propagate.hpp"

namespace beamlab::oracle {

NumericWidthScan numeric_width_scan(const BeamParams2D& p, RotationAngle theta,
                                    std::span<const double> z_samples, int n_points) {
  p.validate();
  double z_far = 0.0;
  for (double z : z_samples) z_far = std::max(z_far, std::abs(z));
  const double w_max = std::max(beam_geometry_1d(p.x_axis(), z_far).width,
                                beam_geometry_1d(p.y_axis(), z_far).width);
  const Grid1D grid = Grid1D::propagation(n_points, 8.0 * w_max);
  const Field2D waist = sample_field_2d(
      [&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.0); }, grid);

  NumericWidthScan out;
  out.z.assign(z_samples.begin(), z_samples.end());
  for (double z : z_samples) {
    const Field2D f = z == 0.0 ? waist : propagate_field_2d(waist, z, p.lambda_bar);
    out.widths.push_back(projected_width_numeric(f, theta));
  }
  out.fit = fit_width_scan(out.z, out.widths, p.lambda_bar);
  out.report = report_from_fit(out.fit);
  return out;
}

}  // namespace beamlab::oracle
