#include <doctest.h>

#include <vector>

#include "beamlab/errors.hpp"
#include "beamlab/oracle/kernel_grid.hpp"
#include "beamlab/oracle/propagate.hpp"
#include "beamlab/oracle/width_scan.hpp"
#include "beamlab/projection_witness.hpp"
#include "helpers.hpp"

using namespace beamlab;
using testing::kPi;
using testing::rel;

namespace {

const BeamParams2D kAniso{1.0, 1.0, 2.0, 1.0, 1.0};

double report_gap(const WitnessReport& a, const WitnessReport& b) {
  double gap = std::max(std::abs(a.projected_waist - b.projected_waist),
                        std::abs(a.effective_coherence_ratio - b.effective_coherence_ratio));
  if (a.effective_delta.is_finite() != b.effective_delta.is_finite()) return 1.0;
  if (a.effective_delta.is_finite()) gap = std::max(gap, rel(a.effective_delta.value(), b.effective_delta.value()));
  return a.entangled == b.entangled ? gap : 1.0;
}

}  // namespace

TEST_CASE("rotation angle canonicalization") {
  CHECK(RotationAngle(0.0).radians() == 0.0);
  CHECK(RotationAngle(kPi).radians() == 0.0);
  CHECK(std::abs(RotationAngle(-kPi / 4).radians() - 3 * kPi / 4) < 1e-15);
  CHECK(std::abs(RotationAngle(5 * kPi / 4).radians() - kPi / 4) < 1e-14);
  CHECK(RotationAngle(kPi / 2).cos() == 0.0);
  CHECK(RotationAngle(kPi / 2).sin() == 1.0);
  CHECK(RotationAngle(kPi / 2).abs_sin_2theta() == 0.0);
  CHECK_THROWS_AS(RotationAngle(std::nan("")), ParameterError);
}

TEST_CASE("reduced kernel at theta = 0 is the x-factor kernel weighted by the y-intensity") {
  const BeamParams2D p{1.3, 0.6, 2.0, 1.0, 0.8};
  for (double z : {0.0, 0.9}) {
    for (double x1 : {-0.4, 0.5}) {
      for (double x2 : {0.0, 1.1}) {
        const cplx want = std::sqrt(p.intensity_y) * coherent_amplitude_1d(p.x_axis(), x1, z) *
                          std::conj(coherent_amplitude_1d(p.x_axis(), x2, z));
        CHECK(rel(reduced_gamma(p, RotationAngle(0.0), x1, x2, z), want) < 1e-13);
      }
    }
  }
}

TEST_CASE("isotropic beams reduce to a pure product for every angle") {
  const BeamParams2D p{1.0, 1.0, 1.4, 1.4, 1.0};
  for (double t : {0.3, kPi / 4, 1.2, 2.9}) {
    for (double z : {0.0, 0.7}) {
      const cplx want = coherent_amplitude_1d(p.x_axis(), 0.3, z) * std::conj(coherent_amplitude_1d(p.x_axis(), -0.6, z));
      CHECK(rel(reduced_gamma(p, RotationAngle(t), 0.3, -0.6, z), want) < 1e-13);
    }
  }
}

TEST_CASE("reduced kernel matches y-quadrature of the propagated rotated field") {
  // Frozen from the numeric oracle: rotated-frame sampling of the waist field,
  // 2D transfer-function propagation, trapezoid trace over y'.
  const double frozen = 0.43365391484194521;
  const RotationAngle th(kPi / 4);
  const cplx closed = reduced_gamma(kAniso, th, 0.2, -0.2, 0.5);
  CHECK(rel(closed, cplx(frozen, 0.0)) < 1e-6);

  const auto grid = oracle::Grid1D::propagation(512, 25.6);
  const double c = th.cos(), s = th.sin();
  const auto f0 = oracle::sample_field_2d(
      [&](double xr, double yr) { return elliptic_amplitude_2d(kAniso, xr * c - yr * s, xr * s + yr * c, 0.0); }, grid);
  const auto k = oracle::reduce_kernel(oracle::propagate_field_2d(f0, 0.5, 1.0));
  REQUIRE(std::abs(grid.x(258) - 0.2) < 1e-15);
  REQUIRE(std::abs(grid.x(254) + 0.2) < 1e-15);
  CHECK(rel(k.values(258, 254), closed) < 1e-6);
}

TEST_CASE("projected width on the axes and at 45 degrees") {
  for (double z : {0.0, 1.5}) {
    CHECK(projected_width(kAniso, RotationAngle(0.0), z) == beam_geometry_1d(kAniso.x_axis(), z).width);
    CHECK(projected_width(kAniso, RotationAngle(kPi / 2), z) == beam_geometry_1d(kAniso.y_axis(), z).width);
  }
  const double w = projected_width(kAniso, RotationAngle(kPi / 4), 0.0);
  CHECK(rel(w * w, 2.5) < 1e-15);

  const auto grid = oracle::Grid1D::propagation(512, 16.0);
  const auto f = oracle::sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(kAniso, x, y, 0.0); }, grid);
  CHECK(rel(oracle::projected_width_numeric(f, RotationAngle(kPi / 4)), w) < 1e-9);
}

TEST_CASE("projected width grows linearly far from the waist") {
  const BeamParams2D p{1.0, 1.0, 2.0, 0.7, 0.6};
  for (double t : {0.2, kPi / 4, 2.0}) {
    const RotationAngle th(t);
    const double c = th.cos(), s = th.sin();
    const double slope = std::hypot(c * 2.0 * p.lambda_bar / p.width_x, s * 2.0 * p.lambda_bar / p.width_y);
    // Fit the slope from two far-field samples and compare.
    const double z1 = 1e5, z2 = 2e5;
    const double fitted = (projected_width(p, th, z2) - projected_width(p, th, z1)) / (z2 - z1);
    CHECK(rel(fitted, slope) < 1e-9);
    CHECK(rel(projected_width(p, th, 1e7) / 1e7, slope) < 1e-9);
  }
}

TEST_CASE("effective GSM parameters") {
  SUBCASE("isotropic") {
    const WitnessReport r = effective_gsm_parameters({1.0, 1.0, 1.5, 1.5, 1.0}, RotationAngle(0.6));
    CHECK(r.effective_coherence_ratio == 0.0);
    CHECK(r.effective_delta.is_infinite());
    CHECK(!r.entangled);
  }
  SUBCASE("45 degrees") {
    const WitnessReport r = effective_gsm_parameters(kAniso, RotationAngle(kPi / 4));
    CHECK(rel(r.effective_coherence_ratio, 0.75) < 1e-15);
    CHECK(rel(r.projected_waist, std::sqrt(2.5)) < 1e-15);
    CHECK(rel(r.effective_delta.value(), std::sqrt(2.5) / 0.75) < 1e-15);
    CHECK(std::abs(r.effective_delta.value() - 2.1082) < 1e-4);
    CHECK(r.entangled);
  }
  SUBCASE("22.5 degrees") {
    const WitnessReport r = effective_gsm_parameters(kAniso, RotationAngle(kPi / 8));
    CHECK(rel(r.effective_coherence_ratio, 0.75 * std::sin(kPi / 4)) < 1e-15);
    CHECK(std::abs(r.effective_coherence_ratio - 0.53033) < 1e-5);
  }
  SUBCASE("axis angles are not entangled") {
    for (double t : {0.0, kPi / 2, kPi}) {
      const WitnessReport r = effective_gsm_parameters(kAniso, RotationAngle(t));
      CHECK(!r.entangled);
      CHECK(r.effective_coherence_ratio == 0.0);
      CHECK(r.effective_delta.is_infinite());
    }
  }
}

TEST_CASE("coherence length fitted from the reduced kernel agrees with the witness") {
  for (double t : {kPi / 4, kPi / 8, 2.5}) {
    const RotationAngle th(t);
    const WitnessReport r = effective_gsm_parameters(kAniso, th);
    const auto grid = oracle::Grid1D::sampling(256, 8.0 * r.projected_waist);
    const auto k = oracle::sample_kernel_1d([&](double a, double b) { return reduced_gamma(kAniso, th, a, b, 0.0); }, grid);
    const auto fit = oracle::fit_gsm_kernel(k);
    CHECK(rel(fit.width, r.projected_waist) < 1e-9);
    CHECK(rel(fit.delta.value(), r.effective_delta.value()) < 1e-9);
  }
}

TEST_CASE("reduced kernel at the waist is the GSM kernel of the effective parameters") {
  for (const BeamParams2D p : {kAniso, BeamParams2D{2.0, 0.5, 0.8, 1.7, 0.6}}) {
    for (double t : {0.4, kPi / 4, 2.2}) {
      const RotationAngle th(t);
      const GsmParams g = reduced_gsm_params(p, th);
      CHECK(g.intensity == p.intensity_x * p.intensity_y);
      for (double a : {-1.0, 0.0, 0.35}) {
        for (double b : {-0.5, 0.2, 1.3}) {
          CHECK(rel(reduced_gamma(p, th, a, b, 0.0), gsm_gamma(g, a, b, 0.0)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("diagonal second moment of the reduced kernel equals the projected width") {
  for (double z : {0.0, 0.4, 2.0}) {
    for (double t : {0.3, kPi / 4, 1.9}) {
      const RotationAngle th(t);
      const double w = projected_width(kAniso, th, z);
      const auto grid = oracle::Grid1D::sampling(4096, 10.0 * w);
      double m0 = 0.0, m2 = 0.0;
      for (double x : grid.points()) {
        const double d = reduced_gamma(kAniso, th, x, x, z).real();
        m0 += d;
        m2 += x * x * d;
      }
      CHECK(rel(4.0 * m2 / m0, w * w) < 1e-9);
    }
  }
}

TEST_CASE("width-scan witness") {
  const std::vector<double> zs{0.0, 0.5, 1.0, 1.5, 2.0};
  SUBCASE("isotropic samples") {
    const BeamParams2D p{1.0, 1.0, 1.2, 1.2, 1.0};
    std::vector<double> w;
    for (double z : zs) w.push_back(projected_width(p, RotationAngle(0.7), z));
    CHECK(std::abs(fit_width_scan(zs, w, 1.0).coherence_term) < 1e-9);
    CHECK(!witness_via_width_scan(p, RotationAngle(0.7), zs).entangled);
  }
  SUBCASE("closed-form samples recover the coherence length") {
    const WitnessReport r = witness_via_width_scan(kAniso, RotationAngle(kPi / 4), zs);
    CHECK(r.entangled);
    CHECK(rel(r.effective_delta.value(), std::sqrt(2.5) / 0.75) < 1e-9);
  }
  SUBCASE("numerically propagated samples recover the coherence length") {
    const auto scan = oracle::numeric_width_scan(kAniso, RotationAngle(kPi / 4), zs, 512);
    CHECK(scan.report.entangled);
    CHECK(rel(scan.report.effective_delta.value(), std::sqrt(2.5) / 0.75) < 1e-3);
  }
}

TEST_CASE("fit recovers the closed-form coherence length across a parameter grid") {
  const std::vector<double> zs{0.0, 0.3, 0.9, 2.0, 4.0};
  for (double w1 : {0.5, 1.0, 2.0, 3.0}) {
    for (double w2 : {0.7, 1.5}) {
      for (int k = 1; k < 12; ++k) {
        if (k == 6) continue;  // pi/2
        const BeamParams2D p{1.0, 1.0, w1, w2, 0.8};
        const RotationAngle th(k * kPi / 12);
        const WitnessReport closed = effective_gsm_parameters(p, th);
        const WitnessReport fit = witness_via_width_scan(p, th, zs);
        REQUIRE(closed.entangled);
        CHECK(fit.entangled);
        CHECK(rel(fit.effective_delta.value(), closed.effective_delta.value()) < 1e-9);
      }
    }
  }
}

TEST_CASE("witness ratio peaks at 45 degrees and vanishes on the axes") {
  const double peak = effective_gsm_parameters(kAniso, RotationAngle(kPi / 4)).effective_coherence_ratio;
  for (int k = 0; k <= 200; ++k) {
    const double t = k * kPi / 200;
    const double r = effective_gsm_parameters(kAniso, RotationAngle(t)).effective_coherence_ratio;
    CHECK(r <= peak);
    if (k == 0 || k == 100 || k == 200) CHECK(r == 0.0);
  }
}

TEST_CASE("witness symmetries") {
  const BeamParams2D p{1.0, 1.0, 2.0, 0.9, 0.7};
  const BeamParams2D swapped{1.0, 1.0, 0.9, 2.0, 0.7};
  for (double t : {0.1, 0.5, kPi / 4, 1.3, 2.8}) {
    const WitnessReport r = effective_gsm_parameters(p, RotationAngle(t));
    CHECK(report_gap(r, effective_gsm_parameters(p, RotationAngle(t + kPi))) < 1e-12);
    CHECK(report_gap(r, effective_gsm_parameters(p, RotationAngle(kPi - t))) < 1e-12);
    CHECK(report_gap(r, effective_gsm_parameters(swapped, RotationAngle(kPi / 2 - t))) < 1e-12);
    for (double z : {0.0, 0.8}) {
      const cplx g = reduced_gamma(p, RotationAngle(t), 0.3, -0.7, z);
      CHECK(rel(reduced_gamma(p, RotationAngle(kPi - t), 0.3, -0.7, z), g) < 1e-12);
      CHECK(rel(reduced_gamma(swapped, RotationAngle(kPi / 2 - t), 0.3, -0.7, z), g) < 1e-12);
    }
  }
}

TEST_CASE("width-scan fit input validation") {
  const std::vector<double> w{1.0, 1.1, 1.3};
  CHECK_THROWS_AS(fit_width_scan(std::vector<double>{0.0, 1.0}, std::vector<double>{1.0, 1.1}, 1.0), ParameterError);
  CHECK_THROWS_AS(fit_width_scan(std::vector<double>{0.1, 0.2, 0.3}, w, 1.0), ParameterError);
  CHECK_THROWS_AS(fit_width_scan(std::vector<double>{0.0, 0.0, 0.0}, w, 1.0), ParameterError);
  CHECK_THROWS_AS(fit_width_scan(std::vector<double>{0.0, 1.0, 2.0}, std::vector<double>{1.0, -1.0, 1.0}, 1.0),
                  ParameterError);
}
