#include <doctest.h>

#include "beamlab/core_beams.hpp"
#include "beamlab/errors.hpp"
#include "beamlab/gaussian_family.hpp"
#include "beamlab/oracle/kernel_grid.hpp"
#include "beamlab/projection_witness.hpp"
#include "helpers.hpp"

using namespace beamlab;
using namespace beamlab::oracle;
using testing::kPi;

namespace {

TgsmParams unit_tgsm(double u) {
  TgsmParams p;
  p.width = 1.0;
  p.delta = ExtReal::finite(1.0);
  p.twist = u;
  return p;
}

CurvParams unit_curv(double u) {
  CurvParams p;
  p.width = 1.0;
  p.delta = ExtReal::finite(1.0);
  p.twist = u;
  return p;
}

PsdResult tgsm_psd(double u, int points) {
  return kernel_psd_check(sample_kernel_2d(agsm_kernel(agsm_params(unit_tgsm(u))), Grid1D::sampling(points, 8.0)));
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("physical GSM kernels sample to PSD matrices") {
  const GsmParams p{1.0, 1.0, ExtReal::finite(0.7), 1.0};
  const auto k = sample_kernel_1d([&](double x, double xp) { return gsm_gamma(p, x, xp, 0.4); }, Grid1D::sampling(80, 8.0));
  CHECK(k.hermiticity_defect() < 1e-15);
  const auto r = kernel_psd_check(k);
  CHECK(r.psd);
  CHECK(r.max_eigenvalue > 0.0);
  CHECK(r.min_eigenvalue_ratio >= -kPsdTolerance);
}

TEST_CASE("twisted kernel PSD verdict follows the twist bound") {
  CHECK(tgsm_psd(0.0, 24).psd);
  CHECK(tgsm_psd(0.5, 24).psd);
  CHECK(tgsm_psd(1.0, 24).psd);
  CHECK_FALSE(tgsm_psd(1.01, 24).psd);
  CHECK_FALSE(tgsm_psd(-2.0, 24).psd);
  CHECK(tgsm_psd(-0.999, 24).psd);
}

TEST_CASE("curvature kernel PT image at 64 points per axis [slow]") {
  const Grid1D axis = Grid1D::sampling(64, 8.0);
  const auto beyond = kernel_psd_check(partial_transpose_kernel(sample_kernel_2d(agsm_kernel(agsm_params(unit_curv(2.0))), axis)));
  CHECK_FALSE(beyond.psd);
  CHECK(beyond.min_eigenvalue_ratio < -1e-2);
  const auto within = kernel_psd_check(partial_transpose_kernel(sample_kernel_2d(agsm_kernel(agsm_params(unit_curv(0.5))), axis)));
  CHECK(within.psd);
}

TEST_CASE("partial transpose of sampled kernels") {
  const Grid1D axis = Grid1D::sampling(24, 8.0);
  SUBCASE("curvature family image is PSD exactly within the twist bound") {
    for (double u : {0.0, 0.5, -0.5, 1.0}) {
      const auto k = sample_kernel_2d(agsm_kernel(agsm_params(unit_curv(u))), axis);
      CHECK(kernel_psd_check(k).psd);
      CHECK(kernel_psd_check(partial_transpose_kernel(k)).psd);
    }
    for (double u : {2.0, -2.0, 1.01}) {
      const auto k = sample_kernel_2d(agsm_kernel(agsm_params(unit_curv(u))), axis);
      CHECK(kernel_psd_check(k).psd);
      CHECK_FALSE(kernel_psd_check(partial_transpose_kernel(k)).psd);
    }
  }
  SUBCASE("grid PT agrees with the transposed callable") {
    const auto gamma = agsm_kernel(agsm_params(unit_curv(0.7)));
    const auto a = partial_transpose_kernel(sample_kernel_2d(gamma, axis));
    const auto b = sample_kernel_2d(partial_transpose_kernel(gamma), axis);
    CHECK(max_abs_diff(a.values, b.values) == 0.0);
  }
  SUBCASE("involution") {
    const auto k = sample_kernel_2d(agsm_kernel(agsm_params(unit_tgsm(0.3))), axis);
    CHECK(max_abs_diff(partial_transpose_kernel(partial_transpose_kernel(k)).values, k.values) == 0.0);
  }
  SUBCASE("1D transpose") {
    const GsmParams p{1.0, 1.0, ExtReal::finite(1.0), 1.0};
    const auto k = sample_kernel_1d([&](double x, double xp) { return gsm_gamma(p, x, xp, 0.5); }, Grid1D::sampling(16, 6.0));
    const auto t = partial_transpose_kernel(k);
    CHECK(max_abs_diff(t.values, k.values.transpose()) == 0.0);
  }
}

TEST_CASE("kernel and matrix routes agree across the twist bound") {
  for (double u : {0.0, 0.25, 0.9, 0.999, 1.0, 1.002, 1.5, 3.0}) {
    CAPTURE(u);
    CHECK(tgsm_psd(u, 24).psd == tgsm_twist_bound_holds(unit_tgsm(u)));
    CHECK(tgsm_psd(u, 24).psd == tgsm_physicality(unit_tgsm(u)).physical);
  }
}

TEST_CASE("reduced kernels") {
  SUBCASE("axis-aligned product traces to the x factor") {
    const BeamParams2D p{1.0, 2.0, 1.5, 0.7, 1.0};
    const Grid1D g = Grid1D::propagation(256, 10.0);
    const Field2D f = sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.0); }, g);
    const auto r = reduce_kernel(f, RotationAngle(0.0));
    double gap = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
      for (int k = 0; k < g.n_points; ++k) {
        const cplx want = std::sqrt(p.intensity_y) * coherent_amplitude_1d(p.x_axis(), g.x(i), 0.0) *
                          std::conj(coherent_amplitude_1d(p.x_axis(), g.x(k), 0.0));
        gap = std::max(gap, std::abs(r.values(i, k) - want));
      }
    }
    CHECK(gap / r.values.cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("bilinear rotation matches the closed form on a fine grid") {
    const BeamParams2D p{1.0, 1.0, 1.0, 0.75, 1.0};
    const RotationAngle theta(kPi / 4);
    const Grid1D g = Grid1D::propagation(1024, 5.0);
    const Field2D f = sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.0); }, g);
    const auto r = reduce_kernel(f, theta);
    double gap = 0.0, peak = 0.0;
    for (int i = 0; i < g.n_points; i += 8) {
      for (int k = 0; k < g.n_points; k += 8) {
        const cplx want = reduced_gamma(p, theta, g.x(i), g.x(k), 0.0);
        gap = std::max(gap, std::abs(r.values(i, k) - want));
        peak = std::max(peak, std::abs(want));
      }
    }
    CHECK(gap / peak < 1e-4);
  }
  SUBCASE("isotropic beam reduces to a pure state") {
    const BeamParams2D p{1.0, 1.0, 1.0, 1.0, 1.0};
    const RotationAngle theta(1.1);
    const Grid1D g = Grid1D::propagation(128, 8.0);
    const Field2D rotated = sample_field_2d([&](double xr, double yr) {
      return elliptic_amplitude_2d(p, theta.cos() * xr - theta.sin() * yr, theta.sin() * xr + theta.cos() * yr, 0.0);
    }, g);
    const auto r = reduce_kernel(rotated);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r.values, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    CHECK(std::abs(ev(ev.size() - 2)) / ev(ev.size() - 1) < 1e-8);
  }
  SUBCASE("trace of a 2D kernel grid") {
    const auto gamma = agsm_kernel(agsm_params(unit_tgsm(0.0)));
    const Grid1D axis = Grid1D::sampling(20, 8.0);
    const auto r = reduce_kernel(sample_kernel_2d(gamma, axis));
    CHECK(r.dims == 1);
    CHECK(r.hermiticity_defect() < 1e-14);
    CHECK(kernel_psd_check(r).psd);
  }
  SUBCASE("Hermiticity guard") {
    const Grid1D axis = Grid1D::sampling(6, 4.0);
    KernelGrid k = sample_kernel_2d(agsm_kernel(agsm_params(unit_tgsm(0.0))), axis);
    k.values(0, axis.n_points) += cplx(0.0, 0.5);
    CHECK(k.hermiticity_defect() > kHermiticityTolerance);
    CHECK_THROWS_AS(reduce_kernel(k), NumericalGuardError);
  }
}

TEST_CASE("GSM fit recovers the sampled parameters") {
  const GsmParams p{1.0, 1.2, ExtReal::finite(0.8), 1.0};
  const auto k = sample_kernel_1d([&](double x, double xp) { return gsm_gamma(p, x, xp, 0.0); }, Grid1D::propagation(256, 10.0));
  const auto fit = fit_gsm_kernel(k);
  CHECK(testing::rel(fit.width, 1.2) < 1e-9);
  CHECK(testing::rel(fit.delta.value(), 0.8) < 1e-9);
}
