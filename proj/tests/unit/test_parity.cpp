#include <doctest.h>

#include <numbers>
#include <vector>

#include "beamlab/core_beams.hpp"
#include "beamlab/gaussian_family.hpp"
#include "beamlab/oracle/kernels.hpp"
#include "beamlab/random_draws.hpp"

using namespace beamlab;
using namespace beamlab::oracle;
namespace kn = beamlab::oracle::kernels;

namespace {

Field2D test_field(int n) {
  const BeamParams2D p{1.0, 1.3, 1.5, 0.8, 1.0};
  return sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.7); }, Grid1D::propagation(n, 8.0));
}

Kernel2DFn test_kernel() {
  Rng rng(99);
  return agsm_kernel(random_agsm(rng));
}

}  // namespace

TEST_CASE("column transforms are bit-identical") {
  const Field2D f = test_field(128);
  const auto k = f.grid.wavenumbers();
  std::vector<cplx> transfer(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) transfer[i] = std::polar(1.0 / k.size(), -0.35 * k[i] * k[i]);
  FftPlan plan(f.grid.n_points);
  Eigen::MatrixXcd a = f.values, b = f.values;
  kn::serial::transform_columns(a, plan, transfer);
  kn::omp::transform_columns(b, plan, transfer);
  CHECK(a == b);
}

TEST_CASE("kernel sampling is bit-identical") {
  const Grid1D axis = Grid1D::sampling(12, 4.0);
  Eigen::MatrixXcd a, b;
  kn::serial::sample_kernel_matrix(test_kernel(), axis, a);
  kn::omp::sample_kernel_matrix(test_kernel(), axis, b);
  CHECK(a.rows() == 144);
  CHECK(a == b);
}

TEST_CASE("Wigner sums are bit-identical") {
  const Grid1D pos = Grid1D::sampling(10, 4.0);
  const Grid1D sep = Grid1D::sampling(16, 6.0);
  const auto a = kn::serial::wigner_sums(test_kernel(), pos, sep, 0.9);
  const auto b = kn::omp::wigner_sums(test_kernel(), pos, sep, 0.9);
  CHECK(a.total == b.total);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
  CHECK(a.max_abs == b.max_abs);
  CHECK(a.max_abs_imag == b.max_abs_imag);
}

TEST_CASE("projected moments are bit-identical") {
  const Field2D f = test_field(256);
  const double t = std::numbers::pi / 5;
  const auto a = kn::serial::projected_moment(f, std::cos(t), std::sin(t));
  const auto b = kn::omp::projected_moment(f, std::cos(t), std::sin(t));
  CHECK(a.total == b.total);
  CHECK(a.second == b.second);
}

TEST_CASE("y traces are bit-identical") {
  const Field2D f = test_field(128);
  CHECK(kn::serial::trace_out_y(f) == kn::omp::trace_out_y(f));
}
