// Serial reference vs OpenMP variant of each oracle kernel. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

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

Field2D bench_field(int n) {
  const BeamParams2D p{1.0, 1.0, 2.0, 1.0, 1.0};
  return sample_field_2d([&](double x, double y) { return elliptic_amplitude_2d(p, x, y, 0.0); },
                         Grid1D::propagation(n, 16.0));
}

Kernel2DFn bench_kernel() {
  Rng rng(1);
  return agsm_kernel(random_agsm(rng));
}

template <auto Fn>
void BM_transform_columns(benchmark::State& state) {
  const Field2D f = bench_field(static_cast<int>(state.range(0)));
  const auto k = f.grid.wavenumbers();
  std::vector<cplx> transfer(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) transfer[i] = std::polar(1.0 / k.size(), -0.5 * k[i] * k[i]);
  FftPlan plan(f.grid.n_points);
  Eigen::MatrixXcd m = f.values;
  for (auto _ : state) {
    Fn(m, plan, transfer);
    benchmark::DoNotOptimize(m.data());
  }
}

template <auto Fn>
void BM_sample_kernel_matrix(benchmark::State& state) {
  const auto gamma = bench_kernel();
  const Grid1D axis = Grid1D::sampling(static_cast<int>(state.range(0)), 6.0);
  Eigen::MatrixXcd out;
  for (auto _ : state) {
    Fn(gamma, axis, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Fn>
void BM_wigner_sums(benchmark::State& state) {
  const auto gamma = bench_kernel();
  const int n = static_cast<int>(state.range(0));
  const Grid1D pos = Grid1D::sampling(n, 4.0);
  const Grid1D sep = Grid1D::sampling(2 * n, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(gamma, pos, sep, 1.0));
}

template <auto Fn>
void BM_projected_moment(benchmark::State& state) {
  const Field2D f = bench_field(static_cast<int>(state.range(0)));
  const double t = std::numbers::pi / 4;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, std::cos(t), std::sin(t)));
}

template <auto Fn>
void BM_trace_out_y(benchmark::State& state) {
  const Field2D f = bench_field(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f));
}

}  // namespace

BENCHMARK(BM_transform_columns<kn::serial::transform_columns>)->Name("transform_columns/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_transform_columns<kn::omp::transform_columns>)->Name("transform_columns/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_sample_kernel_matrix<kn::serial::sample_kernel_matrix>)->Name("sample_kernel_matrix/serial")->Arg(24);
BENCHMARK(BM_sample_kernel_matrix<kn::omp::sample_kernel_matrix>)->Name("sample_kernel_matrix/omp")->Arg(24);
BENCHMARK(BM_wigner_sums<kn::serial::wigner_sums>)->Name("wigner_sums/serial")->Arg(16);
BENCHMARK(BM_wigner_sums<kn::omp::wigner_sums>)->Name("wigner_sums/omp")->Arg(16);
BENCHMARK(BM_projected_moment<kn::serial::projected_moment>)->Name("projected_moment/serial")->Arg(1024);
BENCHMARK(BM_projected_moment<kn::omp::projected_moment>)->Name("projected_moment/omp")->Arg(1024);
BENCHMARK(BM_trace_out_y<kn::serial::trace_out_y>)->Name("trace_out_y/serial")->Arg(256);
BENCHMARK(BM_trace_out_y<kn::omp::trace_out_y>)->Name("trace_out_y/omp")->Arg(256);

BENCHMARK_MAIN();
