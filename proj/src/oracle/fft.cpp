#include "beamlab/oracle/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace beamlab::oracle {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct FftPlan::Impl {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

FftPlan::FftPlan(int n0, int n1) : impl_(std::make_unique<Impl>()), size_(n1 > 0 ? n0 * n1 : n0) {
  std::vector<std::complex<double>> scratch(size_);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  if (n1 > 0) {
    impl_->fwd = fftw_plan_dft_2d(n0, n1, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD, flags);
    impl_->inv = fftw_plan_dft_2d(n0, n1, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD, flags);
  } else {
    impl_->fwd = fftw_plan_dft_1d(n0, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD, flags);
    impl_->inv = fftw_plan_dft_1d(n0, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD, flags);
  }
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(impl_->fwd);
  fftw_destroy_plan(impl_->inv);
}

void FftPlan::forward(std::complex<double>* data) const {
  fftw_execute_dft(impl_->fwd, as_fftw(data), as_fftw(data));
}

void FftPlan::inverse(std::complex<double>* data) const {
  fftw_execute_dft(impl_->inv, as_fftw(data), as_fftw(data));
}

}  // namespace beamlab::oracle
