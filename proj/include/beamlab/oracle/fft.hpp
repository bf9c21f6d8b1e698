#pragma once

#include <complex>
#include <memory>

namespace beamlab::oracle {

/// In-place complex FFT plan (FFTW, estimate mode, unaligned-safe).
///
/// Plans are created under a global lock; execution is thread-safe and may be
/// shared across OpenMP threads on distinct buffers. The inverse is
/// unnormalized.
class FftPlan {
 public:
  /// 1D plan of length n0, or 2D row-major n0 x n1 when n1 > 0.
  explicit FftPlan(int n0, int n1 = 0);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;
  int size() const { return size_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int size_;
};

}  // namespace beamlab::oracle
