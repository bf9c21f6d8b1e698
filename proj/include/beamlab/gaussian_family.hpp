#pragma once

// Anisotropic Gaussian Schell-model (AGSM) beams and their Wigner variance
// matrices, the twisted (TGSM) and curvature subfamilies, the optical
// uncertainty principle, and partial-transpose separability.
//
// Phase-space ordering is xi = (x, y, p_x, p_y) with p dimensionless.

#include <array>
#include <functional>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "beamlab/core_beams.hpp"
#include "beamlab/ext_real.hpp"

namespace beamlab {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;

/// Gamma(rho; rho') as a callable.
using Kernel2DFn = std::function<cplx(const Vec2&, const Vec2&)>;

struct AgsmParams {
  double intensity = 1.0;
  Mat2 L = Mat2::Identity();
  Mat2 M = Mat2::Zero();
  Mat2 K = Mat2::Zero();
  double lambda_bar = 1.0;

  /// L symmetric positive definite, M symmetric positive semidefinite.
  void validate() const;
};

struct VarianceMatrix {
  Mat4 V = Mat4::Zero();
  double lambda_bar = 1.0;
};

/// Parameters shared by the TGSM and curvature subfamilies. The tag keeps the
/// two families from being mixed up at call sites.
template <class Tag>
struct SubfamilyParams {
  double intensity = 1.0;
  double width = 1.0;
  ExtReal delta = ExtReal::infinite();
  ExtReal radius = ExtReal::infinite();  // R
  double twist = 0.0;                    // u
  double lambda_bar = 1.0;

  void validate() const;
};

struct TgsmTag {};
struct CurvTag {};
using TgsmParams = SubfamilyParams<TgsmTag>;
using CurvParams = SubfamilyParams<CurvTag>;

struct AbcdCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct PhysicalityVerdict {
  bool physical = false;
  double min_eigenvalue = 0.0;
  std::array<double, 4> eigenvalues{};  // ascending
};

enum class SeparabilityVerdict { Separable, Entangled, Unphysical };

std::string_view to_string(SeparabilityVerdict v);
SeparabilityVerdict separability_from_string(std::string_view s);

struct SeparabilityReport {
  SeparabilityVerdict verdict = SeparabilityVerdict::Unphysical;
  PhysicalityVerdict before;  // uncertainty check of V
  PhysicalityVerdict after;   // uncertainty check of the PT image
};

/// Relative floor for eigenvalue-based verdicts: min eigenvalue must be
/// >= -kPhysicalityTolerance * trace.
inline constexpr double kPhysicalityTolerance = 1e-10;

/// Slack on the analytic twist bound |u| <= lambda_bar / delta^2.
inline constexpr double kTwistBoundSlack = 1e-12;

// --- kernels ---------------------------------------------------------------

cplx agsm_gamma(const AgsmParams& p, const Vec2& rho, const Vec2& rho_prime);

/// agsm_gamma as a callable, validated once; use this in sampling loops.
Kernel2DFn agsm_kernel(const AgsmParams& p);

/// The (L, M, K) choices of each subfamily.
AgsmParams agsm_params(const TgsmParams& p);
AgsmParams agsm_params(const CurvParams& p);

/// Explicit subfamily two-point functions, written out term by term.
cplx tgsm_gamma(const TgsmParams& p, const Vec2& rho, const Vec2& rho_prime);
cplx curv_gamma(const CurvParams& p, const Vec2& rho, const Vec2& rho_prime);

/// Gamma(x, y; x', y') -> Gamma(x', y; x, y').
Kernel2DFn partial_transpose_kernel(Kernel2DFn gamma);

// --- variance matrices -----------------------------------------------------

VarianceMatrix variance_from_lmk(const AgsmParams& p);

/// V + (i/2) lambda_bar beta, beta = [[0, I], [-I, 0]].
CMat4 uncertainty_matrix(const VarianceMatrix& v);

/// Generic Hermitian eigensolve of the uncertainty matrix.
PhysicalityVerdict uncertainty_check(const VarianceMatrix& v);

std::pair<VarianceMatrix, AbcdCoefficients> tgsm_variance(const TgsmParams& p);
std::pair<VarianceMatrix, AbcdCoefficients> curv_variance(const CurvParams& p);

/// Closed-form eigenvalues of the uncertainty matrix, ascending.
std::array<double, 4> tgsm_eigenvalues(const AbcdCoefficients& k, double lambda_bar);
std::array<double, 4> curv_eigenvalues(const AbcdCoefficients& k, double lambda_bar);

/// Analytic route: |u| <= lambda_bar / delta^2.
bool tgsm_twist_bound_holds(const TgsmParams& p);

/// Eigenvalue route (generic eigensolver on the TGSM variance matrix). Agrees
/// with tgsm_twist_bound_holds away from a ~1e-9 relative band around the
/// bound, where the two tolerances differ.
PhysicalityVerdict tgsm_physicality(const TgsmParams& p);

PhysicalityVerdict curv_physicality(const CurvParams& p);

/// Lambda V Lambda with Lambda = diag(1, 1, -1, 1).
VarianceMatrix partial_transpose_variance(const VarianceMatrix& v);

SeparabilityVerdict classify_separability(const VarianceMatrix& v);
SeparabilityReport classify_report(const VarianceMatrix& v);

}  // namespace beamlab
