#include "beamlab/gaussian_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "beamlab/errors.hpp"

namespace beamlab {

namespace {

constexpr double kPi = std::numbers::pi;

bool symmetric(const Mat2& m) {
  return std::abs(m(0, 1) - m(1, 0)) <= 1e-14 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

PhysicalityVerdict verdict_from_eigenvalues(const std::array<double, 4>& ev, double trace) {
  PhysicalityVerdict out;
  out.eigenvalues = ev;
  out.min_eigenvalue = ev[0];
  out.physical = ev[0] >= -kPhysicalityTolerance * trace;
  return out;
}

// Shared pieces of both subfamilies: a = w^2/4, q = w^2/(4R), c = u w^2/4, d.
struct SubfamilyScalars {
  double a, q, c, d;
};

template <class Tag>
SubfamilyScalars subfamily_scalars(const SubfamilyParams<Tag>& p) {
  p.validate();
  const double w2 = p.width * p.width;
  const double inv_r = p.radius.reciprocal();
  SubfamilyScalars s;
  s.a = w2 / 4.0;
  s.q = w2 * inv_r / 4.0;
  s.c = p.twist * w2 / 4.0;
  s.d = p.lambda_bar * p.lambda_bar * (1.0 / w2 + p.delta.inverse_square()) +
        w2 / 4.0 * (p.twist * p.twist + inv_r * inv_r);
  return s;
}

std::array<double, 4> sorted(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string_view to_string(SeparabilityVerdict v) {
  switch (v) {
    case SeparabilityVerdict::Separable: return "Separable";
    case SeparabilityVerdict::Entangled: return "Entangled";
    case SeparabilityVerdict::Unphysical: return "Unphysical";
  }
  return "Unphysical";
}

SeparabilityVerdict separability_from_string(std::string_view s) {
  if (s == "Separable") return SeparabilityVerdict::Separable;
  if (s == "Entangled") return SeparabilityVerdict::Entangled;
  if (s == "Unphysical") return SeparabilityVerdict::Unphysical;
  throw ParameterError("unknown separability verdict: " + std::string(s));
}

void AgsmParams::validate() const {
  require(std::isfinite(intensity) && intensity > 0.0, "AgsmParams: intensity must be > 0");
  require(std::isfinite(lambda_bar) && lambda_bar > 0.0, "AgsmParams: lambda_bar must be > 0");
  require(L.allFinite() && M.allFinite() && K.allFinite(), "AgsmParams: matrices must be finite");
  require(symmetric(L), "AgsmParams: L must be symmetric");
  require(symmetric(M), "AgsmParams: M must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat2> el(L, Eigen::EigenvaluesOnly);
  require(el.eigenvalues()(0) > 0.0, "AgsmParams: L must be positive definite");
  Eigen::SelfAdjointEigenSolver<Mat2> em(M, Eigen::EigenvaluesOnly);
  const double m_scale = std::max(1e-300, std::abs(em.eigenvalues()(1)));
  require(em.eigenvalues()(0) >= -1e-14 * m_scale, "AgsmParams: M must be positive semidefinite");
}

template <class Tag>
void SubfamilyParams<Tag>::validate() const {
  require(std::isfinite(intensity) && intensity > 0.0, "subfamily params: intensity must be > 0");
  require(std::isfinite(width) && width > 0.0, "subfamily params: width must be > 0");
  require(delta.is_infinite() || delta.value() > 0.0, "subfamily params: delta must be > 0 or inf");
  require(radius.is_infinite() || radius.value() != 0.0, "subfamily params: R must be nonzero or inf");
  require(std::isfinite(twist), "subfamily params: twist u must be finite");
  require(std::isfinite(lambda_bar) && lambda_bar > 0.0, "subfamily params: lambda_bar must be > 0");
}

template struct SubfamilyParams<TgsmTag>;
template struct SubfamilyParams<CurvTag>;

Kernel2DFn agsm_kernel(const AgsmParams& p) {
  p.validate();
  const double pref = p.intensity / (2.0 * kPi) * std::sqrt(p.L.determinant());
  return [p, pref](const Vec2& rho, const Vec2& rho_prime) {
    const Vec2 diff = rho - rho_prime;
    const Vec2 sum = rho + rho_prime;
    const double re = -0.25 * rho.dot(p.L * rho) - 0.25 * rho_prime.dot(p.L * rho_prime) -
                      0.5 * diff.dot(p.M * diff);
    const double im = -diff.dot(p.K * sum) / (2.0 * p.lambda_bar);
    return pref * std::exp(cplx(re, im));
  };
}

cplx agsm_gamma(const AgsmParams& p, const Vec2& rho, const Vec2& rho_prime) {
  return agsm_kernel(p)(rho, rho_prime);
}

AgsmParams agsm_params(const TgsmParams& p) {
  p.validate();
  AgsmParams out;
  out.intensity = p.intensity;
  out.lambda_bar = p.lambda_bar;
  out.L = (4.0 / (p.width * p.width)) * Mat2::Identity();
  out.M = p.delta.inverse_square() * Mat2::Identity();
  Mat2 i_sigma2;  // i * sigma_2
  i_sigma2 << 0.0, 1.0, -1.0, 0.0;
  out.K = p.radius.reciprocal() * Mat2::Identity() + p.twist * i_sigma2;
  return out;
}

AgsmParams agsm_params(const CurvParams& p) {
  p.validate();
  AgsmParams out;
  out.intensity = p.intensity;
  out.lambda_bar = p.lambda_bar;
  out.L = (4.0 / (p.width * p.width)) * Mat2::Identity();
  out.M = p.delta.inverse_square() * Mat2::Identity();
  Mat2 sigma1, sigma3;
  sigma1 << 0.0, 1.0, 1.0, 0.0;
  sigma3 << 1.0, 0.0, 0.0, -1.0;
  out.K = -p.twist * sigma1 - p.radius.reciprocal() * sigma3;
  return out;
}

cplx tgsm_gamma(const TgsmParams& p, const Vec2& rho, const Vec2& rho_prime) {
  p.validate();
  const double w2 = p.width * p.width;
  const double x = rho(0), y = rho(1), xp = rho_prime(0), yp = rho_prime(1);
  const double r2 = rho.squaredNorm(), rp2 = rho_prime.squaredNorm();
  const double re = -(r2 + rp2) / w2 - (rho - rho_prime).squaredNorm() * p.delta.inverse_square() / 2.0;
  const double im = -(r2 - rp2) * p.radius.reciprocal() / (2.0 * p.lambda_bar) -
                    p.twist / p.lambda_bar * (x * yp - y * xp);
  return 2.0 * p.intensity / (kPi * w2) * std::exp(cplx(re, im));
}

cplx curv_gamma(const CurvParams& p, const Vec2& rho, const Vec2& rho_prime) {
  p.validate();
  const double w2 = p.width * p.width;
  const double x = rho(0), y = rho(1), xp = rho_prime(0), yp = rho_prime(1);
  const double r2 = rho.squaredNorm(), rp2 = rho_prime.squaredNorm();
  const double re = -(r2 + rp2) / w2 - (rho - rho_prime).squaredNorm() * p.delta.inverse_square() / 2.0;
  const double im = p.radius.reciprocal() / (2.0 * p.lambda_bar) * (x * x - y * y - xp * xp + yp * yp) +
                    p.twist / p.lambda_bar * (x * y - xp * yp);
  return 2.0 * p.intensity / (kPi * w2) * std::exp(cplx(re, im));
}

Kernel2DFn partial_transpose_kernel(Kernel2DFn gamma) {
  return [g = std::move(gamma)](const Vec2& rho, const Vec2& rho_prime) {
    return g(Vec2(rho_prime(0), rho(1)), Vec2(rho(0), rho_prime(1)));
  };
}

VarianceMatrix variance_from_lmk(const AgsmParams& p) {
  p.validate();
  const Mat2 l_inv = p.L.inverse();
  VarianceMatrix out;
  out.lambda_bar = p.lambda_bar;
  const double lb2 = p.lambda_bar * p.lambda_bar;
  out.V.topLeftCorner<2, 2>() = l_inv;
  out.V.topRightCorner<2, 2>() = -l_inv * p.K.transpose();
  out.V.bottomLeftCorner<2, 2>() = -p.K * l_inv;
  out.V.bottomRightCorner<2, 2>() = p.K * l_inv * p.K.transpose() + lb2 * (0.25 * p.L + p.M);
  out.V.array() += 0.0;  // -0 -> +0
  return out;
}

CMat4 uncertainty_matrix(const VarianceMatrix& v) {
  CMat4 h = v.V.cast<cplx>();
  const cplx j(0.0, 0.5 * v.lambda_bar);
  for (int k = 0; k < 2; ++k) {
    h(k, k + 2) += j;
    h(k + 2, k) -= j;
  }
  return h;
}

PhysicalityVerdict uncertainty_check(const VarianceMatrix& v) {
  Eigen::SelfAdjointEigenSolver<CMat4> es(uncertainty_matrix(v), Eigen::EigenvaluesOnly);
  std::array<double, 4> ev{};
  for (int k = 0; k < 4; ++k) ev[k] = es.eigenvalues()(k);
  return verdict_from_eigenvalues(sorted(ev), v.V.trace());
}

std::pair<VarianceMatrix, AbcdCoefficients> tgsm_variance(const TgsmParams& p) {
  const SubfamilyScalars s = subfamily_scalars(p);
  const AbcdCoefficients k{s.a, 0.0 - s.q, s.c, s.d};
  VarianceMatrix v;
  v.lambda_bar = p.lambda_bar;
  v.V << k.a, 0.0, k.b, k.c,
         0.0, k.a, 0.0 - k.c, k.b,
         k.b, 0.0 - k.c, k.d, 0.0,
         k.c, k.b, 0.0, k.d;
  return {v, k};
}

std::pair<VarianceMatrix, AbcdCoefficients> curv_variance(const CurvParams& p) {
  const SubfamilyScalars s = subfamily_scalars(p);
  const AbcdCoefficients k{s.a, s.q, s.c, s.d};
  VarianceMatrix v;
  v.lambda_bar = p.lambda_bar;
  v.V << k.a, 0.0, k.b, k.c,
         0.0, k.a, k.c, 0.0 - k.b,
         k.b, k.c, k.d, 0.0,
         k.c, 0.0 - k.b, 0.0, k.d;
  return {v, k};
}

std::array<double, 4> tgsm_eigenvalues(const AbcdCoefficients& k, double lambda_bar) {
  require(k.a > 0.0 && k.d > 0.0, "tgsm_eigenvalues: a and d must be > 0");
  std::array<double, 4> out{};
  int n = 0;
  for (double eps : {-1.0, 1.0}) {
    const double radicand = (k.a - k.d) * (k.a - k.d) +
        4.0 * (k.b * k.b + k.c * k.c + lambda_bar * lambda_bar / 4.0 + eps * lambda_bar * k.c);
    const double root = std::sqrt(std::max(0.0, radicand));
    for (double eps_p : {-1.0, 1.0}) out[n++] = 0.5 * (k.a + k.d + eps_p * root);
  }
  return sorted(out);
}

std::array<double, 4> curv_eigenvalues(const AbcdCoefficients& k, double lambda_bar) {
  require(k.a > 0.0 && k.d > 0.0, "curv_eigenvalues: a and d must be > 0");
  const double root = std::sqrt((k.a - k.d) * (k.a - k.d) +
                                4.0 * (k.b * k.b + k.c * k.c + lambda_bar * lambda_bar / 4.0));
  const double lo = 0.5 * (k.a + k.d - root);
  const double hi = 0.5 * (k.a + k.d + root);
  return {lo, lo, hi, hi};
}

bool tgsm_twist_bound_holds(const TgsmParams& p) {
  p.validate();
  const double bound = p.lambda_bar * p.delta.inverse_square();
  return std::abs(p.twist) <= bound * (1.0 + kTwistBoundSlack);
}

PhysicalityVerdict tgsm_physicality(const TgsmParams& p) {
  return uncertainty_check(tgsm_variance(p).first);
}

PhysicalityVerdict curv_physicality(const CurvParams& p) {
  return uncertainty_check(curv_variance(p).first);
}

VarianceMatrix partial_transpose_variance(const VarianceMatrix& v) {
  VarianceMatrix out = v;
  // Lambda V Lambda with Lambda = diag(1, 1, -1, 1): flip row and column 2,
  // the diagonal entry picks up (-1)^2.
  for (int k = 0; k < 4; ++k) {
    if (k == 2) continue;
    out.V(2, k) = 0.0 - v.V(2, k);
    out.V(k, 2) = 0.0 - v.V(k, 2);
  }
  return out;
}

SeparabilityReport classify_report(const VarianceMatrix& v) {
  SeparabilityReport r;
  r.before = uncertainty_check(v);
  r.after = uncertainty_check(partial_transpose_variance(v));
  if (!r.before.physical) {
    r.verdict = SeparabilityVerdict::Unphysical;
  } else if (!r.after.physical) {
    r.verdict = SeparabilityVerdict::Entangled;
  } else {
    r.verdict = SeparabilityVerdict::Separable;
  }
  return r;
}

SeparabilityVerdict classify_separability(const VarianceMatrix& v) { return classify_report(v).verdict; }

}  // namespace beamlab
