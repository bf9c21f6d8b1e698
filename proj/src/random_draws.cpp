#include "beamlab/random_draws.hpp"

namespace beamlab {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

bool one_in_five(Rng& rng) { return std::uniform_int_distribution<int>(0, 4)(rng) == 0; }

template <class P>
P draw_subfamily(Rng& rng, bool physical) {
  P p;
  p.intensity = uniform(rng, 0.5, 2.0);
  p.width = uniform(rng, 0.5, 2.0);
  p.lambda_bar = uniform(rng, 0.5, 1.5);
  const bool inf_delta = !physical && one_in_five(rng);
  const double delta = uniform(rng, 0.5, 3.0);
  p.delta = inf_delta ? ExtReal::infinite() : ExtReal::finite(delta);
  const bool inf_radius = one_in_five(rng);
  const double radius = uniform(rng, 1.0, 6.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
  p.radius = inf_radius ? ExtReal::infinite() : ExtReal::finite(radius);
  const double bound = inf_delta ? 0.5 : p.lambda_bar / (delta * delta);
  p.twist = uniform(rng, physical ? -1.0 : -2.0, physical ? 1.0 : 2.0) * bound;
  return p;
}

}  // namespace

TgsmParams random_tgsm(Rng& rng) { return draw_subfamily<TgsmParams>(rng, false); }
CurvParams random_curv(Rng& rng) { return draw_subfamily<CurvParams>(rng, false); }
TgsmParams random_physical_tgsm(Rng& rng) { return draw_subfamily<TgsmParams>(rng, true); }

AgsmParams random_agsm(Rng& rng) {
  AgsmParams p;
  p.intensity = uniform(rng, 0.5, 2.0);
  p.lambda_bar = uniform(rng, 0.5, 1.5);
  Mat2 a, b;
  for (int k = 0; k < 4; ++k) a(k / 2, k % 2) = uniform(rng, -1.5, 1.5);
  for (int k = 0; k < 4; ++k) b(k / 2, k % 2) = uniform(rng, -1.0, 1.0);
  for (int k = 0; k < 4; ++k) p.K(k / 2, k % 2) = uniform(rng, -1.0, 1.0);
  p.L = a * a.transpose() + 0.5 * Mat2::Identity();
  p.M = 0.5 * b * b.transpose();
  // Exact symmetry for the validator.
  p.L(1, 0) = p.L(0, 1);
  p.M(1, 0) = p.M(0, 1);
  return p;
}

}  // namespace beamlab
