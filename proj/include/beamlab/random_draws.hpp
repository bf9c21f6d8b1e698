#pragma once

// Reproducible random parameter draws for property sweeps.

#include <random>

#include "beamlab/gaussian_family.hpp"

namespace beamlab {

using Rng = std::mt19937_64;

/// w in [0.5, 2], lambda_bar in [0.5, 1.5], delta in [0.5, 3] (inf one time
/// in five), R = +-[1, 6] (inf one time in five), u in [-2, 2] lambda_bar /
/// delta^2, so about half the draws violate the twist bound.
TgsmParams random_tgsm(Rng& rng);
CurvParams random_curv(Rng& rng);

/// Same ranges with |u| <= lambda_bar / delta^2 and delta finite.
TgsmParams random_physical_tgsm(Rng& rng);

/// L = A A^T + 0.5 I with A entries in [-1.5, 1.5], M = B B^T / 2 with B
/// entries in [-1, 1], K entries in [-1, 1].
AgsmParams random_agsm(Rng& rng);

}  // namespace beamlab
