#pragma once

#include "tvcode/core.hpp"

namespace tvcode::waterfill {

/// The two water levels of the robust coding solution: the lower level is
/// raised over the smallest probabilities until mass alpha has been added,
/// the upper level cuts the largest probabilities until mass alpha has been
/// removed. Both clamp to 1/|Sigma| once they would cross (no-compression
/// regime).
struct WaterLevels {
    double lower = 0.0;
    double upper = 0.0;
};

/// Solve sum (w - mu(x))^+ = alpha for the unique lower level w, by closed
/// form on the sorted input: scan prefixes of the smallest probabilities and
/// take w = (alpha + prefix sum) / prefix size in the bracketing interval.
/// Result is clamped to 1/|Sigma|; alpha = 0 returns min mu.
double solve_lower_level(const NominalDistribution& mu, double alpha);

/// Mirror image: solve sum (mu(x) - w)^+ = alpha over prefixes of the
/// largest probabilities, clamped to 1/|Sigma| from below.
double solve_upper_level(const NominalDistribution& mu, double alpha);

WaterLevels solve_levels(const NominalDistribution& mu, double alpha);

/// Optimal weights by two-level waterfilling: clamp each mu(x) into
/// [lower, upper]. Symbols strictly above the upper level form the top
/// group, symbols strictly below the lower level the bottom group.
WeightVector waterfill_weights(const NominalDistribution& mu, const BallSpec& spec);

} // namespace tvcode::waterfill
