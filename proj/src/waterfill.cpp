#include "tvcode/waterfill.hpp"

#include <algorithm>

#include "tvcode/kernels.hpp"

namespace tvcode::waterfill {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidBallSpec("alpha must lie in [0, 1]");
}

} // namespace

double solve_lower_level(const NominalDistribution& mu, double alpha) {
    check_alpha(alpha);
    const auto p = mu.probs();
    const std::size_t n = p.size();
    if (alpha == 0.0) return p[n - 1];

    // Level over the k smallest probabilities: w = (alpha + S_k) / k,
    // accepted once it does not exceed the next-larger probability.
    const double uniform = 1.0 / static_cast<double>(n);
    double suffix = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        suffix += p[n - k];
        const double level = (alpha + suffix) / static_cast<double>(k);
        if (k == n || level <= p[n - k - 1]) return std::min(level, uniform);
    }
    return uniform; // unreachable
}

double solve_upper_level(const NominalDistribution& mu, double alpha) {
    check_alpha(alpha);
    const auto p = mu.probs();
    const std::size_t n = p.size();
    if (alpha == 0.0) return p[0];

    const double uniform = 1.0 / static_cast<double>(n);
    double prefix = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += p[k - 1];
        const double level = (prefix - alpha) / static_cast<double>(k);
        if (k == n || level >= p[k]) return std::max(level, uniform);
    }
    return uniform; // unreachable
}

WaterLevels solve_levels(const NominalDistribution& mu, double alpha) {
    return WaterLevels{solve_lower_level(mu, alpha), solve_upper_level(mu, alpha)};
}

WeightVector waterfill_weights(const NominalDistribution& mu, const BallSpec& spec) {
    const auto p = mu.probs();
    const std::size_t n = p.size();
    const WaterLevels levels = solve_levels(mu, spec.alpha);

    WeightVector w;
    w.alpha = spec.alpha;
    w.weights.resize(n);
    kernels::clamp(p, levels.lower, levels.upper, w.weights);

    // probs are sorted non-increasing, so the clipped regions are a prefix
    // and a suffix.
    w.top_count = static_cast<std::size_t>(
        std::partition_point(p.begin(), p.end(),
                             [&](double v) { return v > levels.upper; }) -
        p.begin());
    w.bottom_count = static_cast<std::size_t>(
        p.end() - std::partition_point(p.begin(), p.end(),
                                       [&](double v) { return v >= levels.lower; }));
    return w;
}

} // namespace tvcode::waterfill
