#pragma once

#include <cstddef>
#include <vector>

#include "tvcode/core.hpp"

namespace tvcode::merge {

/// Breakpoint comparisons treat |beta - gamma| <= kBreakpointTie as a
/// simultaneous event (both groups grow at the same alpha).
inline constexpr double kBreakpointTie = 1e-12;

/// One merge event: from this alpha on, the top/bottom merged groups have
/// the recorded cardinalities.
struct MergeEvent {
    double alpha = 0.0;
    std::size_t top_count = 0;
    std::size_t bottom_count = 0;
};

/// The full schedule of merge events for one distribution: betas are the
/// alphas at which the bottom group absorbs its next symbol, gammas the
/// same for the top group, events the merged ascending sequence. alpha_max
/// is the smallest alpha with uniform weights; it is derived from the final
/// two-group configuration, not from a closed form.
struct BreakpointSchedule {
    std::vector<double> betas;
    std::vector<double> gammas;
    std::vector<MergeEvent> events;
    double alpha_max = 0.0;
    std::size_t alphabet_size = 0;
};

/// Iteration counter for the schedule loop; the loop is O(|Sigma|) and
/// tests assert it.
struct MergeStats {
    std::size_t iterations = 0;
};

/// Alpha at which the bottom merged group of cardinality k1+1 (sum
/// bottom_sum) reaches the next-larger nominal probability:
///   beta = (k1+1) mu[n-k1-2] - bottom_sum.
/// Requires k1 + 1 <= |Sigma| - 1; throws IndexOutOfRange otherwise.
double next_beta(const NominalDistribution& mu, std::size_t k1, double bottom_sum);

/// Alpha at which the top merged group of cardinality k2+1 (sum top_sum)
/// falls to the next-smaller nominal probability:
///   gamma = top_sum - (k2+1) mu[k2+1].
/// Requires k2 + 1 <= |Sigma| - 1; throws IndexOutOfRange otherwise.
double next_gamma(const NominalDistribution& mu, std::size_t k2, double top_sum);

/// Run the merge recursion to exhaustion and return every event plus
/// alpha_max.
BreakpointSchedule build_schedule(const NominalDistribution& mu);

/// Weights at alpha = spec.alpha via the merge recursion, firing events
/// while their alpha is <= the target (group sizes update at the
/// breakpoint) and early-exiting after at most |Sigma| iterations. For
/// alpha >= alpha_max returns the uniform vector exactly.
WeightVector compute_weights(const NominalDistribution& mu, const BallSpec& spec,
                             MergeStats* stats = nullptr);

} // namespace tvcode::merge
