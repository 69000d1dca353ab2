#pragma once

#include <cstdint>
#include <vector>

#include "tvcode/coding.hpp"
#include "tvcode/core.hpp"

// Independent brute-force verifiers. Nothing here shares a code path with
// the waterfill/merge solvers; the test suites drive both sides against
// each other.

namespace tvcode::oracle {

/// enumerate_partitions refuses alphabets larger than this.
inline constexpr std::size_t kMaxEnumerationAlphabet = 12;

/// Result of maximizing sum l(x) nu(x) over the TV ball.
struct BallMaximizerResult {
    std::vector<double> nu_star; // internal order
    double payoff = 0.0;
    double tv_used = 0.0; // <= R
};

/// Exact LP maximizer by greedy mass transfer: move up to R/2 of mass away
/// from the shortest-codeword symbols (ascending length, floored at 0,
/// ties by lower index) onto the longest-codeword symbols (descending
/// length, capped at 1, ties by lower index). Transfers with no strict
/// payoff gain are not made, so constant lengths leave mu untouched.
BallMaximizerResult maximize_over_ball(const CodeLengthVector& l,
                                       const NominalDistribution& mu,
                                       const BallSpec& spec);

struct PartitionSearchResult {
    WeightVector best_weights;
    double best_payoff = 0.0;
};

/// Try every (top group size, bottom group size) partition of the sorted
/// alphabet plus the all-merged uniform candidate, build the candidate
/// weights, discard candidates whose weights leave [0,1] or break the
/// non-increasing order, and return the one minimizing -sum nu log_D nu.
/// Throws AlphabetTooLarge beyond kMaxEnumerationAlphabet symbols.
PartitionSearchResult enumerate_partitions(const NominalDistribution& mu,
                                           const BallSpec& spec);

/// Deterministic feasible samples from the ball: uniform simplex draws
/// contracted toward mu until the TV constraint holds. Same seed, same
/// sequence. Vectors are in internal order.
std::vector<std::vector<double>> sample_ball(const NominalDistribution& mu,
                                             const BallSpec& spec, std::size_t count,
                                             std::uint64_t seed);

} // namespace tvcode::oracle
