#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvcode/errors.hpp"

namespace tvcode {

/// Absolute tolerance on |sum - 1| accepted before exact renormalization.
inline constexpr double kNormalizationTolerance = 1e-9;

/// A validated source distribution: strictly positive probabilities stored
/// sorted non-increasing, renormalized to machine-exact unit sum. The
/// permutation back to the caller's symbol order is retained so results can
/// be reported in the order the input used.
class NominalDistribution {
  public:
    /// Probabilities in internal (non-increasing) order.
    std::span<const double> probs() const noexcept { return probs_; }

    /// order()[i] is the caller index of internal symbol i.
    std::span<const std::size_t> order() const noexcept { return order_; }

    std::size_t size() const noexcept { return probs_.size(); }

    /// Scatter a vector aligned to internal order back to caller order.
    std::vector<double> to_caller_order(std::span<const double> internal) const;

  private:
    friend NominalDistribution validate_nominal(std::span<const double> raw);

    std::vector<double> probs_;
    std::vector<std::size_t> order_;
};

/// Radius of the total-variation ball together with its half alpha = R/2
/// (the parametrization the merge recursion runs on) and the code base D.
struct BallSpec {
    double radius = 0.0;  // R in [0, 2]
    double alpha = 0.0;   // exactly radius / 2
    unsigned base = 2;    // D >= 2

    static BallSpec from_radius(double radius, unsigned base);
    static BallSpec from_alpha(double alpha, unsigned base);
};

/// The re-normalized weight vector nu_alpha whose negative logs are the
/// optimal real-valued code lengths. Aligned to the internal order of the
/// distribution it was computed from. The leading top_count entries share
/// the (reduced) maximum weight, the trailing bottom_count entries share
/// the (raised) minimum weight.
struct WeightVector {
    std::vector<double> weights;
    double alpha = 0.0;
    std::size_t top_count = 0;
    std::size_t bottom_count = 0;
};

/// Code lengths for base-D codewords, aligned to internal order.
struct CodeLengthVector {
    std::vector<double> lengths;
    unsigned base = 2;
    bool integerized = false;
};

/// Validate a raw probability vector: length >= 2, strictly positive
/// entries, unit sum within kNormalizationTolerance. Returns the sorted,
/// exactly renormalized distribution. The sum is accumulated over the
/// sorted entries so the result is bitwise independent of input order.
NominalDistribution validate_nominal(std::span<const double> raw);

/// Total variational distance sum |p - q|, a metric bounded by 2.
double tv_distance(std::span<const double> p, std::span<const double> q);

/// Kullback-Leibler divergence sum p ln(p/q) in nats. Throws
/// SupportViolation where p(x) > 0 and q(x) = 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Shannon entropy -sum p log_D p with 0 log 0 = 0, in base-D units.
double entropy(std::span<const double> p, unsigned base);

/// Kraft sum D^{-l(x)} over all symbols; <= 1 iff a prefix code exists.
double kraft_sum(const CodeLengthVector& l);

} // namespace tvcode
