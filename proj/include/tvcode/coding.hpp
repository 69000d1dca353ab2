#pragma once

#include <span>

#include "tvcode/core.hpp"

namespace tvcode::coding {

/// A complete robust code design: the weight vector, the real-valued
/// optimal lengths -log_D nu_alpha, their ceiling-rounded integer
/// counterparts, the worst-case average length of the real lengths, and the
/// entropy of the weights (which the worst case equals for the optimum).
struct CodeDesign {
    WeightVector weights;
    CodeLengthVector real_lengths;
    CodeLengthVector integer_lengths;
    double worst_case_avg_length = 0.0;
    double entropy_of_weights = 0.0;
};

/// l(x) = -log_D nu(x) componentwise; the Kraft sum of the result is 1.
/// Throws ZeroWeight if any weight is <= 0.
CodeLengthVector optimal_lengths(const WeightVector& weights, unsigned base);

/// Ceiling-round real lengths; the Kraft inequality is preserved.
CodeLengthVector integerize(const CodeLengthVector& l);

/// Average codeword length sum l(x) p(x).
double average_length(const CodeLengthVector& l, std::span<const double> p);

/// Exact worst case of the average length over the TV ball of radius R:
///   (R/2) (max l - min l) + sum l(x) mu(x).
double worst_case_payoff(const CodeLengthVector& l, const NominalDistribution& mu,
                         const BallSpec& spec);

/// Full pipeline: merge weights -> real lengths -> integer lengths, with
/// the worst-case payoff and weight entropy evaluated.
CodeDesign design(const NominalDistribution& mu, const BallSpec& spec);

} // namespace tvcode::coding
