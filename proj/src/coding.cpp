#include "tvcode/coding.hpp"

#include <cmath>
#include <string>

#include "tvcode/kernels.hpp"
#include "tvcode/merge.hpp"

namespace tvcode::coding {

CodeLengthVector optimal_lengths(const WeightVector& weights, unsigned base) {
    if (base < 2) throw InvalidBallSpec("base must be >= 2");
    CodeLengthVector l;
    l.base = base;
    l.integerized = false;
    l.lengths.resize(weights.weights.size());
    const double inv_ln_base = 1.0 / std::log(static_cast<double>(base));
    for (std::size_t i = 0; i < weights.weights.size(); ++i) {
        const double w = weights.weights[i];
        if (!(w > 0.0))
            throw ZeroWeight("weight at index " + std::to_string(i) +
                             " is not strictly positive");
        l.lengths[i] = -std::log(w) * inv_ln_base + 0.0; // +0.0 normalizes -0
    }
    return l;
}

CodeLengthVector integerize(const CodeLengthVector& l) {
    CodeLengthVector out;
    out.base = l.base;
    out.integerized = true;
    out.lengths.resize(l.lengths.size());
    for (std::size_t i = 0; i < l.lengths.size(); ++i)
        out.lengths[i] = std::ceil(l.lengths[i]);
    return out;
}

double average_length(const CodeLengthVector& l, std::span<const double> p) {
    if (l.lengths.size() != p.size())
        throw DimensionMismatch("average_length: " + std::to_string(l.lengths.size()) +
                                " lengths vs " + std::to_string(p.size()) +
                                " probabilities");
    return kernels::dot(l.lengths, p);
}

double worst_case_payoff(const CodeLengthVector& l, const NominalDistribution& mu,
                         const BallSpec& spec) {
    const auto [l_min, l_max] = kernels::minmax(l.lengths);
    return spec.alpha * (l_max - l_min) + average_length(l, mu.probs());
}

CodeDesign design(const NominalDistribution& mu, const BallSpec& spec) {
    CodeDesign d;
    d.weights = merge::compute_weights(mu, spec);
    d.real_lengths = optimal_lengths(d.weights, spec.base);
    d.integer_lengths = integerize(d.real_lengths);
    d.worst_case_avg_length = worst_case_payoff(d.real_lengths, mu, spec);
    d.entropy_of_weights = entropy(d.weights.weights, spec.base);
    return d;
}

} // namespace tvcode::coding
