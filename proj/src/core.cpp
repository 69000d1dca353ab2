#include "tvcode/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tvcode/kernels.hpp"

namespace tvcode {

std::vector<double> NominalDistribution::to_caller_order(
    std::span<const double> internal) const {
    if (internal.size() != order_.size())
        throw DimensionMismatch("vector size does not match alphabet size");
    std::vector<double> out(internal.size());
    for (std::size_t i = 0; i < internal.size(); ++i) out[order_[i]] = internal[i];
    return out;
}

namespace {

// Canonical validation sum: Neumaier-compensated, left to right over the
// sorted entries. The compensation keeps the result within ~2 eps of the
// true sum independent of the vector length, which lets the normalization
// fixpoint below use a constant window, and pinning the order makes the
// stored values bitwise independent of the caller's symbol order.
double canonical_sum(std::span<const double> v) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : v) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

NominalDistribution validate_nominal(std::span<const double> raw) {
    if (raw.size() < 2)
        throw TooSmallAlphabet("alphabet must have at least 2 symbols, got " +
                               std::to_string(raw.size()));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] > 0.0))
            throw NonPositiveProbability("probability at index " + std::to_string(i) +
                                         " is not strictly positive");
    }

    NominalDistribution dist;
    dist.order_.resize(raw.size());
    std::iota(dist.order_.begin(), dist.order_.end(), std::size_t{0});
    // Stable descending sort: ties keep the caller's relative order.
    std::stable_sort(dist.order_.begin(), dist.order_.end(),
                     [&raw](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });

    dist.probs_.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) dist.probs_[i] = raw[dist.order_[i]];

    // Summing the sorted entries makes the renormalized values bitwise
    // independent of the caller's symbol order.
    const double total = canonical_sum(dist.probs_);
    if (!(std::abs(total - 1.0) <= kNormalizationTolerance))
        throw NotNormalized("probabilities sum to " + std::to_string(total) +
                            ", expected 1 within 1e-9");

    // A sum already inside the window is left untouched; dividing cannot do
    // better (division puts the true sum within eps/2 of 1, and the
    // compensated measurement adds ~2 eps) and rescaling such a vector just
    // oscillates by an ulp. Every vector inside the window is therefore an
    // exact fixed point of validation, which makes validation bitwise
    // idempotent while preserving ties and the descending order.
    const double window = 8.0 * std::numeric_limits<double>::epsilon();
    double scale = total;
    for (int pass = 0; pass < 2 && std::abs(scale - 1.0) > window; ++pass) {
        for (double& p : dist.probs_) p /= scale;
        scale = canonical_sum(dist.probs_);
    }
    return dist;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw DimensionMismatch("tv_distance: vectors have sizes " +
                                std::to_string(p.size()) + " and " +
                                std::to_string(q.size()));
    return kernels::sum_abs_diff(p, q);
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw DimensionMismatch("kl_divergence: vectors have sizes " +
                                std::to_string(p.size()) + " and " +
                                std::to_string(q.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            if (!(q[i] > 0.0))
                throw SupportViolation("kl_divergence: p has mass at index " +
                                       std::to_string(i) + " where q is zero");
            acc += p[i] * std::log(p[i] / q[i]);
        }
    }
    return acc;
}

double entropy(std::span<const double> p, unsigned base) {
    if (base < 2) throw InvalidBallSpec("base must be >= 2");
    double acc = 0.0;
    for (double v : p)
        if (v > 0.0) acc += v * std::log(v);
    return -acc / std::log(static_cast<double>(base));
}

double kraft_sum(const CodeLengthVector& l) {
    const double base = static_cast<double>(l.base);
    double acc = 0.0;
    for (double len : l.lengths) acc += std::pow(base, -len);
    return acc;
}

BallSpec BallSpec::from_radius(double radius, unsigned base) {
    if (!(radius >= 0.0 && radius <= 2.0))
        throw InvalidBallSpec("radius must lie in [0, 2]");
    if (base < 2) throw InvalidBallSpec("base must be >= 2");
    return BallSpec{radius, radius / 2.0, base};
}

BallSpec BallSpec::from_alpha(double alpha, unsigned base) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidBallSpec("alpha must lie in [0, 1]");
    if (base < 2) throw InvalidBallSpec("base must be >= 2");
    return BallSpec{2.0 * alpha, alpha, base};
}

} // namespace tvcode
