#include "tvcode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "tvcode/kernels.hpp"

namespace tvcode::oracle {

BallMaximizerResult maximize_over_ball(const CodeLengthVector& l,
                                       const NominalDistribution& mu,
                                       const BallSpec& spec) {
    const auto p = mu.probs();
    const std::size_t n = p.size();
    if (l.lengths.size() != n)
        throw DimensionMismatch("maximize_over_ball: " +
                                std::to_string(l.lengths.size()) + " lengths vs " +
                                std::to_string(n) + " probabilities");

    std::vector<std::size_t> donors(n), recipients(n);
    std::iota(donors.begin(), donors.end(), std::size_t{0});
    std::iota(recipients.begin(), recipients.end(), std::size_t{0});
    const auto& len = l.lengths;
    std::sort(donors.begin(), donors.end(), [&](std::size_t a, std::size_t b) {
        return len[a] != len[b] ? len[a] < len[b] : a < b;
    });
    std::sort(recipients.begin(), recipients.end(), [&](std::size_t a, std::size_t b) {
        return len[a] != len[b] ? len[a] > len[b] : a < b;
    });

    BallMaximizerResult res;
    res.nu_star.assign(p.begin(), p.end());
    auto& nu = res.nu_star;

    double budget = spec.alpha;
    double moved = 0.0;
    std::size_t di = 0, ri = 0;
    while (budget > 0.0 && di < n && ri < n) {
        const std::size_t d = donors[di];
        const std::size_t r = recipients[ri];
        if (len[d] >= len[r]) break; // no strictly improving transfer remains
        if (nu[d] <= 0.0) {
            ++di;
            continue;
        }
        const double capacity = 1.0 - nu[r];
        if (capacity <= 0.0) {
            ++ri;
            continue;
        }
        const double take = std::min({budget, nu[d], capacity});
        nu[d] -= take;
        nu[r] += take;
        budget -= take;
        moved += take;
    }

    res.tv_used = 2.0 * moved;
    res.payoff = kernels::dot(len, nu);
    return res;
}

PartitionSearchResult enumerate_partitions(const NominalDistribution& mu,
                                           const BallSpec& spec) {
    const auto p = mu.probs();
    const std::size_t n = p.size();
    if (n > kMaxEnumerationAlphabet)
        throw AlphabetTooLarge("enumerate_partitions supports up to " +
                               std::to_string(kMaxEnumerationAlphabet) +
                               " symbols, got " + std::to_string(n));
    const double alpha = spec.alpha;
    const double tol = 1e-12;

    // prefix[k] = sum of the k largest, suffix[k] = sum of the k smallest
    std::vector<double> prefix(n + 1, 0.0), suffix(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        prefix[k] = prefix[k - 1] + p[k - 1];
        suffix[k] = suffix[k - 1] + p[n - k];
    }

    PartitionSearchResult best;
    // All-merged candidate: flat code, payoff log_D n. Feasible for every
    // alpha and the unique optimum beyond alpha_max.
    best.best_weights.weights.assign(n, 1.0 / static_cast<double>(n));
    best.best_weights.alpha = alpha;
    best.best_weights.top_count = 0;
    best.best_weights.bottom_count = 0;
    best.best_payoff = entropy(best.best_weights.weights, spec.base);

    std::vector<double> cand(n);
    for (std::size_t t = 1; t <= n - 1; ++t) {
        for (std::size_t b = 1; b + t <= n; ++b) {
            const double top_w = (prefix[t] - alpha) / static_cast<double>(t);
            const double bottom_w = (suffix[b] + alpha) / static_cast<double>(b);
            if (!(top_w >= -tol && top_w <= 1.0 + tol)) continue;
            if (!(bottom_w >= -tol && bottom_w <= 1.0 + tol)) continue;
            if (t + b < n) {
                // Ordering against the untouched middle block.
                if (top_w < p[t] - tol) continue;
                if (bottom_w > p[n - b - 1] + tol) continue;
            } else if (top_w < bottom_w - tol) {
                continue;
            }

            std::copy(p.begin(), p.end(), cand.begin());
            std::fill_n(cand.begin(), t, top_w);
            std::fill(cand.end() - static_cast<std::ptrdiff_t>(b), cand.end(), bottom_w);
            const double payoff = entropy(cand, spec.base);
            if (payoff < best.best_payoff) {
                best.best_payoff = payoff;
                best.best_weights.weights = cand;
                best.best_weights.top_count = t;
                best.best_weights.bottom_count = b;
            }
        }
    }
    return best;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits of the generator output;
// keeps the sample sequence independent of the standard library's
// distribution implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<std::vector<double>> sample_ball(const NominalDistribution& mu,
                                             const BallSpec& spec, std::size_t count,
                                             std::uint64_t seed) {
    const auto p = mu.probs();
    const std::size_t n = p.size();
    std::mt19937_64 rng(seed);

    std::vector<std::vector<double>> samples;
    samples.reserve(count);
    std::vector<double> q(n);
    for (std::size_t s = 0; s < count; ++s) {
        // Uniform point on the simplex via normalized exponentials.
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = -std::log1p(-next_unit(rng));
            total += q[i];
        }
        if (total <= 0.0) {
            std::fill(q.begin(), q.end(), 1.0 / static_cast<double>(n));
        } else {
            for (double& v : q) v /= total;
        }

        const double dist = kernels::sum_abs_diff(q, p);
        const double fraction = next_unit(rng);
        const double scale =
            dist > 0.0 ? std::min(1.0, fraction * spec.radius / dist) : 0.0;

        std::vector<double> nu(n);
        for (std::size_t i = 0; i < n; ++i)
            nu[i] = (1.0 - scale) * p[i] + scale * q[i];
        samples.push_back(std::move(nu));
    }
    return samples;
}

} // namespace tvcode::oracle
