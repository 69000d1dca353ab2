#include "tvcode/merge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tvcode::merge {

double next_beta(const NominalDistribution& mu, std::size_t k1, double bottom_sum) {
    const std::size_t n = mu.size();
    if (k1 + 1 > n - 1)
        throw IndexOutOfRange("next_beta: k1 = " + std::to_string(k1) +
                              " leaves no symbol above the bottom group");
    return static_cast<double>(k1 + 1) * mu.probs()[n - k1 - 2] - bottom_sum;
}

double next_gamma(const NominalDistribution& mu, std::size_t k2, double top_sum) {
    const std::size_t n = mu.size();
    if (k2 + 1 > n - 1)
        throw IndexOutOfRange("next_gamma: k2 = " + std::to_string(k2) +
                              " leaves no symbol below the top group");
    return top_sum - static_cast<double>(k2 + 1) * mu.probs()[k2 + 1];
}

namespace {

// Shared state of the event loop. Group cardinalities are k1+1 (bottom)
// and k2+1 (top); the loop stops once the groups are adjacent, after which
// alpha_max follows from equating the two group weights.
struct LoopState {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    double bottom_sum = 0.0;
    double top_sum = 0.0;
    std::size_t iterations = 0;

    explicit LoopState(std::span<const double> p)
        : bottom_sum(p.back()), top_sum(p.front()) {}

    bool adjacent(std::size_t n) const { return k1 + k2 + 2 >= n; }

    void fire_bottom(std::span<const double> p) {
        ++k1;
        bottom_sum += p[p.size() - 1 - k1];
    }

    void fire_top(std::span<const double> p) {
        ++k2;
        top_sum += p[k2];
    }

    double alpha_max(std::size_t n) const {
        const double t = static_cast<double>(k2 + 1);
        const double b = static_cast<double>(k1 + 1);
        return (b * top_sum - t * bottom_sum) / static_cast<double>(n);
    }
};

} // namespace

BreakpointSchedule build_schedule(const NominalDistribution& mu) {
    const auto p = mu.probs();
    const std::size_t n = p.size();

    BreakpointSchedule sched;
    sched.alphabet_size = n;
    LoopState st(p);

    while (!st.adjacent(n)) {
        const double beta = next_beta(mu, st.k1, st.bottom_sum);
        const double gamma = next_gamma(mu, st.k2, st.top_sum);
        ++st.iterations;
        if (std::abs(beta - gamma) <= kBreakpointTie) {
            const std::size_t middle = n - (st.k1 + st.k2 + 2);
            st.fire_bottom(p);
            sched.betas.push_back(beta);
            sched.events.push_back({beta, st.k2 + 1, st.k1 + 1});
            if (middle > 1) {
                // Simultaneous merge on both sides.
                st.fire_top(p);
                sched.gammas.push_back(gamma);
                sched.events.push_back({gamma, st.k2 + 1, st.k1 + 1});
            }
        } else if (beta < gamma) {
            st.fire_bottom(p);
            sched.betas.push_back(beta);
            sched.events.push_back({beta, st.k2 + 1, st.k1 + 1});
        } else {
            st.fire_top(p);
            sched.gammas.push_back(gamma);
            sched.events.push_back({gamma, st.k2 + 1, st.k1 + 1});
        }
    }

    sched.alpha_max = st.alpha_max(n);
    return sched;
}

WeightVector compute_weights(const NominalDistribution& mu, const BallSpec& spec,
                             MergeStats* stats) {
    const auto p = mu.probs();
    const std::size_t n = p.size();
    const double alpha = spec.alpha;

    LoopState st(p);
    while (!st.adjacent(n)) {
        const double beta = next_beta(mu, st.k1, st.bottom_sum);
        const double gamma = next_gamma(mu, st.k2, st.top_sum);
        if (std::min(beta, gamma) > alpha) break; // target lies before the next event
        ++st.iterations;
        if (std::abs(beta - gamma) <= kBreakpointTie) {
            const std::size_t middle = n - (st.k1 + st.k2 + 2);
            st.fire_bottom(p);
            if (middle > 1) st.fire_top(p);
        } else if (beta < gamma) {
            st.fire_bottom(p);
        } else {
            st.fire_top(p);
        }
    }
    if (stats) stats->iterations = st.iterations;

    WeightVector w;
    w.alpha = alpha;
    w.top_count = st.k2 + 1;
    w.bottom_count = st.k1 + 1;

    if (st.adjacent(n) && alpha >= st.alpha_max(n)) {
        w.weights.assign(n, 1.0 / static_cast<double>(n));
        return w;
    }

    w.weights.assign(p.begin(), p.end());
    const double top_weight = (st.top_sum - alpha) / static_cast<double>(st.k2 + 1);
    const double bottom_weight = (st.bottom_sum + alpha) / static_cast<double>(st.k1 + 1);
    std::fill_n(w.weights.begin(), st.k2 + 1, top_weight);
    std::fill(w.weights.end() - static_cast<std::ptrdiff_t>(st.k1 + 1), w.weights.end(),
              bottom_weight);
    return w;
}

} // namespace tvcode::merge
