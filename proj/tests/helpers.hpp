#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

// Shared test utilities: deterministic random instances, frozen reference
// values (computed once with 50-digit arithmetic), and slow bisection
// solvers for the water levels that stay independent of the closed-form
// implementations they check.

namespace tvtest {

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random distribution, strictly positive, exactly normalized by its sum.
// grid = true draws from a small integer lattice to force tied entries.
inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n,
                                               bool grid = false) {
    std::vector<double> p(n);
    double total = 0.0;
    if (grid) {
        for (auto& v : p) total += (v = 1.0 + static_cast<double>(rng() % 8));
    } else {
        for (auto& v : p) total += (v = -std::log1p(-unit(rng)) + 1e-9);
    }
    for (auto& v : p) v /= total;
    return p;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double filled_below(std::span<const double> p, double w) {
    double s = 0.0;
    for (double v : p) s += std::max(0.0, w - v);
    return s;
}

inline double shed_above(std::span<const double> p, double w) {
    double s = 0.0;
    for (double v : p) s += std::max(0.0, v - w);
    return s;
}

// Bisection references for the level equations; call with alpha > 0 (the
// equations are degenerate at alpha = 0).
inline double bisect_lower_level(std::span<const double> p, double alpha) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (filled_below(p, mid) < alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double bisect_upper_level(std::span<const double> p, double alpha) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (shed_above(p, mid) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// The worked 4- and 5-symbol sources, in internal (sorted) order.
inline const std::vector<double> kMu4{8.0 / 15, 4.0 / 15, 2.0 / 15, 1.0 / 15};
inline const std::vector<double> kMu4Caller{1.0 / 15, 8.0 / 15, 2.0 / 15, 4.0 / 15};
inline const std::vector<double> kMu5{16.0 / 31, 8.0 / 31, 4.0 / 31, 2.0 / 31, 1.0 / 31};
inline const std::vector<double> kW4{7.0 / 15, 4.0 / 15, 2.0 / 15, 2.0 / 15};

// Frozen high-precision references.
inline constexpr double kEntropyMu4Base2 = 1.6402239289418519;
inline constexpr double kEntropyW4Base2 = 1.7967916319816366;
inline const std::vector<double> kLenW4{1.0995356735509145, 1.9068905956085185,
                                        2.9068905956085187, 2.9068905956085187};
inline constexpr double kKlHalfVsQuarter = 0.14384103622589045; // ln terms in nats
inline constexpr double kTvMu4Uniform = 0.6;
inline constexpr double kKlMu4UniformNats = 0.24937776928688993;
inline constexpr double kKlUniformMu4Nats = 0.28203506914240151;
inline constexpr double kAlphaMax4 = 0.3;        // two-group meeting point
inline constexpr double kAlphaMax5 = 58.0 / 155; // trace of the 5-symbol schedule

} // namespace tvtest
