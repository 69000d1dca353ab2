#include "tvcode/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tvcode::kernels {

namespace scalar {

double sum(const double* x, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_abs_diff(const double* x, const double* y, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::abs(x[i] - y[i]);
    return acc;
}

void clamp(const double* x, std::size_t n, double lo, double hi, double* out) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        double v = x[i];
        if (v < lo) v = lo;
        if (v > hi) v = hi;
        out[i] = v;
    }
}

std::pair<double, double> minmax(const double* x, std::size_t n) noexcept {
    double mn = x[0];
    double mx = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] < mn) mn = x[i];
        if (x[i] > mx) mx = x[i];
    }
    return {mn, mx};
}

} // namespace scalar

namespace {

struct Backend {
    std::string_view name;
    double (*sum)(const double*, std::size_t) noexcept;
    double (*dot)(const double*, const double*, std::size_t) noexcept;
    double (*sum_abs_diff)(const double*, const double*, std::size_t) noexcept;
    void (*clamp)(const double*, std::size_t, double, double, double*) noexcept;
    std::pair<double, double> (*minmax)(const double*, std::size_t) noexcept;
};

constexpr Backend kScalarBackend{"scalar",        scalar::sum,   scalar::dot,
                                 scalar::sum_abs_diff, scalar::clamp, scalar::minmax};

#if defined(TVCODE_HAVE_AVX2)
constexpr Backend kAvx2Backend{"avx2",        avx2::sum,   avx2::dot,
                               avx2::sum_abs_diff, avx2::clamp, avx2::minmax};

bool avx2_supported() noexcept {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}
#endif

#if defined(TVCODE_HAVE_NEON)
// float64 NEON is baseline on aarch64; no runtime probe needed.
constexpr Backend kNeonBackend{"neon",        neon::sum,   neon::dot,
                               neon::sum_abs_diff, neon::clamp, neon::minmax};
#endif

const Backend* detect_backend() noexcept {
#if defined(TVCODE_HAVE_AVX2)
    if (avx2_supported()) return &kAvx2Backend;
#endif
#if defined(TVCODE_HAVE_NEON)
    return &kNeonBackend;
#endif
    return &kScalarBackend;
}

std::atomic<const Backend*>& active_slot() noexcept {
    static std::atomic<const Backend*> current{detect_backend()};
    return current;
}

const Backend* active() noexcept {
    return active_slot().load(std::memory_order_relaxed);
}

} // namespace

double sum(std::span<const double> x) noexcept {
    return active()->sum(x.data(), x.size());
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    assert(x.size() == y.size());
    return active()->dot(x.data(), y.data(), x.size());
}

double sum_abs_diff(std::span<const double> x, std::span<const double> y) noexcept {
    assert(x.size() == y.size());
    return active()->sum_abs_diff(x.data(), y.data(), x.size());
}

void clamp(std::span<const double> x, double lo, double hi, std::span<double> out) noexcept {
    assert(x.size() == out.size());
    active()->clamp(x.data(), x.size(), lo, hi, out.data());
}

std::pair<double, double> minmax(std::span<const double> x) noexcept {
    assert(!x.empty());
    return active()->minmax(x.data(), x.size());
}

std::string_view active_backend() noexcept { return active()->name; }

void use_backend(std::string_view name) {
    if (name == "scalar") {
        active_slot().store(&kScalarBackend, std::memory_order_relaxed);
        return;
    }
#if defined(TVCODE_HAVE_AVX2)
    if (name == "avx2") {
        if (!avx2_supported())
            throw std::invalid_argument("avx2 backend not supported on this cpu");
        active_slot().store(&kAvx2Backend, std::memory_order_relaxed);
        return;
    }
#endif
#if defined(TVCODE_HAVE_NEON)
    if (name == "neon") {
        active_slot().store(&kNeonBackend, std::memory_order_relaxed);
        return;
    }
#endif
    throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

} // namespace tvcode::kernels
