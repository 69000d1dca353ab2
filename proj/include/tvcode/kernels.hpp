#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

// Data-parallel inner loops shared by the numeric modules. Every kernel has
// a scalar reference implementation that defines the semantics; SIMD
// variants must match it up to floating-point reassociation and are
// selected once at runtime from CPU capabilities. Transcendental sums
// (entropy, KL, Kraft) are deliberately not vectorized: the acceptance
// tolerances require libm-accurate log/exp.

namespace tvcode::kernels {

namespace scalar {
double sum(const double* x, std::size_t n) noexcept;
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sum_abs_diff(const double* x, const double* y, std::size_t n) noexcept;
void clamp(const double* x, std::size_t n, double lo, double hi, double* out) noexcept;
std::pair<double, double> minmax(const double* x, std::size_t n) noexcept; // n >= 1
} // namespace scalar

#if defined(TVCODE_HAVE_AVX2)
namespace avx2 {
double sum(const double* x, std::size_t n) noexcept;
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sum_abs_diff(const double* x, const double* y, std::size_t n) noexcept;
void clamp(const double* x, std::size_t n, double lo, double hi, double* out) noexcept;
std::pair<double, double> minmax(const double* x, std::size_t n) noexcept;
} // namespace avx2
#endif

#if defined(TVCODE_HAVE_NEON)
namespace neon {
double sum(const double* x, std::size_t n) noexcept;
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sum_abs_diff(const double* x, const double* y, std::size_t n) noexcept;
void clamp(const double* x, std::size_t n, double lo, double hi, double* out) noexcept;
std::pair<double, double> minmax(const double* x, std::size_t n) noexcept;
} // namespace neon
#endif

// Dispatched entry points.
double sum(std::span<const double> x) noexcept;
double dot(std::span<const double> x, std::span<const double> y) noexcept;
double sum_abs_diff(std::span<const double> x, std::span<const double> y) noexcept;
void clamp(std::span<const double> x, double lo, double hi, std::span<double> out) noexcept;
std::pair<double, double> minmax(std::span<const double> x) noexcept;

// Name of the backend the dispatcher resolved to: "avx2", "neon" or "scalar".
std::string_view active_backend() noexcept;

// Force a specific backend ("scalar", "avx2", "neon"). Throws
// std::invalid_argument if the backend is unknown or unavailable on this
// machine. Intended for tests and benchmarking.
void use_backend(std::string_view name);

} // namespace tvcode::kernels
