// NEON kernel variants (float64x2, aarch64 only where NEON is baseline).

#include "tvcode/kernels.hpp"

#include <arm_neon.h>

namespace tvcode::kernels::neon {

double sum(const double* x, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) r += x[i];
    return r;
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) r += x[i] * y[i];
    return r;
}

double sum_abs_diff(const double* x, const double* y, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vaddq_f64(acc, vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) {
        double d = x[i] - y[i];
        r += d < 0 ? -d : d;
    }
    return r;
}

void clamp(const double* x, std::size_t n, double lo, double hi, double* out) noexcept {
    const float64x2_t vlo = vdupq_n_f64(lo);
    const float64x2_t vhi = vdupq_n_f64(hi);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(out + i, vmaxq_f64(vlo, vminq_f64(vhi, vld1q_f64(x + i))));
    for (; i < n; ++i) {
        double v = x[i];
        if (v < lo) v = lo;
        if (v > hi) v = hi;
        out[i] = v;
    }
}

std::pair<double, double> minmax(const double* x, std::size_t n) noexcept {
    std::size_t i = 0;
    double mn = x[0];
    double mx = x[0];
    if (n >= 2) {
        float64x2_t vmn = vld1q_f64(x);
        float64x2_t vmx = vmn;
        for (i = 2; i + 2 <= n; i += 2) {
            float64x2_t v = vld1q_f64(x + i);
            vmn = vminq_f64(vmn, v);
            vmx = vmaxq_f64(vmx, v);
        }
        mn = vminvq_f64(vmn);
        mx = vmaxvq_f64(vmx);
    }
    for (; i < n; ++i) {
        if (x[i] < mn) mn = x[i];
        if (x[i] > mx) mx = x[i];
    }
    return {mn, mx};
}

} // namespace tvcode::kernels::neon
