// NEON variants for aarch64. NEON double lanes are 2 wide; there is no
// gather, so the spmv inner loop stays index-scalar with 2-wide fma.

#include "heatrec/kernels.hpp"

#include <arm_neon.h>

namespace heatrec::kernels {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void aypx_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(x + i), av, vld1q_f64(y + i)));
    for (; i < n; ++i) y[i] = x[i] + a * y[i];
}

void csr_spmv_neon(std::size_t rows, const std::int32_t* row_ptr,
                   const std::int32_t* col_idx, const double* vals,
                   const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        std::int32_t j = row_ptr[r];
        const std::int32_t end = row_ptr[r + 1];
        float64x2_t acc = vdupq_n_f64(0.0);
        for (; j + 2 <= end; j += 2) {
            const float64x2_t xv = {x[col_idx[j]], x[col_idx[j + 1]]};
            acc = vfmaq_f64(acc, vld1q_f64(vals + j), xv);
        }
        double s = vaddvq_f64(acc);
        for (; j < end; ++j) s += vals[j] * x[col_idx[j]];
        y[r] = s;
    }
}

} // namespace

const Backend* neon_backend_impl() {
    static const Backend backend{"neon", dot_neon, axpy_neon, aypx_neon,
                                 csr_spmv_neon};
    return &backend;
}

} // namespace heatrec::kernels
