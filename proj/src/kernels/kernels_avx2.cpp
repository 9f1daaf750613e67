// AVX2 variants of the arithmetic kernels. Compiled with -mavx2 -mfma on
// x86-64 only; selected at runtime after a cpuid check (see kernels.cpp).

#include "heatrec/kernels.hpp"

#include <immintrin.h>

namespace heatrec::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        i += 4;
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void aypx_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(av, yv, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] = x[i] + a * y[i];
}

void csr_spmv_avx2(std::size_t rows, const std::int32_t* row_ptr,
                   const std::int32_t* col_idx, const double* vals,
                   const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        std::int32_t j = row_ptr[r];
        const std::int32_t end = row_ptr[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; j + 4 <= end; j += 4) {
            __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col_idx + j));
            __m256d xv = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(vals + j), xv, acc);
        }
        double s = hsum(acc);
        for (; j < end; ++j) s += vals[j] * x[col_idx[j]];
        y[r] = s;
    }
}

} // namespace

const Backend* avx2_backend_impl() {
    static const Backend backend{"avx2", dot_avx2, axpy_avx2, aypx_avx2,
                                 csr_spmv_avx2};
    return &backend;
}

} // namespace heatrec::kernels
