#include "heatrec/kernels.hpp"

namespace heatrec::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void aypx_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + a * y[i];
}

void csr_spmv_scalar(std::size_t rows, const std::int32_t* row_ptr,
                     const std::int32_t* col_idx, const double* vals,
                     const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        double s = 0.0;
        for (std::int32_t j = row_ptr[r]; j < row_ptr[r + 1]; ++j)
            s += vals[j] * x[col_idx[j]];
        y[r] = s;
    }
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", dot_scalar, axpy_scalar, aypx_scalar,
                                 csr_spmv_scalar};
    return backend;
}

} // namespace heatrec::kernels
