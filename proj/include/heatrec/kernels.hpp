#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace heatrec::kernels {

/// Arithmetic primitives behind all solver hot loops (CG, Gauss-Newton,
/// banded Cholesky, residual-stack evaluation). A scalar reference
/// implementation always exists; wider variants (AVX2, NEON) are registered
/// when both the build and the host CPU support them, and are
/// equivalence-tested against the scalar reference.
struct Backend {
    const char* name;
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y += a*x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // y = x + a*y
    void (*aypx)(double a, const double* x, double* y, std::size_t n);
    // y = A*x for CSR A
    void (*csr_spmv)(std::size_t rows, const std::int32_t* row_ptr,
                     const std::int32_t* col_idx, const double* vals,
                     const double* x, double* y);
};

const Backend& scalar_backend();

/// All backends usable on this machine, scalar first.
const std::vector<const Backend*>& available_backends();

/// Currently selected backend. Defaults to the widest supported one; the
/// HEATREC_KERNELS environment variable ("scalar", "avx2", "neon") overrides
/// the default. Selection is per-process and deterministic.
const Backend& active_backend();

/// Force a backend by name. Throws std::invalid_argument if the name is not
/// available on this machine.
void set_active_backend(std::string_view name);

inline double dot(const double* x, const double* y, std::size_t n) {
    return active_backend().dot(x, y, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active_backend().axpy(a, x, y, n);
}
inline void aypx(double a, const double* x, double* y, std::size_t n) {
    active_backend().aypx(a, x, y, n);
}
inline void csr_spmv(std::size_t rows, const std::int32_t* row_ptr,
                     const std::int32_t* col_idx, const double* vals,
                     const double* x, double* y) {
    active_backend().csr_spmv(rows, row_ptr, col_idx, vals, x, y);
}

} // namespace heatrec::kernels
