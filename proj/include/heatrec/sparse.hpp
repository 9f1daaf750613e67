#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace heatrec {

/// Compressed-row sparse matrix with sorted column indices per row.
/// Symmetric matrices (C, K, K_base) are assembled symmetrically so that
/// A == A^T holds bitwise; nothing in the storage enforces it.
struct CsrMatrix {
    std::int32_t rows = 0;
    std::int32_t cols = 0;
    std::vector<std::int32_t> row_ptr{0};
    std::vector<std::int32_t> col_idx;
    std::vector<double> vals;

    std::int64_t nnz() const { return static_cast<std::int64_t>(col_idx.size()); }

    // y = A x
    void multiply(std::span<const double> x, std::span<double> y) const;
    std::vector<double> multiply(std::span<const double> x) const;

    // returns 0 if (r,c) is not in the pattern
    double at(std::int32_t r, std::int32_t c) const;
    // throws if (r,c) is not in the pattern
    void add_at(std::int32_t r, std::int32_t c, double v);

    CsrMatrix transposed() const;
    double max_abs() const;

    std::span<const std::int32_t> row_cols(std::int32_t r) const {
        return {col_idx.data() + row_ptr[r],
                static_cast<std::size_t>(row_ptr[r + 1] - row_ptr[r])};
    }
    std::span<const double> row_vals(std::int32_t r) const {
        return {vals.data() + row_ptr[r],
                static_cast<std::size_t>(row_ptr[r + 1] - row_ptr[r])};
    }
};

/// Build a CSR matrix from an adjacency list (pattern only, values zeroed).
/// Each adjacency row is sorted and deduplicated.
CsrMatrix csr_from_adjacency(std::int32_t rows, std::int32_t cols,
                             std::vector<std::vector<std::int32_t>> adjacency);

/// max_i |(A - A^T)_ij| -- test helper for the symmetry invariant.
double asymmetry_inf_norm(const CsrMatrix& a);

} // namespace heatrec
