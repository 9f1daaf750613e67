#include "heatrec/sparse.hpp"

#include "heatrec/errors.hpp"
#include "heatrec/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace heatrec {

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    assert(static_cast<std::int32_t>(x.size()) == cols);
    assert(static_cast<std::int32_t>(y.size()) == rows);
    kernels::csr_spmv(static_cast<std::size_t>(rows), row_ptr.data(),
                      col_idx.data(), vals.data(), x.data(), y.data());
}

std::vector<double> CsrMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(static_cast<std::size_t>(rows));
    multiply(x, y);
    return y;
}

double CsrMatrix::at(std::int32_t r, std::int32_t c) const {
    const auto* begin = col_idx.data() + row_ptr[r];
    const auto* end = col_idx.data() + row_ptr[r + 1];
    const auto* it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) return 0.0;
    return vals[static_cast<std::size_t>(it - col_idx.data())];
}

void CsrMatrix::add_at(std::int32_t r, std::int32_t c, double v) {
    const auto* begin = col_idx.data() + row_ptr[r];
    const auto* end = col_idx.data() + row_ptr[r + 1];
    const auto* it = std::lower_bound(begin, end, c);
    if (it == end || *it != c)
        throw Error("CsrMatrix::add_at: entry outside assembled pattern");
    vals[static_cast<std::size_t>(it - col_idx.data())] += v;
}

CsrMatrix CsrMatrix::transposed() const {
    CsrMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.row_ptr.assign(static_cast<std::size_t>(cols) + 1, 0);
    for (std::int32_t c : col_idx) t.row_ptr[static_cast<std::size_t>(c) + 1]++;
    for (std::size_t i = 1; i < t.row_ptr.size(); ++i) t.row_ptr[i] += t.row_ptr[i - 1];
    t.col_idx.resize(col_idx.size());
    t.vals.resize(vals.size());
    std::vector<std::int32_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (std::int32_t r = 0; r < rows; ++r) {
        for (std::int32_t j = row_ptr[r]; j < row_ptr[r + 1]; ++j) {
            const std::int32_t pos = next[col_idx[j]]++;
            t.col_idx[pos] = r;
            t.vals[pos] = vals[j];
        }
    }
    return t;
}

double CsrMatrix::max_abs() const {
    double m = 0.0;
    for (double v : vals) m = std::max(m, std::abs(v));
    return m;
}

CsrMatrix csr_from_adjacency(std::int32_t rows, std::int32_t cols,
                             std::vector<std::vector<std::int32_t>> adjacency) {
    assert(static_cast<std::int32_t>(adjacency.size()) == rows);
    CsrMatrix a;
    a.rows = rows;
    a.cols = cols;
    a.row_ptr.resize(static_cast<std::size_t>(rows) + 1);
    a.row_ptr[0] = 0;
    std::int64_t nnz = 0;
    for (auto& row : adjacency) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        nnz += static_cast<std::int64_t>(row.size());
    }
    a.col_idx.reserve(static_cast<std::size_t>(nnz));
    for (std::int32_t r = 0; r < rows; ++r) {
        a.col_idx.insert(a.col_idx.end(), adjacency[r].begin(), adjacency[r].end());
        a.row_ptr[static_cast<std::size_t>(r) + 1] =
            static_cast<std::int32_t>(a.col_idx.size());
    }
    a.vals.assign(a.col_idx.size(), 0.0);
    return a;
}

double asymmetry_inf_norm(const CsrMatrix& a) {
    const CsrMatrix t = a.transposed();
    double m = 0.0;
    for (std::int32_t r = 0; r < a.rows; ++r) {
        for (std::int32_t j = a.row_ptr[r]; j < a.row_ptr[r + 1]; ++j)
            m = std::max(m, std::abs(a.vals[j] - t.at(r, a.col_idx[j])));
    }
    return m;
}

} // namespace heatrec
