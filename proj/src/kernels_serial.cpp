#include "tripsem/kernels.hpp"

namespace tripsem::kernels::serial {

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = a.data() + i * cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* out = c.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      const double* brow = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) out[j] += aip * brow[j];
    }
  }
}

void apply_reflector(std::span<double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end,
                     std::span<const double> v, double tau) {
  if (tau == 0.0) return;
  const std::size_t len = rows - row_begin;
  for (std::size_t j = col_begin; j < col_end; ++j) {
    double* col = a.data() + j * rows + row_begin;
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += v[i] * col[i];
    s *= tau;
    for (std::size_t i = 0; i < len; ++i) col[i] -= s * v[i];
  }
}

void column_sq_norms(std::span<const double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end, std::span<double> out) {
  for (std::size_t j = col_begin; j < col_end; ++j) {
    const double* col = a.data() + j * rows;
    double s = 0.0;
    for (std::size_t i = row_begin; i < rows; ++i) s += col[i] * col[i];
    out[j - col_begin] = s;
  }
}

}  // namespace tripsem::kernels::serial
