#include "tripsem/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tripsem::kernels {

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (rows * cols > kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t m, std::size_t k, std::size_t n) {
  const auto mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (m * k * n > kParallelThreshold)
  for (std::int64_t i = 0; i < mm; ++i) {
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
  if (tau == 0.0 || col_end <= col_begin) return;
  const std::size_t len = rows - row_begin;
  const auto first = static_cast<std::int64_t>(col_begin);
  const auto last = static_cast<std::int64_t>(col_end);
#pragma omp parallel for schedule(static) if (len * (col_end - col_begin) > kParallelThreshold)
  for (std::int64_t j = first; j < last; ++j) {
    double* col = a.data() + j * rows + row_begin;
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += v[i] * col[i];
    s *= tau;
    for (std::size_t i = 0; i < len; ++i) col[i] -= s * v[i];
  }
}

void column_sq_norms(std::span<const double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end, std::span<double> out) {
  if (col_end <= col_begin) return;
  const auto first = static_cast<std::int64_t>(col_begin);
  const auto last = static_cast<std::int64_t>(col_end);
#pragma omp parallel for schedule(static) if ((rows - row_begin) * (col_end - col_begin) > kParallelThreshold)
  for (std::int64_t j = first; j < last; ++j) {
    const double* col = a.data() + j * rows;
    double s = 0.0;
    for (std::size_t i = row_begin; i < rows; ++i) s += col[i] * col[i];
    out[j - first] = s;
  }
}

}  // namespace parallel
}  // namespace tripsem::kernels
