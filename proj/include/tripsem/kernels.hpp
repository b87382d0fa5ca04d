#ifndef TRIPSEM_KERNELS_HPP
#define TRIPSEM_KERNELS_HPP

// Inner loops shared by numerics and the fitter. Each kernel exists twice:
// `serial` is the reference, `parallel` splits the outer loop with OpenMP.
// Every output element is accumulated in the same order in both versions,
// so their results are bitwise identical.

#include <cstddef>
#include <span>

namespace tripsem::kernels {

// Work (in multiply-adds) below which the parallel kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

int max_threads() noexcept;

namespace serial {

// y = A x, A row-major rows x cols.
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);

// C = A B, A is m x k, B is k x n, all row-major.
void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t m, std::size_t k, std::size_t n);

// Column-major panel `a` with `rows` rows. For each column j in
// [col_begin, col_end) apply I - tau v v^T to a(row_begin:, j); v holds
// rows - row_begin entries.
void apply_reflector(std::span<double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end,
                     std::span<const double> v, double tau);

// out[j - col_begin] = sum_{i >= row_begin} a(i, j)^2 for column-major `a`.
void column_sq_norms(std::span<const double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end, std::span<double> out);

}  // namespace serial

namespace parallel {

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);
void gemm(std::span<const double> a, std::span<const double> b, std::span<double> c,
          std::size_t m, std::size_t k, std::size_t n);
void apply_reflector(std::span<double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end,
                     std::span<const double> v, double tau);
void column_sq_norms(std::span<const double> a, std::size_t rows, std::size_t row_begin,
                     std::size_t col_begin, std::size_t col_end, std::span<double> out);

}  // namespace parallel

}  // namespace tripsem::kernels

#endif  // TRIPSEM_KERNELS_HPP
