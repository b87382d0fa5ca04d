#ifndef TRIPSEM_NUMERICS_HPP
#define TRIPSEM_NUMERICS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace tripsem {

using Vector = std::vector<double>;

/// Dense real matrix in row-major order. Entries are finite on construction;
/// the mutable accessors are intended for builders that fill a zeroed matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return entries_; }
  std::span<double> entries() noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Vector mat_vec(const DenseMatrix& m, std::span<const double> v);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_scale(const DenseMatrix& a, double s);

/// Stacks matrices with equal column counts top to bottom.
DenseMatrix block_vstack(std::span<const DenseMatrix> blocks);
/// Places matrices with equal row counts side by side.
DenseMatrix block_hstack(std::span<const DenseMatrix> blocks);

Vector vec_add(std::span<const double> u, std::span<const double> v);
Vector vec_sub(std::span<const double> u, std::span<const double> v);
double dot(std::span<const double> u, std::span<const double> v);
double norm2(std::span<const double> v);
double frobenius_norm(const DenseMatrix& m);

/// dot(u,v) / (|u| |v|), clamped to [-1, 1]. Throws UndefinedSimilarityError
/// when both arguments are zero; returns 0 when exactly one is zero.
double cosine(std::span<const double> u, std::span<const double> v);

struct LeastSquaresSolution {
  Vector solution;
  double residual_norm = 0.0;
  std::size_t rank = 0;
};

/// Minimizes |design * x - targets|_2 with a column-pivoted Householder QR.
/// Columns whose pivot falls below 1e-10 * |R(0,0)| are treated as dependent,
/// and the minimum-norm minimizer is returned via a complete orthogonal
/// decomposition. residual_norm is evaluated against the original system.
LeastSquaresSolution least_squares(const DenseMatrix& design, std::span<const double> targets);

inline constexpr double kRankTolerance = 1e-10;

}  // namespace tripsem

#endif  // TRIPSEM_NUMERICS_HPP
