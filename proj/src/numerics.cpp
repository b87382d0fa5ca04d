#include "tripsem/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tripsem/error.hpp"
#include "tripsem/kernels.hpp"

namespace tripsem {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double x : values) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " contains a non-finite value");
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_same_length(std::span<const double> u, std::span<const double> v, const char* op) {
  if (u.size() != v.size()) {
    throw DimensionError(std::string(op) + ": length " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " given " + std::to_string(entries_.size()) + " entries");
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  require_finite(diag, "diagonal");
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector mat_vec(const DenseMatrix& m, std::span<const double> v) {
  if (m.cols() != v.size()) {
    throw DimensionError("mat_vec: matrix has " + std::to_string(m.cols()) +
                         " columns, vector has " + std::to_string(v.size()) + " entries");
  }
  Vector out(m.rows());
  kernels::parallel::gemv(m.entries(), m.rows(), m.cols(), v, out);
  return out;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()));
  }
  DenseMatrix c(a.rows(), b.cols());
  kernels::parallel::gemm(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(), b.cols());
  return c;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "mat_add");
  DenseMatrix c(a.rows(), a.cols());
  auto out = c.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] + b.entries()[i];
  return c;
}

DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "mat_sub");
  DenseMatrix c(a.rows(), a.cols());
  auto out = c.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] - b.entries()[i];
  return c;
}

DenseMatrix mat_scale(const DenseMatrix& a, double s) {
  if (!std::isfinite(s)) throw InvalidArgument("mat_scale: non-finite scale");
  DenseMatrix c(a.rows(), a.cols());
  auto out = c.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.entries()[i];
  return c;
}

DenseMatrix block_vstack(std::span<const DenseMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("block_vstack: column counts differ");
    rows += b.rows();
  }
  std::vector<double> entries;
  entries.reserve(rows * cols);
  for (const auto& b : blocks) entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return DenseMatrix(rows, cols, std::move(entries));
}

DenseMatrix block_hstack(std::span<const DenseMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("block_hstack: row counts differ");
    cols += b.cols();
  }
  DenseMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
    }
    offset += b.cols();
  }
  return out;
}

Vector vec_add(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v, "vec_add");
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

Vector vec_sub(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v, "vec_sub");
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

double dot(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v, "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

double norm2(std::span<const double> v) {
  // Scaled accumulation keeps tiny and huge entries from under/overflowing.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : v) {
    const double y = x / scale;
    acc += y * y;
  }
  return scale * std::sqrt(acc);
}

double frobenius_norm(const DenseMatrix& m) { return norm2(m.entries()); }

double cosine(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v, "cosine");
  const double nu = norm2(u);
  const double nv = norm2(v);
  if (nu == 0.0 && nv == 0.0) throw UndefinedSimilarityError("cosine of two zero vectors");
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += (u[i] / nu) * (v[i] / nv);
  return std::clamp(acc, -1.0, 1.0);
}

namespace {

// Householder vector for x = (alpha, tail): returns tau and beta and scales
// tail in place so that v = (1, tail) and (I - tau v v^T) x = (beta, 0).
struct Reflector {
  double tau = 0.0;
  double beta = 0.0;
};

Reflector make_reflector(double alpha, std::span<double> tail) {
  const double tail_norm = norm2(tail);
  if (tail_norm == 0.0) return {0.0, alpha};
  const double r = std::hypot(alpha, tail_norm);
  const double beta = alpha >= 0.0 ? -r : r;
  const double inv = 1.0 / (alpha - beta);
  for (double& t : tail) t *= inv;
  return {(beta - alpha) / beta, beta};
}

}  // namespace

LeastSquaresSolution least_squares(const DenseMatrix& design, std::span<const double> targets) {
  const std::size_t m = design.rows();
  const std::size_t n = design.cols();
  if (m == 0) throw DimensionError("least_squares: design has no rows");
  if (targets.size() != m) {
    throw DimensionError("least_squares: " + std::to_string(m) + " rows but " +
                         std::to_string(targets.size()) + " targets");
  }
  require_finite(targets, "targets");

  // Column-major working copy; perm[k] is the original column now at k.
  std::vector<double> a(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j * m + i] = design(i, j);
  }
  Vector qtb(targets.begin(), targets.end());
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;

  const std::size_t steps = std::min(m, n);
  std::vector<double> norms(n);
  std::vector<double> v(m);
  std::size_t rank = 0;
  double pivot_scale = 0.0;

  for (std::size_t k = 0; k < steps; ++k) {
    kernels::parallel::column_sq_norms(a, m, k, k, n, norms);
    std::size_t best = k;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (norms[j - k] > norms[best - k]) best = j;
    }
    const double best_norm = std::sqrt(norms[best - k]);
    if (k == 0) pivot_scale = best_norm;
    if (best_norm == 0.0 || best_norm <= kRankTolerance * pivot_scale) break;
    if (best != k) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(k * m),
                       a.begin() + static_cast<std::ptrdiff_t>((k + 1) * m),
                       a.begin() + static_cast<std::ptrdiff_t>(best * m));
      std::swap(perm[k], perm[best]);
    }

    double* col = a.data() + k * m;
    const auto refl = make_reflector(col[k], std::span<double>(col + k + 1, m - k - 1));
    v[0] = 1.0;
    std::copy(col + k + 1, col + m, v.begin() + 1);
    const std::span<const double> vk(v.data(), m - k);
    kernels::parallel::apply_reflector(a, m, k, k + 1, n, vk, refl.tau);
    kernels::serial::apply_reflector(qtb, m, k, 0, 1, vk, refl.tau);
    col[k] = refl.beta;
    for (std::size_t i = k + 1; i < m; ++i) col[i] = 0.0;
    ++rank;
  }

  auto r = [&](std::size_t i, std::size_t j) -> double& { return a[j * m + i]; };

  // Complete orthogonal step: reduce the trapezoid [R11 R12] to [T 0] with
  // reflectors acting from the right, each touching column k and columns rank..n-1.
  std::vector<double> rz_tau(rank, 0.0);
  std::vector<std::vector<double>> rz_vec(rank);
  if (rank < n) {
    const std::size_t extra = n - rank;
    for (std::size_t kk = rank; kk-- > 0;) {
      std::vector<double> tail(extra);
      for (std::size_t t = 0; t < extra; ++t) tail[t] = r(kk, rank + t);
      const auto refl = make_reflector(r(kk, kk), tail);
      rz_tau[kk] = refl.tau;
      rz_vec[kk] = tail;
      r(kk, kk) = refl.beta;
      for (std::size_t t = 0; t < extra; ++t) r(kk, rank + t) = 0.0;
      if (refl.tau == 0.0) continue;
      for (std::size_t i = 0; i < kk; ++i) {
        double s = r(i, kk);
        for (std::size_t t = 0; t < extra; ++t) s += r(i, rank + t) * tail[t];
        s *= refl.tau;
        r(i, kk) -= s;
        for (std::size_t t = 0; t < extra; ++t) r(i, rank + t) -= s * tail[t];
      }
    }
  }

  // Back substitution on the leading rank x rank triangle.
  Vector y(n, 0.0);
  for (std::size_t kk = rank; kk-- > 0;) {
    double s = qtb[kk];
    for (std::size_t j = kk + 1; j < rank; ++j) s -= r(kk, j) * y[j];
    y[kk] = s / r(kk, kk);
  }

  // Undo the right reflectors (first to last) to land in the row space.
  for (std::size_t kk = 0; kk < rank && rank < n; ++kk) {
    if (rz_tau[kk] == 0.0) continue;
    const auto& tail = rz_vec[kk];
    double s = y[kk];
    for (std::size_t t = 0; t < tail.size(); ++t) s += tail[t] * y[rank + t];
    s *= rz_tau[kk];
    y[kk] -= s;
    for (std::size_t t = 0; t < tail.size(); ++t) y[rank + t] -= s * tail[t];
  }

  LeastSquaresSolution out;
  out.solution.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) out.solution[perm[j]] = y[j] + 0.0;
  out.rank = rank;

  Vector fitted(m);
  kernels::parallel::gemv(design.entries(), m, n, out.solution, fitted);
  for (std::size_t i = 0; i < m; ++i) fitted[i] -= targets[i];
  out.residual_norm = norm2(fitted);
  return out;
}

}  // namespace tripsem
