#ifndef TRIPSEM_CORE_HPP
#define TRIPSEM_CORE_HPP

// Tripartite word representation: a semantic vector laid out as
// [domain | stable value | inverted value], a function matrix, and a
// propagation weight alpha.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tripsem/numerics.hpp"

namespace tripsem {

class SegmentLayout {
 public:
  SegmentLayout(std::size_t d_domain, std::size_t d_stable, std::size_t d_inverted);

  std::size_t d_domain() const noexcept { return d_domain_; }
  std::size_t d_stable() const noexcept { return d_stable_; }
  std::size_t d_inverted() const noexcept { return d_inverted_; }
  std::size_t d_value() const noexcept { return d_stable_ + d_inverted_; }
  std::size_t total() const noexcept { return d_domain_ + d_stable_ + d_inverted_; }

  // Index of the first inverted dimension.
  std::size_t inverted_begin() const noexcept { return d_domain_ + d_stable_; }

  bool operator==(const SegmentLayout&) const = default;

 private:
  std::size_t d_domain_;
  std::size_t d_stable_;
  std::size_t d_inverted_;
};

std::string to_string(const SegmentLayout& layout);

class SemanticVector {
 public:
  SemanticVector(Vector values, SegmentLayout layout);
  static SemanticVector zero(const SegmentLayout& layout);

  const Vector& values() const noexcept { return values_; }
  const SegmentLayout& layout() const noexcept { return layout_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<const double> domain() const;
  std::span<const double> stable() const;
  std::span<const double> inverted() const;
  // Stable and inverted segments together.
  std::span<const double> value() const;

  bool is_zero() const noexcept;
  bool operator==(const SemanticVector&) const = default;

 private:
  Vector values_;
  SegmentLayout layout_;
};

class FunctionMatrix {
 public:
  FunctionMatrix(DenseMatrix entries, SegmentLayout layout);
  static FunctionMatrix identity(const SegmentLayout& layout);
  static FunctionMatrix zero(const SegmentLayout& layout);

  const DenseMatrix& matrix() const noexcept { return matrix_; }
  const SegmentLayout& layout() const noexcept { return layout_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  bool operator==(const FunctionMatrix&) const = default;

 private:
  DenseMatrix matrix_;
  SegmentLayout layout_;
};

/// Scaling factor mu in (0, 1] for the inverted segment. mu == 1 is plain
/// inversion; mu < 1 is diminutive negation.
class NegationOperator {
 public:
  NegationOperator(double mu, SegmentLayout layout);

  double mu() const noexcept { return mu_; }
  const SegmentLayout& layout() const noexcept { return layout_; }

 private:
  double mu_;
  SegmentLayout layout_;
};

class LexicalEntry {
 public:
  LexicalEntry(std::string token, SemanticVector v, FunctionMatrix m, double alpha);

  const std::string& token() const noexcept { return token_; }
  const SemanticVector& v() const noexcept { return v_; }
  const FunctionMatrix& m() const noexcept { return m_; }
  double alpha() const noexcept { return alpha_; }
  const SegmentLayout& layout() const noexcept { return v_.layout(); }

  LexicalEntry with_token(std::string token) const;
  LexicalEntry with_matrix(FunctionMatrix m) const;

  bool operator==(const LexicalEntry&) const = default;

 private:
  std::string token_;
  SemanticVector v_;
  FunctionMatrix m_;
  double alpha_;
};

/// diag(1, ..., 1, -mu, ..., -mu) with the -mu entries on the inverted segment.
FunctionMatrix make_negation_matrix(const NegationOperator& op);

SemanticVector negate_vector(const SemanticVector& v, const NegationOperator& op);
SemanticVector invert_vector(const SemanticVector& v, const SegmentLayout& layout);

struct Segments {
  Vector domain;
  Vector stable;
  Vector inverted;
};

Segments split_segments(const SemanticVector& v);
Vector concat(const Segments& s);

}  // namespace tripsem

#endif  // TRIPSEM_CORE_HPP
