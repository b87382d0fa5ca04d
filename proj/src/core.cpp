#include "tripsem/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tripsem/error.hpp"

namespace tripsem {

SegmentLayout::SegmentLayout(std::size_t d_domain, std::size_t d_stable, std::size_t d_inverted)
    : d_domain_(d_domain), d_stable_(d_stable), d_inverted_(d_inverted) {
  if (total() == 0) throw InvalidArgument("layout must have at least one dimension");
}

std::string to_string(const SegmentLayout& layout) {
  return std::to_string(layout.d_domain()) + "," + std::to_string(layout.d_stable()) + "," +
         std::to_string(layout.d_inverted());
}

namespace {

void require_layout(const SegmentLayout& a, const SegmentLayout& b, const char* what) {
  if (!(a == b)) {
    throw DimensionError(std::string(what) + ": layout " + to_string(a) + " vs " + to_string(b));
  }
}

void require_invertible(const SegmentLayout& layout) {
  if (layout.d_inverted() == 0) {
    throw DegenerateNegationError("negation needs at least one inverted dimension, layout is " +
                                  to_string(layout));
  }
}

}  // namespace

SemanticVector::SemanticVector(Vector values, SegmentLayout layout)
    : values_(std::move(values)), layout_(layout) {
  if (values_.size() != layout_.total()) {
    throw DimensionError("vector has " + std::to_string(values_.size()) + " entries, layout " +
                         to_string(layout_) + " needs " + std::to_string(layout_.total()));
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw InvalidArgument("semantic vector contains a non-finite value");
  }
}

SemanticVector SemanticVector::zero(const SegmentLayout& layout) {
  return SemanticVector(Vector(layout.total(), 0.0), layout);
}

std::span<const double> SemanticVector::domain() const {
  return std::span<const double>(values_).first(layout_.d_domain());
}

std::span<const double> SemanticVector::stable() const {
  return std::span<const double>(values_).subspan(layout_.d_domain(), layout_.d_stable());
}

std::span<const double> SemanticVector::inverted() const {
  return std::span<const double>(values_).subspan(layout_.inverted_begin(), layout_.d_inverted());
}

std::span<const double> SemanticVector::value() const {
  return std::span<const double>(values_).subspan(layout_.d_domain(), layout_.d_value());
}

bool SemanticVector::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

FunctionMatrix::FunctionMatrix(DenseMatrix entries, SegmentLayout layout)
    : matrix_(std::move(entries)), layout_(layout) {
  if (matrix_.rows() != layout_.total() || matrix_.cols() != layout_.total()) {
    throw DimensionError("function matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", layout " + to_string(layout_) +
                         " needs " + std::to_string(layout_.total()) + "x" +
                         std::to_string(layout_.total()));
  }
  for (double x : matrix_.entries()) {
    if (!std::isfinite(x)) throw InvalidArgument("function matrix contains a non-finite value");
  }
}

FunctionMatrix FunctionMatrix::identity(const SegmentLayout& layout) {
  return FunctionMatrix(DenseMatrix::identity(layout.total()), layout);
}

FunctionMatrix FunctionMatrix::zero(const SegmentLayout& layout) {
  return FunctionMatrix(DenseMatrix(layout.total(), layout.total()), layout);
}

NegationOperator::NegationOperator(double mu, SegmentLayout layout) : mu_(mu), layout_(layout) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw InvalidArgument("negation scale mu must lie in (0, 1], got " + std::to_string(mu));
  }
}

LexicalEntry::LexicalEntry(std::string token, SemanticVector v, FunctionMatrix m, double alpha)
    : token_(std::move(token)), v_(std::move(v)), m_(std::move(m)), alpha_(alpha) {
  require_layout(v_.layout(), m_.layout(), "lexical entry");
  if (!std::isfinite(alpha_) || alpha_ < 0.0) {
    throw InvalidArgument("alpha for '" + token_ + "' must be finite and >= 0");
  }
}

LexicalEntry LexicalEntry::with_token(std::string token) const {
  return LexicalEntry(std::move(token), v_, m_, alpha_);
}

LexicalEntry LexicalEntry::with_matrix(FunctionMatrix m) const {
  return LexicalEntry(token_, v_, std::move(m), alpha_);
}

FunctionMatrix make_negation_matrix(const NegationOperator& op) {
  const auto& layout = op.layout();
  Vector diag(layout.total(), 1.0);
  for (std::size_t i = layout.inverted_begin(); i < layout.total(); ++i) diag[i] = -op.mu();
  return FunctionMatrix(DenseMatrix::diagonal(diag), layout);
}

SemanticVector negate_vector(const SemanticVector& v, const NegationOperator& op) {
  require_layout(v.layout(), op.layout(), "negate_vector");
  require_invertible(op.layout());
  Vector out = v.values();
  for (std::size_t i = op.layout().inverted_begin(); i < out.size(); ++i) out[i] *= -op.mu();
  return SemanticVector(std::move(out), v.layout());
}

SemanticVector invert_vector(const SemanticVector& v, const SegmentLayout& layout) {
  return negate_vector(v, NegationOperator(1.0, layout));
}

Segments split_segments(const SemanticVector& v) {
  auto copy = [](std::span<const double> s) { return Vector(s.begin(), s.end()); };
  return {copy(v.domain()), copy(v.stable()), copy(v.inverted())};
}

Vector concat(const Segments& s) {
  Vector out;
  out.reserve(s.domain.size() + s.stable.size() + s.inverted.size());
  out.insert(out.end(), s.domain.begin(), s.domain.end());
  out.insert(out.end(), s.stable.begin(), s.stable.end());
  out.insert(out.end(), s.inverted.begin(), s.inverted.end());
  return out;
}

}  // namespace tripsem
