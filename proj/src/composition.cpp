#include "tripsem/composition.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <utility>

#include "tripsem/error.hpp"

namespace tripsem {

namespace {

void require_same_layout(const LexicalEntry& a, const LexicalEntry& b) {
  if (!(a.layout() == b.layout())) {
    throw DimensionError("cannot compose '" + a.token() + "' (" + to_string(a.layout()) + ") with '" +
                         b.token() + "' (" + to_string(b.layout()) + ")");
  }
}

void require_weight_shape(const DenseMatrix& w, std::size_t n, const char* name) {
  if (w.rows() != n || w.cols() != 2 * n) {
    throw DimensionError(std::string(name) + " must be " + std::to_string(n) + "x" +
                         std::to_string(2 * n) + ", got " + std::to_string(w.rows()) + "x" +
                         std::to_string(w.cols()));
  }
}

// Left (cols 0..n) or right (cols n..2n) n x n block of an n x 2n matrix.
DenseMatrix half(const DenseMatrix& w, std::size_t n, bool right) {
  DenseMatrix out(n, n);
  const std::size_t offset = right ? n : 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, offset + j);
  }
  return out;
}

Vector compose_value(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg) {
  const std::size_t n = a.layout().total();
  const Vector mavb = mat_vec(a.m().matrix(), b.v().values());
  const Vector mbva = mat_vec(b.m().matrix(), a.v().values());
  Vector out;
  if (cfg.w_v) {
    require_weight_shape(*cfg.w_v, n, "W_v");
    Vector stacked = mavb;
    stacked.insert(stacked.end(), mbva.begin(), mbva.end());
    out = mat_vec(*cfg.w_v, stacked);
  } else {
    out = vec_add(mavb, mbva);
  }
  if (cfg.nonlinearity == Nonlinearity::tanh_contrast) {
    for (double& x : out) x = std::tanh(x);
  }
  return out;
}

// W_M applied to the stacked pair [wa * M_a; wb * M_b].
DenseMatrix combine_matrices(const LexicalEntry& a, double wa, const LexicalEntry& b, double wb,
                             const CompositionConfig& cfg) {
  const std::size_t n = a.layout().total();
  DenseMatrix ma = wa == 1.0 ? a.m().matrix() : mat_scale(a.m().matrix(), wa);
  DenseMatrix mb = wb == 1.0 ? b.m().matrix() : mat_scale(b.m().matrix(), wb);
  if (!cfg.w_m) return mat_add(ma, mb);
  require_weight_shape(*cfg.w_m, n, "W_M");
  return mat_add(mat_mul(half(*cfg.w_m, n, false), ma), mat_mul(half(*cfg.w_m, n, true), mb));
}

std::string pair_label(const LexicalEntry& a, const LexicalEntry& b) {
  return "(" + a.token() + " " + b.token() + ")";
}

}  // namespace

LexicalEntry compose_baseline(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg) {
  require_same_layout(a, b);
  const auto& layout = a.layout();
  return LexicalEntry(pair_label(a, b), SemanticVector(compose_value(a, b, cfg), layout),
                      FunctionMatrix(combine_matrices(a, 1.0, b, 1.0, cfg), layout),
                      std::max(a.alpha(), b.alpha()));
}

LexicalEntry compose_improved(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg) {
  require_same_layout(a, b);
  const auto& layout = a.layout();
  const double z = a.alpha() + b.alpha();
  double wa = 0.5;
  double wb = 0.5;
  if (z > 0.0) {
    wa = a.alpha() / z;
    wb = b.alpha() / z;
  } else if (cfg.z_zero_policy == ZeroWeightPolicy::error) {
    throw DegenerateWeightsError("alpha weights of '" + a.token() + "' and '" + b.token() + "' sum to zero");
  }
  return LexicalEntry(pair_label(a, b), SemanticVector(compose_value(a, b, cfg), layout),
                      FunctionMatrix(combine_matrices(a, wa, b, wb, cfg), layout),
                      std::max(a.alpha(), b.alpha()));
}

LexicalEntry compose(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg) {
  return cfg.model == CompositionModel::improved ? compose_improved(a, b, cfg) : compose_baseline(a, b, cfg);
}

LexicalEntry compose_tree(const ParseTree& tree, const Lexicon& lexicon, const CompositionConfig& cfg) {
  if (tree.is_leaf()) return lexicon.at(tree.token());
  const auto& kids = tree.children();
  if (kids.size() == 1) return compose_tree(kids[0], lexicon, cfg);
  if (kids.size() != 2) {
    throw ArityError("node '" + tree.tag() + "' has " + std::to_string(kids.size()) +
                     " children; binarize the tree first");
  }
  const LexicalEntry left = compose_tree(kids[0], lexicon, cfg);
  const LexicalEntry right = compose_tree(kids[1], lexicon, cfg);
  return compose(left, right, cfg);
}

namespace {

// Subtrees at this depth or deeper are evaluated serially inside their task.
constexpr int kTaskDepth = 4;

LexicalEntry compose_tasks(const ParseTree& tree, const Lexicon& lexicon, const CompositionConfig& cfg,
                           int depth) {
  if (tree.is_leaf() || depth >= kTaskDepth) return compose_tree(tree, lexicon, cfg);
  const auto& kids = tree.children();
  if (kids.size() == 1) return compose_tasks(kids[0], lexicon, cfg, depth);
  if (kids.size() != 2) return compose_tree(tree, lexicon, cfg);  // raises ArityError

  std::optional<LexicalEntry> left;
  std::exception_ptr left_error;
#pragma omp task default(none) shared(left, left_error, kids, lexicon, cfg) firstprivate(depth)
  {
    try {
      left = compose_tasks(kids[0], lexicon, cfg, depth + 1);
    } catch (...) {
      left_error = std::current_exception();
    }
  }
  std::optional<LexicalEntry> right;
  std::exception_ptr right_error;
  try {
    right = compose_tasks(kids[1], lexicon, cfg, depth + 1);
  } catch (...) {
    right_error = std::current_exception();
  }
#pragma omp taskwait
  // Report the left error first, matching the serial evaluation order.
  if (left_error) std::rethrow_exception(left_error);
  if (right_error) std::rethrow_exception(right_error);
  return compose(*left, *right, cfg);
}

}  // namespace

LexicalEntry compose_tree_parallel(const ParseTree& tree, const Lexicon& lexicon,
                                   const CompositionConfig& cfg) {
  std::optional<LexicalEntry> result;
  std::exception_ptr error;
#pragma omp parallel default(none) shared(result, error, tree, lexicon, cfg)
  {
#pragma omp single
    {
      try {
        result = compose_tasks(tree, lexicon, cfg, 0);
      } catch (...) {
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return std::move(*result);
}

}  // namespace tripsem
