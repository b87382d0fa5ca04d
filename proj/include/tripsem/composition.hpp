#ifndef TRIPSEM_COMPOSITION_HPP
#define TRIPSEM_COMPOSITION_HPP

#include <optional>

#include "tripsem/core.hpp"
#include "tripsem/lexicon.hpp"
#include "tripsem/treeio.hpp"

namespace tripsem {

enum class CompositionModel { baseline, improved };

// tanh_contrast exists for demonstrations only; every invariant assumes identity.
enum class Nonlinearity { identity, tanh_contrast };

// What the weighted step does when alpha_a + alpha_b == 0.
enum class ZeroWeightPolicy { error, equal_weights };

/// Composition parameters. Empty w_v / w_m stand for [I I]; a supplied
/// matrix must be n x 2n. W_M = [P Q] acts blockwise on the stacked pair:
/// M_p = P M_a + Q M_b.
struct CompositionConfig {
  CompositionModel model = CompositionModel::baseline;
  Nonlinearity nonlinearity = Nonlinearity::identity;
  std::optional<DenseMatrix> w_v;
  std::optional<DenseMatrix> w_m;
  ZeroWeightPolicy z_zero_policy = ZeroWeightPolicy::error;

  static CompositionConfig baseline() { return {}; }
  static CompositionConfig improved() {
    CompositionConfig cfg;
    cfg.model = CompositionModel::improved;
    return cfg;
  }
};

/// v_p = g(W_v [M_a v_b; M_b v_a]), M_p = W_M [M_a; M_b], alpha_p = max.
LexicalEntry compose_baseline(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg);

/// As baseline, except M_p = W_M [(alpha_a/Z) M_a; (alpha_b/Z) M_b] with
/// Z = alpha_a + alpha_b.
LexicalEntry compose_improved(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg);

// Dispatches on cfg.model.
LexicalEntry compose(const LexicalEntry& a, const LexicalEntry& b, const CompositionConfig& cfg);

/// Bottom-up evaluation, left child as `a`. Unary nodes pass their child
/// through; nodes with more than two children raise ArityError.
LexicalEntry compose_tree(const ParseTree& tree, const Lexicon& lexicon, const CompositionConfig& cfg);

/// Same result, bit for bit, with sibling subtrees evaluated as OpenMP tasks.
LexicalEntry compose_tree_parallel(const ParseTree& tree, const Lexicon& lexicon,
                                   const CompositionConfig& cfg);

}  // namespace tripsem

#endif  // TRIPSEM_COMPOSITION_HPP
