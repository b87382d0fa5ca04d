#ifndef TRIPSEM_ANALYSIS_HPP
#define TRIPSEM_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripsem/composition.hpp"
#include "tripsem/core.hpp"
#include "tripsem/lexicon.hpp"
#include "tripsem/treeio.hpp"

namespace tripsem {

/// Words standing in for "every a in A" when fitting the negation word.
/// Every entry has v != 0 and M other than 0 or I, and all layouts agree.
class SampleSet {
 public:
  explicit SampleSet(std::vector<LexicalEntry> entries);

  const std::vector<LexicalEntry>& entries() const noexcept { return entries_; }
  const SegmentLayout& layout() const { return entries_.front().layout(); }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<LexicalEntry> entries_;
};

inline constexpr std::uint64_t kDemoSampleSeed = 2014;
inline constexpr std::size_t kDemoSampleCount = 50;
inline constexpr double kDemoSampleNoise = 0.1;

/// Seeded demo set: tokens s00..s49, drawn exactly like init_random; a draw
/// that violates the SampleSet assumptions is discarded and redrawn.
SampleSet demo_sample_set(const SegmentLayout& layout = SegmentLayout(4, 2, 2),
                          std::uint64_t seed = kDemoSampleSeed, std::size_t count = kDemoSampleCount,
                          double noise = kDemoSampleNoise);

/// Which requirement families enter a fit.
enum class ConstraintFamilies { both, value_only, function_only };

/// Result of fitting (M_not, v_not[, alpha_not]). Residuals cover the active
/// families only and use the Frobenius / Euclidean norm.
struct FitResult {
  FunctionMatrix m_not_hat;
  SemanticVector v_not_hat;
  std::optional<double> alpha_not_hat;
  double residual_value = 0.0;
  double residual_function = 0.0;
  double residual_total = 0.0;
  // Portion of the residual carried by the double-negation rows.
  double residual_double_negation = 0.0;
  std::size_t rank = 0;
};

/// Unknowns are ordered vec(M_not) row-major, then v_not. Rows per sample,
/// value rows first (all samples), then function rows (all samples):
///   value:    M_not v_a + M_a v_not            = J_mu v_a
///             M_not (J_mu v_a) + M_a v_not     = J_nu J_mu v_a
///   function: (M_not + M_a) - M_a              = 0   (single and double)
/// The double-negation rows compose "not" with the required single-negation
/// result (J_mu v_a, M_a). Solved jointly by least squares.
FitResult fit_negation_baseline(const SampleSet& samples, const NegationOperator& op,
                                const NegationOperator& op2,
                                ConstraintFamilies families = ConstraintFamilies::both);

/// Same value rows; the function requirement becomes
/// (alpha_not/Z) M_not + (alpha_a/Z) M_a = M_a, i.e. alpha_not (M_not - M_a) = 0,
/// which is solved for alpha_not given the fitted M_not. Samples need alpha > 0.
FitResult fit_negation_improved(const SampleSet& samples, const NegationOperator& op,
                                const NegationOperator& op2);

struct DoubleNegationReport {
  SemanticVector once;
  SemanticVector twice;
  bool domain_unchanged = false;
  bool signs_restored = false;
  bool diminutive = false;
};

/// Negates with op, then with op2. mu = 1 is accepted (plain inversion), in
/// which case magnitudes are preserved and `diminutive` is false unless the
/// inverted segment is zero.
DoubleNegationReport check_double_negation(const LexicalEntry& entry, const NegationOperator& op,
                                           const NegationOperator& op2);

struct ScopeReport {
  double delta = 0.0;              // |root M (perturbed) - root M|_F
  double perturbation_norm = 0.0;  // |perturbation|_F
  double root_m_norm = 0.0;
};

inline constexpr const char* kNegationToken = "not";

/// Evaluates the tree twice, once with M_not + perturbation in place of
/// M_not. The tree must hold exactly one "not" leaf.
ScopeReport scope_invariance_report(const ParseTree& tree, const Lexicon& lexicon,
                                    const CompositionConfig& cfg, const FunctionMatrix& perturbation);

double domain_similarity(const LexicalEntry& a, const LexicalEntry& b);
// Cosine over the stable and inverted segments together.
double value_similarity(const LexicalEntry& a, const LexicalEntry& b);
double full_similarity(const LexicalEntry& a, const LexicalEntry& b);

}  // namespace tripsem

#endif  // TRIPSEM_ANALYSIS_HPP
