#include "tripsem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tripsem/error.hpp"
#include "tripsem/random.hpp"

namespace tripsem {

namespace {

bool is_identity(const FunctionMatrix& m) {
  return m == FunctionMatrix::identity(m.layout());
}

bool is_zero(const FunctionMatrix& m) {
  return std::all_of(m.matrix().entries().begin(), m.matrix().entries().end(),
                     [](double x) { return x == 0.0; });
}

}  // namespace

SampleSet::SampleSet(std::vector<LexicalEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("sample set is empty");
  const auto& layout = entries_.front().layout();
  for (const auto& e : entries_) {
    if (!(e.layout() == layout)) {
      throw DimensionError("sample '" + e.token() + "' has layout " + to_string(e.layout()) +
                           ", expected " + to_string(layout));
    }
    if (e.v().is_zero()) throw InvalidArgument("sample '" + e.token() + "' has a zero semantic vector");
    if (is_zero(e.m())) throw InvalidArgument("sample '" + e.token() + "' has a zero function matrix");
    if (is_identity(e.m())) throw InvalidArgument("sample '" + e.token() + "' has an identity function matrix");
  }
}

SampleSet demo_sample_set(const SegmentLayout& layout, std::uint64_t seed, std::size_t count, double noise) {
  if (count == 0) throw InvalidArgument("demo sample set needs at least one entry");
  if (!std::isfinite(noise) || noise <= 0.0) {
    throw InvalidArgument("demo sample noise must be > 0, otherwise every M is the identity");
  }
  const std::size_t n = layout.total();
  SeededGenerator gen(seed);
  std::vector<LexicalEntry> entries;
  entries.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::string token = (k < 10 ? "s0" : "s") + std::to_string(k);
    for (;;) {
      Vector v(n);
      for (double& x : v) x = gen.uniform_pm1();
      DenseMatrix m = DenseMatrix::identity(n);
      for (double& x : m.entries()) x += noise * gen.standard_normal();
      LexicalEntry e(token, SemanticVector(std::move(v), layout), FunctionMatrix(std::move(m), layout), 1.0);
      if (e.v().is_zero() || is_zero(e.m()) || is_identity(e.m())) continue;
      entries.push_back(std::move(e));
      break;
    }
  }
  return SampleSet(std::move(entries));
}

namespace {

void require_fit_inputs(const SampleSet& samples, const NegationOperator& op, const NegationOperator& op2) {
  if (!(op.layout() == samples.layout()) || !(op2.layout() == samples.layout())) {
    throw DimensionError("negation operators and samples disagree on layout");
  }
}

struct ConstraintSystem {
  DenseMatrix design;
  Vector targets;
  std::vector<char> is_value_row;
  std::vector<char> is_double_row;
};

ConstraintSystem build_baseline_system(const SampleSet& samples, const NegationOperator& op,
                                       const NegationOperator& op2, ConstraintFamilies families) {
  const std::size_t n = samples.layout().total();
  const std::size_t unknowns = n * n + n;
  const bool with_value = families != ConstraintFamilies::function_only;
  const bool with_function = families != ConstraintFamilies::value_only;
  const std::size_t rows =
      samples.size() * ((with_value ? 2 * n : 0) + (with_function ? 2 * n * n : 0));

  ConstraintSystem sys{DenseMatrix(rows, unknowns), Vector(rows, 0.0), std::vector<char>(rows, 0),
                       std::vector<char>(rows, 0)};
  const DenseMatrix j_mu = make_negation_matrix(op).matrix();
  const DenseMatrix j_nu = make_negation_matrix(op2).matrix();

  std::size_t row = 0;
  if (with_value) {
    for (const auto& a : samples.entries()) {
      const Vector& va = a.v().values();
      const Vector once = mat_vec(j_mu, va);
      const Vector twice = mat_vec(j_nu, once);
      for (int pass = 0; pass < 2; ++pass) {
        const Vector& input = pass == 0 ? va : once;
        const Vector& target = pass == 0 ? once : twice;
        for (std::size_t i = 0; i < n; ++i, ++row) {
          for (std::size_t j = 0; j < n; ++j) {
            sys.design(row, i * n + j) = input[j];
            sys.design(row, n * n + j) = a.m()(i, j);
          }
          sys.targets[row] = target[i];
          sys.is_value_row[row] = 1;
          sys.is_double_row[row] = static_cast<char>(pass);
        }
      }
    }
  }
  if (with_function) {
    for (const auto& a : samples.entries()) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < n * n; ++k, ++row) {
          sys.design(row, k) = 1.0;
          const double m_a = a.m().matrix().entries()[k];
          sys.targets[row] = m_a - m_a;
          sys.is_double_row[row] = static_cast<char>(pass);
        }
      }
    }
  }
  return sys;
}

struct SplitResiduals {
  double value = 0.0;
  double function = 0.0;
  double doubled = 0.0;
};

SplitResiduals split_residuals(const ConstraintSystem& sys, std::span<const double> x) {
  const Vector fitted = mat_vec(sys.design, x);
  Vector value;
  Vector function;
  Vector doubled;
  for (std::size_t r = 0; r < fitted.size(); ++r) {
    const double e = fitted[r] - sys.targets[r];
    (sys.is_value_row[r] ? value : function).push_back(e);
    if (sys.is_double_row[r]) doubled.push_back(e);
  }
  return {norm2(value), norm2(function), norm2(doubled)};
}

std::pair<FunctionMatrix, SemanticVector> unpack(std::span<const double> x, const SegmentLayout& layout) {
  const std::size_t n = layout.total();
  std::vector<double> m(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n * n));
  Vector v(x.begin() + static_cast<std::ptrdiff_t>(n * n), x.end());
  return {FunctionMatrix(DenseMatrix(n, n, std::move(m)), layout), SemanticVector(std::move(v), layout)};
}

}  // namespace

FitResult fit_negation_baseline(const SampleSet& samples, const NegationOperator& op,
                                const NegationOperator& op2, ConstraintFamilies families) {
  require_fit_inputs(samples, op, op2);
  const ConstraintSystem sys = build_baseline_system(samples, op, op2, families);
  const auto solved = least_squares(sys.design, sys.targets);
  const auto split = split_residuals(sys, solved.solution);
  auto [m_not, v_not] = unpack(solved.solution, samples.layout());
  return FitResult{std::move(m_not),
                   std::move(v_not),
                   std::nullopt,
                   split.value,
                   split.function,
                   std::hypot(split.value, split.function),
                   split.doubled,
                   solved.rank};
}

FitResult fit_negation_improved(const SampleSet& samples, const NegationOperator& op,
                                const NegationOperator& op2) {
  require_fit_inputs(samples, op, op2);
  for (const auto& a : samples.entries()) {
    if (!(a.alpha() > 0.0)) throw InvalidArgument("sample '" + a.token() + "' needs alpha > 0");
  }
  const std::size_t n = samples.layout().total();

  // f_v is shared with the baseline model, so the value rows are identical.
  const ConstraintSystem value_sys = build_baseline_system(samples, op, op2, ConstraintFamilies::value_only);
  const auto value_fit = least_squares(value_sys.design, value_sys.targets);
  const auto value_split = split_residuals(value_sys, value_fit.solution);
  auto [m_not, v_not] = unpack(value_fit.solution, samples.layout());

  // Multiplying each weighted requirement by Z leaves alpha_not (M_not - M_a) = 0,
  // once for the single and once for the double negation.
  std::vector<DenseMatrix> gaps;
  gaps.reserve(samples.size());
  for (const auto& a : samples.entries()) gaps.push_back(mat_sub(m_not.matrix(), a.m().matrix()));
  DenseMatrix alpha_design(2 * n * n * samples.size(), 1);
  std::size_t row = 0;
  for (const auto& gap : gaps) {
    for (int pass = 0; pass < 2; ++pass) {
      for (double g : gap.entries()) alpha_design(row++, 0) = g;
    }
  }
  const auto alpha_fit = least_squares(alpha_design, Vector(alpha_design.rows(), 0.0));
  const double alpha_not = std::max(0.0, alpha_fit.solution[0]);

  double function_sq = 0.0;
  double double_function_sq = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const double alpha_a = samples.entries()[s].alpha();
    const double gap_norm = frobenius_norm(gaps[s]);
    const double single = alpha_not / (alpha_not + alpha_a) * gap_norm;
    const double inner_alpha = std::max(alpha_not, alpha_a);
    const double twice = alpha_not / (alpha_not + inner_alpha) * gap_norm;
    function_sq += single * single + twice * twice;
    double_function_sq += twice * twice;
  }
  const double residual_function = std::sqrt(function_sq);
  return FitResult{std::move(m_not),
                   std::move(v_not),
                   alpha_not,
                   value_split.value,
                   residual_function,
                   std::hypot(value_split.value, residual_function),
                   std::sqrt(value_split.doubled * value_split.doubled + double_function_sq),
                   value_fit.rank};
}

DoubleNegationReport check_double_negation(const LexicalEntry& entry, const NegationOperator& op,
                                           const NegationOperator& op2) {
  const SemanticVector& v = entry.v();
  SemanticVector once = negate_vector(v, op);
  SemanticVector twice = negate_vector(once, op2);

  const auto d0 = v.domain();
  const auto d2 = twice.domain();
  const bool domain_unchanged = std::equal(d0.begin(), d0.end(), d2.begin(), d2.end());

  bool signs_restored = true;
  bool diminutive = true;
  const auto x0 = v.inverted();
  const auto x2 = twice.inverted();
  for (std::size_t i = 0; i < x0.size(); ++i) {
    if (std::signbit(x0[i]) != std::signbit(x2[i]) || (x0[i] == 0.0) != (x2[i] == 0.0)) {
      signs_restored = false;
    }
    if (x0[i] != 0.0 && !(std::abs(x2[i]) < std::abs(x0[i]))) diminutive = false;
  }
  return {std::move(once), std::move(twice), domain_unchanged, signs_restored, diminutive};
}

ScopeReport scope_invariance_report(const ParseTree& tree, const Lexicon& lexicon,
                                    const CompositionConfig& cfg, const FunctionMatrix& perturbation) {
  const auto leaves = fringe(tree);
  const auto count = std::count(leaves.begin(), leaves.end(), std::string(kNegationToken));
  if (count != 1) {
    throw InvalidArgument("scope analysis needs exactly one '" + std::string(kNegationToken) +
                          "' leaf, tree has " + std::to_string(count));
  }
  if (!(perturbation.layout() == lexicon.layout())) {
    throw DimensionError("perturbation layout " + to_string(perturbation.layout()) + " vs lexicon " +
                         to_string(lexicon.layout()));
  }
  const LexicalEntry& negation = lexicon.at(kNegationToken);
  Lexicon perturbed = lexicon;
  perturbed.put(negation.with_matrix(
      FunctionMatrix(mat_add(negation.m().matrix(), perturbation.matrix()), lexicon.layout())));

  const LexicalEntry root = compose_tree(tree, lexicon, cfg);
  const LexicalEntry root_perturbed = compose_tree(tree, perturbed, cfg);
  return {frobenius_norm(mat_sub(root_perturbed.m().matrix(), root.m().matrix())),
          frobenius_norm(perturbation.matrix()), frobenius_norm(root.m().matrix())};
}

namespace {

void require_same_layout(const LexicalEntry& a, const LexicalEntry& b) {
  if (!(a.layout() == b.layout())) {
    throw DimensionError("similarity of '" + a.token() + "' and '" + b.token() + "': layouts differ");
  }
}

}  // namespace

double domain_similarity(const LexicalEntry& a, const LexicalEntry& b) {
  require_same_layout(a, b);
  return cosine(a.v().domain(), b.v().domain());
}

double value_similarity(const LexicalEntry& a, const LexicalEntry& b) {
  require_same_layout(a, b);
  return cosine(a.v().value(), b.v().value());
}

double full_similarity(const LexicalEntry& a, const LexicalEntry& b) {
  require_same_layout(a, b);
  return cosine(a.v().values(), b.v().values());
}

}  // namespace tripsem
