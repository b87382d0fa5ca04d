#ifndef TRIPSEM_TESTS_ORACLES_HPP
#define TRIPSEM_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls into the library's
// arithmetic; inputs are copied out into plain vectors first.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tripsem/composition.hpp"
#include "tripsem/core.hpp"
#include "tripsem/lexicon.hpp"
#include "tripsem/numerics.hpp"
#include "tripsem/random.hpp"
#include "tripsem/treeio.hpp"

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline Rows to_rows(const tripsem::DenseMatrix& m) {
  Rows out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline std::vector<double> naive_mat_vec(const Rows& a, const std::vector<double>& x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

// Solves (A^T A) x = A^T b by Gaussian elimination with partial pivoting.
inline std::vector<double> normal_equations(const Rows& a, const std::vector<double>& b) {
  const std::size_t n = a.front().size();
  Rows g(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g[i][j] += a[r][i] * a[r][j];
      g[i][n] += a[r][i] * b[r];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(g[i][k]) > std::abs(g[p][k])) p = i;
    }
    if (g[p][k] == 0.0) throw std::runtime_error("normal equations are singular");
    std::swap(g[p], g[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = g[i][k] / g[k][k];
      for (std::size_t j = k; j <= n; ++j) g[i][j] -= f * g[k][j];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = g[k][n];
    for (std::size_t j = k + 1; j < n; ++j) s -= g[k][j] * x[j];
    x[k] = s / g[k][k];
  }
  return x;
}

inline double residual_norm(const Rows& a, const std::vector<double>& x, const std::vector<double>& b) {
  const auto ax = naive_mat_vec(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (ax[i] - b[i]) * (ax[i] - b[i]);
  return std::sqrt(s);
}

// A word as plain arrays.
struct RawEntry {
  std::vector<double> v;
  Rows m;
  double alpha = 0.0;
};

inline RawEntry raw(const tripsem::LexicalEntry& e) {
  return {e.v().values(), to_rows(e.m().matrix()), e.alpha()};
}

// One composition step written out longhand with default W_v = W_M = [I I].
inline RawEntry raw_compose(const RawEntry& a, const RawEntry& b, bool improved) {
  const std::size_t n = a.v.size();
  RawEntry p;
  p.v.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double left = 0.0;
    double right = 0.0;
    for (std::size_t j = 0; j < n; ++j) left += a.m[i][j] * b.v[j];
    for (std::size_t j = 0; j < n; ++j) right += b.m[i][j] * a.v[j];
    p.v[i] = left + right;
  }
  double wa = 1.0;
  double wb = 1.0;
  if (improved) {
    wa = a.alpha / (a.alpha + b.alpha);
    wb = b.alpha / (a.alpha + b.alpha);
  }
  p.m.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.m[i][j] = wa * a.m[i][j] + wb * b.m[i][j];
  }
  p.alpha = std::max(a.alpha, b.alpha);
  return p;
}

// Post-order walk with an explicit stack of partial results: each leaf pushes
// its entry, each binary node pops two and pushes their composition.
inline RawEntry unrolled(const tripsem::ParseTree& root, const tripsem::Lexicon& lex, bool improved) {
  std::vector<std::pair<const tripsem::ParseTree*, bool>> work{{&root, false}};
  std::vector<RawEntry> values;
  while (!work.empty()) {
    auto [node, expanded] = work.back();
    work.pop_back();
    if (node->is_leaf()) {
      values.push_back(raw(lex.at(node->token())));
    } else if (!expanded) {
      work.push_back({node, true});
      for (auto it = node->children().rbegin(); it != node->children().rend(); ++it) work.push_back({&*it, false});
    } else if (node->children().size() == 2) {
      RawEntry right = std::move(values.back());
      values.pop_back();
      RawEntry left = std::move(values.back());
      values.pop_back();
      values.push_back(raw_compose(left, right, improved));
    }
  }
  return values.back();
}

inline double max_abs_diff(const RawEntry& x, const tripsem::LexicalEntry& e) {
  double d = std::abs(x.alpha - e.alpha());
  for (std::size_t i = 0; i < x.v.size(); ++i) d = std::max(d, std::abs(x.v[i] - e.v()[i]));
  for (std::size_t i = 0; i < x.m.size(); ++i) {
    for (std::size_t j = 0; j < x.m.size(); ++j) d = std::max(d, std::abs(x.m[i][j] - e.m()(i, j)));
  }
  return d;
}

// Random binary tree over `tokens` with `leaves` leaves and depth <= max_depth.
inline tripsem::ParseTree random_binary_tree(tripsem::SeededGenerator& gen, const std::vector<std::string>& tokens,
                                             std::size_t leaves, int max_depth, int depth = 0) {
  if (leaves == 1) return tripsem::ParseTree::leaf("X", tokens[gen.below(tokens.size())]);
  const std::size_t cap = std::size_t{1} << (max_depth - depth - 1);
  const std::size_t lo = leaves > cap ? leaves - cap : 1;
  const std::size_t hi = std::min(leaves - 1, cap);
  const std::size_t left = lo + gen.below(hi - lo + 1);
  std::vector<tripsem::ParseTree> kids;
  kids.push_back(random_binary_tree(gen, tokens, left, max_depth, depth + 1));
  kids.push_back(random_binary_tree(gen, tokens, leaves - left, max_depth, depth + 1));
  return tripsem::ParseTree::node("N", std::move(kids));
}

inline int depth(const tripsem::ParseTree& t) {
  int d = 0;
  for (const auto& c : t.children()) d = std::max(d, depth(c) + 1);
  return d;
}

}  // namespace oracle

#endif  // TRIPSEM_TESTS_ORACLES_HPP
