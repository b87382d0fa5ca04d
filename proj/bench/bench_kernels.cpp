// Serial reference vs OpenMP kernels, plus the end-to-end paths that use them.
// Set OMP_NUM_THREADS to control the team size.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tripsem/analysis.hpp"
#include "tripsem/composition.hpp"
#include "tripsem/kernels.hpp"
#include "tripsem/lexicon.hpp"
#include "tripsem/random.hpp"

namespace k = tripsem::kernels;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  tripsem::SeededGenerator gen(seed);
  std::vector<double> v(n);
  for (double& x : v) x = gen.uniform_pm1();
  return v;
}

template <auto Gemv>
void BM_gemv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 1);
  const auto x = random_values(n, 2);
  std::vector<double> y(n);
  for (auto _ : state) {
    Gemv(a, n, n, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}

template <auto Gemm>
void BM_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 3);
  const auto b = random_values(n * n, 4);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    Gemm(a, b, c, n, n, n);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Reflect>
void BM_reflector(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_values(n * n, 5);
  auto v = random_values(n, 6);
  v[0] = 1.0;
  double vv = 0.0;
  for (double x : v) vv += x * x;
  // An exact Householder reflector is orthogonal, so repeated application keeps
  // the panel bounded.
  const double tau = 2.0 / vv;
  for (auto _ : state) {
    Reflect(a, n, 0, 0, n, v, tau);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}

BENCHMARK(BM_gemv<k::serial::gemv>)->Name("gemv/serial")->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(BM_gemv<k::parallel::gemv>)->Name("gemv/parallel")->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(BM_gemm<k::serial::gemm>)->Name("gemm/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_gemm<k::parallel::gemm>)->Name("gemm/parallel")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_reflector<k::serial::apply_reflector>)->Name("reflector/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_reflector<k::parallel::apply_reflector>)->Name("reflector/parallel")->RangeMultiplier(4)->Range(64, 1024);

// Complete binary tree with 2^depth leaves over a small lexicon.
tripsem::ParseTree full_tree(int depth, tripsem::SeededGenerator& gen, const std::vector<std::string>& tokens) {
  if (depth == 0) return tripsem::ParseTree::leaf("X", tokens[gen.below(tokens.size())]);
  std::vector<tripsem::ParseTree> kids;
  kids.push_back(full_tree(depth - 1, gen, tokens));
  kids.push_back(full_tree(depth - 1, gen, tokens));
  return tripsem::ParseTree::node("N", std::move(kids));
}

template <bool Parallel>
void BM_compose_tree(benchmark::State& state) {
  const tripsem::SegmentLayout layout(16, 8, 8);
  const std::vector<std::string> tokens{"a", "b", "c", "d", "e", "f", "g", "h"};
  const auto lex = tripsem::init_random(tokens, layout, 7, 0.1);
  tripsem::SeededGenerator gen(8);
  const auto tree = full_tree(static_cast<int>(state.range(0)), gen, tokens);
  const auto cfg = tripsem::CompositionConfig::improved();
  for (auto _ : state) {
    auto root = Parallel ? tripsem::compose_tree_parallel(tree, lex, cfg) : tripsem::compose_tree(tree, lex, cfg);
    benchmark::DoNotOptimize(root);
  }
}

BENCHMARK(BM_compose_tree<false>)->Name("compose_tree/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_compose_tree<true>)->Name("compose_tree/parallel")->DenseRange(6, 10, 2);

void BM_fit_negation(benchmark::State& state) {
  const tripsem::SegmentLayout layout(4, 2, 2);
  const auto samples = tripsem::demo_sample_set(layout, tripsem::kDemoSampleSeed,
                                                static_cast<std::size_t>(state.range(0)));
  const tripsem::NegationOperator op(0.5, layout);
  for (auto _ : state) {
    auto fit = tripsem::fit_negation_baseline(samples, op, op);
    benchmark::DoNotOptimize(fit.residual_total);
  }
}

BENCHMARK(BM_fit_negation)->Name("fit_negation_baseline")->Arg(50)->Arg(200)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
