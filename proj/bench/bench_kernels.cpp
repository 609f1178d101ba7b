#include <benchmark/benchmark.h>

#include "qgc/anneal.hpp"
#include "qgc/enumerate.hpp"
#include "qgc/graph.hpp"
#include "qgc/logenc.hpp"
#include "qgc/onehot.hpp"
#include "qgc/quadratize.hpp"

using namespace qgc;

namespace {

// One-hot C5 with 4 colors: 24 variables, the enumeration limit.
const EncodedProblem& wide_onehot() {
  static const EncodedProblem p = encode_mgc_onehot(Graph::cycle(5), 4);
  return p;
}

const EncodedProblem& quadratized_log() {
  static const EncodedProblem p = quadratize(encode_mgc_log(generate_random_connected(8, 0.5, 3), 4)).problem;
  return p;
}

void BM_ground_states_serial(benchmark::State& state) {
  const auto& p = wide_onehot();
  for (auto _ : state) benchmark::DoNotOptimize(ground_states_serial(p.polynomial, p.num_vars()));
}

void BM_ground_states_omp(benchmark::State& state) {
  const auto& p = wide_onehot();
  for (auto _ : state) benchmark::DoNotOptimize(ground_states(p.polynomial, p.num_vars()));
}

AnnealParams params(benchmark::State& state) {
  AnnealParams a;
  a.runs = static_cast<std::size_t>(state.range(0));
  a.sweeps = 500;
  a.seed = 1;
  return a;
}

void BM_anneal_serial(benchmark::State& state) {
  const auto& p = quadratized_log();
  const auto a = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(anneal_serial(p.polynomial, p.num_vars(), a));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_anneal_omp(benchmark::State& state) {
  const auto& p = quadratized_log();
  const auto a = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(anneal(p.polynomial, p.num_vars(), a));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ground_states_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ground_states_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_anneal_serial)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_anneal_omp)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
