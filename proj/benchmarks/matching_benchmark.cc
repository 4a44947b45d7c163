// Copyright 2026 The structeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "structeval/latent.h"
#include "structeval/matcher.h"
#include "structeval/ordered.h"
#include "structeval/zoo/coref.h"

namespace structeval {
namespace {

WeightMatrix RandomMatrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  WeightMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.set(i, j, d(rng));
  }
  return w;
}

void BM_OneToOne(benchmark::State& state) {
  WeightMatrix w = RandomMatrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchScore(w, MatchConstraint::kOneToOne));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneToOne)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ManyToOne(benchmark::State& state) {
  WeightMatrix w = RandomMatrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchScore(w, MatchConstraint::kManyToOne));
  }
}
BENCHMARK(BM_ManyToOne)->Range(8, 256);

void BM_Sequence(benchmark::State& state) {
  WeightMatrix w = RandomMatrix(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(SeqMatchScore(w));
}
BENCHMARK(BM_Sequence)->Range(8, 512);

void BM_GraphTotalOrder(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightMatrix w = RandomMatrix(n, 4);
  OrderRelation t = OrderRelation::Total(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GraphMatchScore(w, t, t, MatchConstraint::kOneToOne));
  }
}
BENCHMARK(BM_GraphTotalOrder)->DenseRange(4, 10, 2);

AmrGraph RandomAmr(int vars, const std::string& prefix, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, vars - 1);
  const char* concepts[] = {"dog", "cat", "run", "see"};
  std::vector<Prop> props;
  for (int v = 0; v < vars; ++v) {
    props.push_back({"instance", VarId{prefix + std::to_string(v)},
                     Concept{concepts[v % 4]}});
  }
  for (int i = 0; i < vars; ++i) {
    props.push_back({i % 2 ? "ARG0" : "ARG1", VarId{prefix + std::to_string(pick(rng))},
                     VarId{prefix + std::to_string(pick(rng))}});
  }
  return AmrGraph(std::move(props));
}

void BM_SmatchExact(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  AmrGraph p = RandomAmr(n, "p", 5), g = RandomAmr(n, "g", 6);
  for (auto _ : state) benchmark::DoNotOptimize(Smatch(p, g, {}));
}
BENCHMARK(BM_SmatchExact)->DenseRange(2, 8, 2);

void BM_SmatchHillClimb(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  AmrGraph p = RandomAmr(n, "p", 5), g = RandomAmr(n, "g", 6);
  LatentOptions opt;
  opt.mode = SolverMode::kHillClimb;
  for (auto _ : state) benchmark::DoNotOptimize(Smatch(p, g, opt));
}
BENCHMARK(BM_SmatchHillClimb)->DenseRange(2, 10, 4);

void BM_CeafPhi4(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> owner(0, n / 3);
  auto clusters = [&] {
    std::vector<zoo::Entity> es(n / 3 + 1);
    for (int m = 0; m < n; ++m) es[owner(rng)].push_back(Atom("m" + std::to_string(m)));
    std::erase_if(es, [](const zoo::Entity& e) { return e.empty(); });
    return es;
  };
  auto p = clusters(), g = clusters();
  for (auto _ : state) benchmark::DoNotOptimize(zoo::CeafPhi4(p, g));
}
BENCHMARK(BM_CeafPhi4)->Range(16, 512);

}  // namespace
}  // namespace structeval

BENCHMARK_MAIN();
