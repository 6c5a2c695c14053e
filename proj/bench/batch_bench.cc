// Copyright (c) 2026 The numex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Throughput of the OpenMP batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "numex/batch.h"
#include "numex/verbalizer.h"

namespace {

using namespace numex;

std::vector<std::string> SpokenCorpus(std::size_t n) {
  const Locale en = Locale::English();
  std::mt19937_64 rng(1);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int year = 1000 + static_cast<int>(rng() % 1100);
    const int h = static_cast<int>(rng() % 24), m = static_cast<int>(rng() % 60);
    const std::string written = "In " + std::to_string(year) +
                                " the train left at " + std::to_string(h) +
                                (m < 10 ? ":0" : ":") + std::to_string(m) +
                                " with " + std::to_string(rng() % 90000) +
                                " people on board.";
    out.push_back(VerbalizeSentence(written, en, {std::nullopt, rng()}));
  }
  return out;
}

const std::vector<std::string>& Corpus() {
  static const auto corpus = SpokenCorpus(2000);
  return corpus;
}

void BM_NormalizeParallel(benchmark::State& state) {
  const Locale en = Locale::English();
  for (auto _ : state) {
    benchmark::DoNotOptimize(NormalizeBatch(Corpus(), en));
  }
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_NormalizeParallel)->Unit(benchmark::kMillisecond);

void BM_NormalizeSerial(benchmark::State& state) {
  const Locale en = Locale::English();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::NormalizeBatch(Corpus(), en));
  }
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_NormalizeSerial)->Unit(benchmark::kMillisecond);

void BM_GuardParallel(benchmark::State& state) {
  const auto seg = NormalizeBatch(Corpus(), Locale::English());
  for (auto _ : state) {
    benchmark::DoNotOptimize(GuardBatch(Corpus(), seg));
  }
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_GuardParallel)->Unit(benchmark::kMillisecond);

void BM_GuardSerial(benchmark::State& state) {
  const auto seg = NormalizeBatch(Corpus(), Locale::English());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::GuardBatch(Corpus(), seg));
  }
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_GuardSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
