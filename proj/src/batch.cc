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

#include "numex/batch.h"

#include <fmt/format.h>

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "numex/errors.h"
#include "numex/normalizer.h"

namespace numex {
namespace {

void CheckAligned(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractViolation(fmt::format("{} inputs but {} outputs", a, b));
  }
}

long long Signed(std::size_t n) { return static_cast<long long>(n); }

}  // namespace

int BatchThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::string> NormalizeBatch(const std::vector<std::string>& lines,
                                        const Locale& locale) {
  std::vector<std::string> out(lines.size());
  // Exceptions must not escape an OpenMP region.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < Signed(lines.size()); ++i) {
    try {
      out[i] = NormalizeSentence(lines[i], locale).text;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<GuardDecision> GuardBatch(const std::vector<std::string>& originals,
                                      const std::vector<std::string>& segmented,
                                      const GuardConfig& config) {
  CheckAligned(originals.size(), segmented.size());
  config.Validate();
  std::vector<GuardDecision> out(originals.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < Signed(originals.size()); ++i) {
    out[i] = Guard(originals[i], segmented[i], config);
  }
  return out;
}

EvalReport EvaluateCorpus(const std::vector<ManifestRecord>& references,
                          const std::vector<std::string>& hypotheses) {
  CheckAligned(references.size(), hypotheses.size());
  EvalReport total;
#pragma omp parallel
  {
    EvalReport local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < Signed(references.size()); ++i) {
      local.Merge(ScorePair(references[i], hypotheses[i]));
    }
#pragma omp critical
    total.Merge(local);
  }
  return total;
}

namespace reference {

std::vector<std::string> NormalizeBatch(const std::vector<std::string>& lines,
                                        const Locale& locale) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const auto& line : lines) {
    out.push_back(NormalizeSentence(line, locale).text);
  }
  return out;
}

std::vector<GuardDecision> GuardBatch(const std::vector<std::string>& originals,
                                      const std::vector<std::string>& segmented,
                                      const GuardConfig& config) {
  CheckAligned(originals.size(), segmented.size());
  std::vector<GuardDecision> out;
  out.reserve(originals.size());
  for (std::size_t i = 0; i < originals.size(); ++i) {
    out.push_back(Guard(originals[i], segmented[i], config));
  }
  return out;
}

EvalReport EvaluateCorpus(const std::vector<ManifestRecord>& references,
                          const std::vector<std::string>& hypotheses) {
  return TypeAccuracy(references, hypotheses);
}

}  // namespace reference
}  // namespace numex
