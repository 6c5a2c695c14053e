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

#ifndef NUMEX_BATCH_H_
#define NUMEX_BATCH_H_

#include <string>
#include <vector>

#include "numex/guard.h"
#include "numex/locale.h"
#include "numex/manifest.h"
#include "numex/report.h"

namespace numex {

// Data-parallel versions of the per-line operations (OpenMP when available).
// Output order always matches input order, and results are identical to the
// serial versions in numex::reference.

std::vector<std::string> NormalizeBatch(const std::vector<std::string>& lines,
                                        const Locale& locale);

// Throws ContractViolation when the inputs differ in length.
std::vector<GuardDecision> GuardBatch(
    const std::vector<std::string>& originals,
    const std::vector<std::string>& segmented, const GuardConfig& config = {});

// Same result as TypeAccuracy; counters are reduced per thread.
EvalReport EvaluateCorpus(const std::vector<ManifestRecord>& references,
                          const std::vector<std::string>& hypotheses);

// Number of worker threads the batch kernels will use.
int BatchThreads();

namespace reference {

std::vector<std::string> NormalizeBatch(const std::vector<std::string>& lines,
                                        const Locale& locale);
std::vector<GuardDecision> GuardBatch(
    const std::vector<std::string>& originals,
    const std::vector<std::string>& segmented, const GuardConfig& config = {});
EvalReport EvaluateCorpus(const std::vector<ManifestRecord>& references,
                          const std::vector<std::string>& hypotheses);

}  // namespace reference
}  // namespace numex

#endif  // NUMEX_BATCH_H_
