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

#include "numex/guard.h"

#include <fmt/format.h>

#include "numex/errors.h"

namespace numex {

void GuardConfig::Validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ContractViolation(
        fmt::format("guard threshold {} outside [0, 1]", threshold));
  }
}

GuardDecision Guard(std::string_view original, std::string_view segmented,
                    const GuardConfig& config) {
  config.Validate();
  GuardDecision d;
  d.wer = WordErrorRate(original, segmented);
  d.measured_wer = d.wer.value();
  d.threshold = config.threshold;
  d.kept = d.measured_wer <= config.threshold;
  d.returned_text = std::string(d.kept ? segmented : original);
  return d;
}

}  // namespace numex
