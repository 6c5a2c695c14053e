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

#ifndef NUMEX_GUARD_H_
#define NUMEX_GUARD_H_

#include <string>
#include <string_view>

#include "numex/wer.h"

namespace numex {

struct GuardConfig {
  double threshold = 0.5;

  // Throws ContractViolation unless 0 <= threshold <= 1.
  void Validate() const;
};

struct GuardDecision {
  bool kept = false;
  double measured_wer = 0.0;
  double threshold = 0.5;
  WerResult wer;
  std::string returned_text;
};

// Keeps the reformatted text unless its WER against the original is larger
// than the threshold; equality keeps.
GuardDecision Guard(std::string_view original, std::string_view segmented,
                    const GuardConfig& config = {});

}  // namespace numex

#endif  // NUMEX_GUARD_H_
