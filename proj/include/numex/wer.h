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

#ifndef NUMEX_WER_H_
#define NUMEX_WER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numex/locale.h"

namespace numex {

struct WerResult {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t reference_length = 0;

  std::size_t edits() const { return substitutions + insertions + deletions; }
  // edits / reference_length. An empty reference counts as length 1, so
  // ("", "a b") is 2 and ("", "") is 0.
  double value() const;
};

// Whitespace split; no case folding, punctuation stays attached.
std::vector<std::string> SplitWords(std::string_view text);

// Unit-cost Levenshtein alignment with an operation breakdown. Among minimal
// alignments, substitutions are preferred over insertion+deletion pairs.
WerResult AlignWords(std::span<const std::string> reference,
                     std::span<const std::string> hypothesis);

WerResult WordErrorRate(std::string_view reference,
                        std::string_view hypothesis);

// Runs the rule normalizer over both sides first, so "nineteen forty-five"
// and "1945" compare equal.
WerResult NormalizedWordErrorRate(std::string_view reference,
                                  std::string_view hypothesis,
                                  const Locale& locale);

}  // namespace numex

#endif  // NUMEX_WER_H_
