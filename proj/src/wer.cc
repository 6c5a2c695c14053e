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

#include "numex/wer.h"

#include <algorithm>
#include <sstream>

#include "numex/normalizer.h"

namespace numex {

double WerResult::value() const {
  const std::size_t denominator = reference_length == 0 ? 1 : reference_length;
  return static_cast<double>(edits()) / static_cast<double>(denominator);
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(std::move(w));
  return words;
}

WerResult AlignWords(std::span<const std::string> reference,
                     std::span<const std::string> hypothesis) {
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();
  // cost[i][j] for reference prefix i and hypothesis prefix j.
  std::vector<std::size_t> cost((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) cost[at(i, 0)] = i;
  for (std::size_t j = 0; j <= m; ++j) cost[at(0, j)] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub =
          cost[at(i - 1, j - 1)] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      cost[at(i, j)] =
          std::min({sub, cost[at(i - 1, j)] + 1, cost[at(i, j - 1)] + 1});
    }
  }
  WerResult r;
  r.reference_length = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = reference[i - 1] == hypothesis[j - 1];
      if (cost[at(i, j)] == cost[at(i - 1, j - 1)] + (same ? 0 : 1)) {
        if (!same) ++r.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && cost[at(i, j)] == cost[at(i - 1, j)] + 1) {
      ++r.deletions;
      --i;
    } else {
      ++r.insertions;
      --j;
    }
  }
  return r;
}

WerResult WordErrorRate(std::string_view reference,
                        std::string_view hypothesis) {
  const auto ref = SplitWords(reference);
  const auto hyp = SplitWords(hypothesis);
  return AlignWords(ref, hyp);
}

WerResult NormalizedWordErrorRate(std::string_view reference,
                                  std::string_view hypothesis,
                                  const Locale& locale) {
  return WordErrorRate(NormalizeSentence(reference, locale).text,
                       NormalizeSentence(hypothesis, locale).text);
}

}  // namespace numex
