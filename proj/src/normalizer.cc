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

#include "numex/normalizer.h"

#include "numex/classifier.h"
#include "numex/formatter.h"
#include "numex/grammar.h"
#include "numex/token.h"

namespace numex {

NormalizationResult NormalizeSentence(std::string_view sentence,
                                      const Locale& locale) {
  NormalizationResult result;
  const std::vector<Token> tokens = Tokenize(sentence);
  const auto candidates = ScanTokens(tokens, locale);
  if (candidates.empty()) {
    result.text = std::string(sentence);
    return result;
  }
  auto expressions = ClassifyAll(candidates, tokens, locale);

  std::size_t copied = 0;
  for (auto& e : expressions) {
    const std::size_t begin = tokens[e.span.start].offset;
    const std::size_t end = tokens[e.span.end - 1].end_offset();
    std::string formatted = FormatExpression(e, locale);
    result.text.append(sentence.substr(copied, begin - copied));
    result.text += formatted;
    copied = end;
    result.expressions.push_back(
        {std::move(e), std::move(formatted),
         std::string(sentence.substr(begin, end - begin))});
  }
  result.text.append(sentence.substr(copied));
  return result;
}

}  // namespace numex
