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

#ifndef NUMEX_NORMALIZER_H_
#define NUMEX_NORMALIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "numex/locale.h"
#include "numex/types.h"

namespace numex {

struct NormalizedExpression {
  ParsedExpression expression;
  std::string formatted;  // literal spliced into the output
  std::string original;   // input bytes it replaced
};

struct NormalizationResult {
  std::string text;
  std::vector<NormalizedExpression> expressions;  // sorted by span start
};

// Number words to literals. Text outside the recognized spans is copied
// byte for byte; digits already in the input are left alone.
NormalizationResult NormalizeSentence(std::string_view sentence,
                                      const Locale& locale);

}  // namespace numex

#endif  // NUMEX_NORMALIZER_H_
