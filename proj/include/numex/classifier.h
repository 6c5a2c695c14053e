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

#ifndef NUMEX_CLASSIFIER_H_
#define NUMEX_CLASSIFIER_H_

#include <vector>

#include "numex/grammar.h"
#include "numex/locale.h"
#include "numex/token.h"
#include "numex/types.h"

namespace numex {

// Types one candidate from its parse kind and left/right context.
//
// Cardinals become years when the value is 1000..2100, has no fraction or
// magnitude word, and either follows a year cue word or used the pair
// reading. Other cardinals are quantities; a following unit noun is pulled
// into the span and recorded as the unit word. Clock phrases are resolved
// to 24-hour form.
ParsedExpression Classify(const CandidateParse& candidate,
                          const std::vector<Token>& tokens,
                          const Locale& locale);

// Classifies scan output, never letting a pulled-in unit noun overlap the
// next candidate. Output is index-aligned with `candidates`.
std::vector<ParsedExpression> ClassifyAll(
    const std::vector<CandidateParse>& candidates,
    const std::vector<Token>& tokens, const Locale& locale);

// As-spoken hour plus day period to 24-hour time. The result carries an
// unspecified hint, so resolving twice is the same as resolving once.
TimeOfDay ResolveTime(const TimeOfDay& time);

}  // namespace numex

#endif  // NUMEX_CLASSIFIER_H_
