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

// Number-word lexicon shared by the parser and the verbalizer.
#ifndef NUMEX_SRC_LEXICON_H_
#define NUMEX_SRC_LEXICON_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numex/locale.h"

namespace numex::lexicon {

enum class AtomKind {
  kUnit,      // 0..9
  kTeen,      // 10..19
  kTens,      // 20, 30, .., 90
  kTwoDigit,  // German "fünfundvierzig" folded to 45
  kHundred,
  kThousand,
  kScale,     // 10^6, 10^9, 10^12
  kPoint,     // "point" / "Komma"
  kOh,        // English "oh" in "nineteen oh five"
  kMinus,
};

struct Atom {
  AtomKind kind;
  std::uint64_t value = 0;
  std::size_t token = 0;
  // Article-like 1: "one", "ein", "eine".
  bool article = false;
  // Surface of scale words, used as the recorded magnitude word.
  std::string word;
};

// Atoms for a single token; nullopt when the token is not entirely made of
// number words.
std::optional<std::vector<Atom>> Atomize(std::string_view surface,
                                         std::string_view lowercased,
                                         std::size_t token_index,
                                         Language language);

// Word tables for verbalization.
const std::vector<std::string>& EnglishOnes();   // 0..19
const std::vector<std::string>& EnglishTens();   // index 2..9
const std::vector<std::string>& GermanOnes();    // 0..19, 1 = "eins"
const std::vector<std::string>& GermanTens();    // index 2..9

}  // namespace numex::lexicon

#endif  // NUMEX_SRC_LEXICON_H_
