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

#ifndef NUMEX_TOKEN_H_
#define NUMEX_TOKEN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace numex {

struct Token {
  std::string surface;
  std::string lowercased;
  std::size_t index = 0;
  // False for split-off punctuation ("." "," "(" ...).
  bool is_word = false;
  // Byte offset of `surface` inside the tokenized sentence.
  std::size_t offset = 0;

  std::size_t end_offset() const { return offset + surface.size(); }
};

// Half-open token range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span&) const = default;
};

// Whitespace split, then leading/trailing punctuation peeled off each chunk
// into separate non-word tokens. Interior punctuation stays ("o'clock",
// "1.000,50€", "19:45").
std::vector<Token> Tokenize(std::string_view sentence);

// ASCII plus German umlaut lowercasing; other bytes pass through.
std::string Lowercase(std::string_view text);

// Original sentence bytes covered by a token span, separators included.
std::string_view SpanText(std::string_view sentence,
                          const std::vector<Token>& tokens, Span span);

}  // namespace numex

#endif  // NUMEX_TOKEN_H_
