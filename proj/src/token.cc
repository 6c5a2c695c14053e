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

#include "numex/token.h"

#include <array>
#include <cctype>

namespace numex {
namespace {

constexpr std::string_view kLeadingAscii = "\"'([{";
constexpr std::string_view kTrailingAscii = ".,;:!?\"')]}";

// Multi-byte quotes and ellipsis peeled from either side.
constexpr std::array<std::string_view, 8> kMultiBytePunct = {
    "\xE2\x80\x9C",  // left double quote
    "\xE2\x80\x9D",  // right double quote
    "\xE2\x80\x9E",  // low double quote
    "\xE2\x80\x98",  // left single quote
    "\xE2\x80\x99",  // right single quote
    "\xC2\xAB",      // guillemets
    "\xC2\xBB",
    "\xE2\x80\xA6",  // ellipsis
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Length of a peelable punctuation mark at the front of `s`, 0 if none.
std::size_t LeadingPunct(std::string_view s) {
  if (s.empty()) return 0;
  if (kLeadingAscii.find(s.front()) != std::string_view::npos) return 1;
  for (auto p : kMultiBytePunct) {
    if (s.starts_with(p)) return p.size();
  }
  return 0;
}

std::size_t TrailingPunct(std::string_view s) {
  if (s.empty()) return 0;
  if (kTrailingAscii.find(s.back()) != std::string_view::npos) return 1;
  for (auto p : kMultiBytePunct) {
    if (s.ends_with(p)) return p.size();
  }
  return 0;
}

bool HasWordChar(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isalnum(c)) return true;
    // Lead byte of Latin-1 supplement letters (ä, ö, ü, ß, é, ...).
    if (c == 0xC3) return true;
  }
  return false;
}

}  // namespace

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(out[i]);
    if (c < 0x80) {
      out[i] = static_cast<char>(std::tolower(c));
    } else if (c == 0xC3 && i + 1 < out.size()) {
      unsigned char n = static_cast<unsigned char>(out[i + 1]);
      // Ä Ö Ü -> ä ö ü
      if (n == 0x84 || n == 0x96 || n == 0x9C) {
        out[i + 1] = static_cast<char>(n + 0x20);
      }
      ++i;
    }
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t offset, std::string_view surface, bool word) {
    Token t;
    t.surface = std::string(surface);
    t.lowercased = Lowercase(surface);
    t.index = tokens.size();
    t.is_word = word;
    t.offset = offset;
    tokens.push_back(std::move(t));
  };

  std::size_t pos = 0;
  while (pos < sentence.size()) {
    while (pos < sentence.size() && IsSpace(sentence[pos])) ++pos;
    std::size_t begin = pos;
    while (pos < sentence.size() && !IsSpace(sentence[pos])) ++pos;
    if (begin == pos) break;

    std::string_view chunk = sentence.substr(begin, pos - begin);
    std::size_t chunk_offset = begin;

    // Leading marks, emitted in order.
    while (!chunk.empty()) {
      std::size_t n = LeadingPunct(chunk);
      if (n == 0 || n == chunk.size()) break;
      emit(chunk_offset, chunk.substr(0, n), false);
      chunk.remove_prefix(n);
      chunk_offset += n;
    }
    // Trailing marks are collected right-to-left, then emitted after the core.
    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (!chunk.empty()) {
      std::size_t n = TrailingPunct(chunk);
      if (n == 0 || n == chunk.size()) break;
      trailing.emplace_back(chunk_offset + chunk.size() - n, n);
      chunk.remove_suffix(n);
    }
    emit(chunk_offset, chunk, HasWordChar(chunk));
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      emit(it->first, sentence.substr(it->first, it->second), false);
    }
  }
  return tokens;
}

std::string_view SpanText(std::string_view sentence,
                          const std::vector<Token>& tokens, Span span) {
  if (span.start >= span.end || span.end > tokens.size()) return {};
  std::size_t begin = tokens[span.start].offset;
  std::size_t end = tokens[span.end - 1].end_offset();
  return sentence.substr(begin, end - begin);
}

}  // namespace numex
