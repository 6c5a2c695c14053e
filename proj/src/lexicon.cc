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

#include "lexicon.h"

#include <algorithm>
#include <array>
#include <utility>

namespace numex::lexicon {
namespace {

struct Entry {
  std::string_view word;
  AtomKind kind;
  std::uint64_t value;
};

constexpr std::uint64_t kMillion = 1'000'000ULL;
constexpr std::uint64_t kBillion = 1'000'000'000ULL;
constexpr std::uint64_t kTrillion = 1'000'000'000'000ULL;

constexpr std::array<Entry, 37> kEnglish = {{
    {"zero", AtomKind::kUnit, 0},      {"one", AtomKind::kUnit, 1},
    {"two", AtomKind::kUnit, 2},       {"three", AtomKind::kUnit, 3},
    {"four", AtomKind::kUnit, 4},      {"five", AtomKind::kUnit, 5},
    {"six", AtomKind::kUnit, 6},       {"seven", AtomKind::kUnit, 7},
    {"eight", AtomKind::kUnit, 8},     {"nine", AtomKind::kUnit, 9},
    {"ten", AtomKind::kTeen, 10},      {"eleven", AtomKind::kTeen, 11},
    {"twelve", AtomKind::kTeen, 12},   {"thirteen", AtomKind::kTeen, 13},
    {"fourteen", AtomKind::kTeen, 14}, {"fifteen", AtomKind::kTeen, 15},
    {"sixteen", AtomKind::kTeen, 16},  {"seventeen", AtomKind::kTeen, 17},
    {"eighteen", AtomKind::kTeen, 18}, {"nineteen", AtomKind::kTeen, 19},
    {"twenty", AtomKind::kTens, 20},   {"thirty", AtomKind::kTens, 30},
    {"forty", AtomKind::kTens, 40},    {"fifty", AtomKind::kTens, 50},
    {"sixty", AtomKind::kTens, 60},    {"seventy", AtomKind::kTens, 70},
    {"eighty", AtomKind::kTens, 80},   {"ninety", AtomKind::kTens, 90},
    {"hundred", AtomKind::kHundred, 100},
    {"thousand", AtomKind::kThousand, 1000},
    {"million", AtomKind::kScale, kMillion},
    {"billion", AtomKind::kScale, kBillion},
    {"trillion", AtomKind::kScale, kTrillion},
    {"point", AtomKind::kPoint, 0},    {"oh", AtomKind::kOh, 0},
    {"minus", AtomKind::kMinus, 0},    {"negative", AtomKind::kMinus, 0},
}};

// Tokens that are only valid as a whole word in German.
constexpr std::array<Entry, 13> kGermanWhole = {{
    {"million", AtomKind::kScale, kMillion},
    {"millionen", AtomKind::kScale, kMillion},
    {"milliarde", AtomKind::kScale, kBillion},
    {"milliarden", AtomKind::kScale, kBillion},
    {"billion", AtomKind::kScale, kTrillion},
    {"billionen", AtomKind::kScale, kTrillion},
    {"komma", AtomKind::kPoint, 0},
    {"minus", AtomKind::kMinus, 0},
    {"null", AtomKind::kUnit, 0},
    {"eine", AtomKind::kUnit, 1},
    {"ein", AtomKind::kUnit, 1},
    {"einen", AtomKind::kUnit, 1},
    {"einer", AtomKind::kUnit, 1},
}};

enum class Morph { kNumber, kUnd, kEins, kEin };

struct Morpheme {
  std::string_view text;
  Morph morph;
  AtomKind kind;
  std::uint64_t value;
};

// Compound building blocks. "eins" may only end a word, "ein" may not.
constexpr std::array<Morpheme, 33> kGermanMorphemes = {{
    {"eins", Morph::kEins, AtomKind::kUnit, 1},
    {"ein", Morph::kEin, AtomKind::kUnit, 1},
    {"zwei", Morph::kNumber, AtomKind::kUnit, 2},
    {"drei", Morph::kNumber, AtomKind::kUnit, 3},
    {"vier", Morph::kNumber, AtomKind::kUnit, 4},
    {"f\xC3\xBC" "nf", Morph::kNumber, AtomKind::kUnit, 5},
    {"sechs", Morph::kNumber, AtomKind::kUnit, 6},
    {"sieben", Morph::kNumber, AtomKind::kUnit, 7},
    {"acht", Morph::kNumber, AtomKind::kUnit, 8},
    {"neun", Morph::kNumber, AtomKind::kUnit, 9},
    {"zehn", Morph::kNumber, AtomKind::kTeen, 10},
    {"elf", Morph::kNumber, AtomKind::kTeen, 11},
    {"zw\xC3\xB6lf", Morph::kNumber, AtomKind::kTeen, 12},
    {"dreizehn", Morph::kNumber, AtomKind::kTeen, 13},
    {"vierzehn", Morph::kNumber, AtomKind::kTeen, 14},
    {"f\xC3\xBC" "nfzehn", Morph::kNumber, AtomKind::kTeen, 15},
    {"sechzehn", Morph::kNumber, AtomKind::kTeen, 16},
    {"siebzehn", Morph::kNumber, AtomKind::kTeen, 17},
    {"achtzehn", Morph::kNumber, AtomKind::kTeen, 18},
    {"neunzehn", Morph::kNumber, AtomKind::kTeen, 19},
    {"zwanzig", Morph::kNumber, AtomKind::kTens, 20},
    {"drei\xC3\x9Fig", Morph::kNumber, AtomKind::kTens, 30},
    {"dreissig", Morph::kNumber, AtomKind::kTens, 30},
    {"vierzig", Morph::kNumber, AtomKind::kTens, 40},
    {"f\xC3\xBC" "nfzig", Morph::kNumber, AtomKind::kTens, 50},
    {"sechzig", Morph::kNumber, AtomKind::kTens, 60},
    {"siebzig", Morph::kNumber, AtomKind::kTens, 70},
    {"achtzig", Morph::kNumber, AtomKind::kTens, 80},
    {"neunzig", Morph::kNumber, AtomKind::kTens, 90},
    {"hundert", Morph::kNumber, AtomKind::kHundred, 100},
    {"tausend", Morph::kNumber, AtomKind::kThousand, 1000},
    {"und", Morph::kUnd, AtomKind::kUnit, 0},
    {"null", Morph::kNumber, AtomKind::kUnit, 0},
}};

// Folds "<unit> und <tens>" into a two-digit atom and checks morpheme
// placement rules. Returns false for an invalid sequence.
bool FoldGerman(const std::vector<const Morpheme*>& seq, std::size_t token,
                std::vector<Atom>& out) {
  out.clear();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Morpheme* m = seq[i];
    const bool last = i + 1 == seq.size();
    if (m->morph == Morph::kEins && !last) return false;
    if (m->morph == Morph::kEin && last) return false;
    if (m->text == "null" && seq.size() > 1) return false;
    if (m->morph == Morph::kUnd) return false;  // consumed below
    if (m->kind == AtomKind::kUnit && i + 2 < seq.size() &&
        seq[i + 1]->morph == Morph::kUnd &&
        seq[i + 2]->kind == AtomKind::kTens && m->value >= 1) {
      out.push_back({AtomKind::kTwoDigit, seq[i + 2]->value + m->value, token,
                     false, {}});
      i += 2;
      continue;
    }
    out.push_back({m->kind, m->value, token, false, {}});
  }
  return !out.empty();
}

bool SegmentGerman(std::string_view rest, std::size_t token,
                   std::vector<const Morpheme*>& seq, std::vector<Atom>& out) {
  if (rest.empty()) return FoldGerman(seq, token, out);
  // Longest morphemes first.
  std::array<const Morpheme*, kGermanMorphemes.size()> order;
  std::size_t n = 0;
  for (const auto& m : kGermanMorphemes) {
    if (rest.starts_with(m.text)) order[n++] = &m;
  }
  std::sort(order.begin(), order.begin() + n,
            [](const Morpheme* a, const Morpheme* b) {
              return a->text.size() > b->text.size();
            });
  for (std::size_t i = 0; i < n; ++i) {
    seq.push_back(order[i]);
    if (SegmentGerman(rest.substr(order[i]->text.size()), token, seq, out)) {
      return true;
    }
    seq.pop_back();
  }
  return false;
}

std::optional<std::vector<Atom>> AtomizeEnglish(std::string_view surface,
                                                std::string_view lower,
                                                std::size_t token) {
  std::vector<Atom> atoms;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    std::size_t dash = lower.find('-', pos);
    if (dash == std::string_view::npos) dash = lower.size();
    std::string_view piece = lower.substr(pos, dash - pos);
    if (piece.empty()) return std::nullopt;
    auto it = std::find_if(kEnglish.begin(), kEnglish.end(),
                           [&](const Entry& e) { return e.word == piece; });
    if (it == kEnglish.end()) return std::nullopt;
    Atom a{it->kind, it->value, token, piece == "one", {}};
    if (a.kind == AtomKind::kScale) {
      a.word = std::string(surface.substr(pos, dash - pos));
    }
    atoms.push_back(std::move(a));
    pos = dash + 1;
  }
  return atoms;
}

std::optional<std::vector<Atom>> AtomizeGerman(std::string_view surface,
                                               std::string_view lower,
                                               std::size_t token) {
  for (const auto& e : kGermanWhole) {
    if (e.word == lower) {
      Atom a{e.kind, e.value, token, e.value == 1 && e.word != "eins", {}};
      if (a.kind == AtomKind::kScale) a.word = std::string(surface);
      return std::vector<Atom>{std::move(a)};
    }
  }
  std::vector<const Morpheme*> seq;
  std::vector<Atom> atoms;
  if (!SegmentGerman(lower, token, seq, atoms)) return std::nullopt;
  return atoms;
}

}  // namespace

std::optional<std::vector<Atom>> Atomize(std::string_view surface,
                                         std::string_view lowercased,
                                         std::size_t token_index,
                                         Language language) {
  if (lowercased.empty()) return std::nullopt;
  return language == Language::kGerman
             ? AtomizeGerman(surface, lowercased, token_index)
             : AtomizeEnglish(surface, lowercased, token_index);
}

const std::vector<std::string>& EnglishOnes() {
  static const std::vector<std::string> words = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  return words;
}

const std::vector<std::string>& EnglishTens() {
  static const std::vector<std::string> words = {
      "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
      "eighty", "ninety"};
  return words;
}

const std::vector<std::string>& GermanOnes() {
  static const std::vector<std::string> words = {
      "null",     "eins",          "zwei",     "drei",
      "vier",     "f\xC3\xBCnf",   "sechs",    "sieben",
      "acht",     "neun",          "zehn",     "elf",
      "zw\xC3\xB6lf", "dreizehn",  "vierzehn", "f\xC3\xBCnfzehn",
      "sechzehn", "siebzehn",      "achtzehn", "neunzehn"};
  return words;
}

const std::vector<std::string>& GermanTens() {
  static const std::vector<std::string> words = {
      "", "", "zwanzig", "drei\xC3\x9Fig", "vierzig", "f\xC3\xBCnfzig",
      "sechzig", "siebzig", "achtzig", "neunzig"};
  return words;
}

}  // namespace numex::lexicon
