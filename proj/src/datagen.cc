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

#include "numex/datagen.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "numex/errors.h"
#include "numex/extractor.h"
#include "numex/grammar.h"
#include "numex/token.h"
#include "numex/wer.h"

namespace numex {
namespace {

// Words that may sit next to a number inside a spoken expression.
constexpr std::string_view kSpokenVocabulary[] = {
    "a", "a.m", "a.m.", "abend", "abends", "after", "afternoon", "am", "and",
    "at", "before", "der", "dreiviertel", "evening", "fr\xC3\xBCh", "halb",
    "half", "in", "komma", "minus", "minute", "minuten", "minutes", "mittag",
    "mittags", "morgen", "morgens", "morning", "nach", "nachmittag",
    "nachmittags", "nacht", "nachts", "night", "o'clock", "oh", "p.m", "p.m.",
    "past", "pm", "point", "quarter", "the", "till", "to", "tonight", "uhr",
    "und", "viertel", "vor", "vormittag", "vormittags",
};

std::string StripPunctuation(const std::string& word) {
  std::string out;
  for (const Token& t : Tokenize(word)) {
    if (t.is_word) out += t.lowercased;
  }
  return out;
}

bool IsSpokenWord(const std::string& raw, const Locale& locale) {
  const std::string w = StripPunctuation(raw);
  if (w.empty()) return true;
  if (IsNumberWord(w, locale.language()) || locale.IsCurrencyWord(w)) {
    return true;
  }
  return std::find(std::begin(kSpokenVocabulary), std::end(kSpokenVocabulary),
                   w) != std::end(kSpokenVocabulary);
}

bool HasDigitOrSymbol(const std::string& word) {
  for (std::string_view symbol : {"$", "\xE2\x82\xAC", "\xC2\xA3", "\xC2\xA5"}) {
    if (word.find(symbol) != std::string::npos) return true;
  }
  return std::any_of(word.begin(), word.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Largest-remainder apportionment of `groups` over the ratios, each part
// at least 1.
std::array<std::size_t, 3> GroupCounts(std::size_t groups,
                                       const SplitSpec& spec) {
  const std::array<double, 3> ratios = {spec.train, spec.dev, spec.test};
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = ratios[i] * static_cast<double>(groups);
    counts[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    remainders[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  while (assigned < groups) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (remainders[i] > remainders[best] + 1e-12) best = i;
    }
    ++counts[best];
    remainders[best] = -1.0;
    ++assigned;
  }
  for (int i = 0; i < 3; ++i) {
    if (counts[i] == 0) {
      int donor = static_cast<int>(
          std::max_element(counts.begin(), counts.end()) - counts.begin());
      --counts[donor];
      ++counts[i];
    }
  }
  return counts;
}

// Sentence lines from a step-1 answer, list markers removed.
std::vector<std::string> SplitSentences(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = Trim(text.substr(pos, nl - pos));
    std::size_t k = 0;
    while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
      ++k;
    }
    auto space_at = [&line](std::size_t i) {
      return i < line.size() && std::isspace(static_cast<unsigned char>(line[i]));
    };
    if (k > 0 && k < line.size() && (line[k] == '.' || line[k] == ')') &&
        space_at(k + 1)) {
      line = Trim(line.substr(k + 1));
    } else if (!line.empty() && (line[0] == '-' || line[0] == '*') &&
               space_at(1)) {
      line = Trim(line.substr(1));
    }
    if (!line.empty()) out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

// Annotation type for a literal found in a converted sentence. The
// extractor cannot tell a bare year from a bare number, so the requested
// type wins between those two.
ExpressionType AnnotationType(ExpressionType guessed, ExpressionType requested) {
  const auto plain = [](ExpressionType t) {
    return t == ExpressionType::kYear || t == ExpressionType::kQuantity;
  };
  return plain(guessed) && plain(requested) ? requested : guessed;
}

struct PendingSentence {
  std::string text;
  ExpressionType type;
  std::string voice;
};

struct SentenceOutcome {
  std::optional<ManifestRecord> record;
  std::optional<AudioClip> audio;
  std::vector<std::string> errors;
  std::optional<std::string> discard;
  std::size_t calls = 0;
  std::size_t failures = 0;
};

}  // namespace

std::string_view PromptTypeName(ExpressionType type) {
  switch (type) {
    case ExpressionType::kYear:
      return "year";
    case ExpressionType::kTimestamp:
      return "timestamp";
    case ExpressionType::kCurrency:
      return "currency amount";
    case ExpressionType::kQuantity:
      return "quantity";
  }
  return "quantity";
}

std::string BuildSentencePrompt(const SentencePromptSpec& spec) {
  if (spec.n < 1) throw ContractViolation("sentence count must be at least 1");
  const std::string_view type = PromptTypeName(spec.type);
  return fmt::format(
      "Generate {} diverse {}sentences containing a {} written down using "
      "number words.\nWrite one sentence per line. Each sentence must "
      "contain exactly one {} and must not be a list or an enumeration.",
      spec.n, spec.language == Language::kGerman ? "German " : "", type, type);
}

std::string BuildConversionPrompt(ExpressionType type) {
  return fmt::format("Convert the {} in the sentences to numeric literals.",
                     PromptTypeName(type));
}

std::string BuildTimestampPrompt(std::string_view phrase, Language language) {
  if (Trim(std::string(phrase)).empty()) {
    throw ContractViolation("timestamp phrase must not be empty");
  }
  return fmt::format(
      "Generate a {}sentence containing the timestamp {} written down using "
      "number words.",
      language == Language::kGerman ? "German " : "", phrase);
}

bool ValidateRecord(std::string_view verbalized, std::string_view converted,
                    const Locale& locale) {
  if (ExtractNumericLiterals(converted).empty()) return false;
  if (!ExtractNumericLiterals(verbalized).empty()) return false;
  const auto a = SplitWords(verbalized);
  const auto b = SplitWords(converted);
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
    ++prefix;
  }
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  const std::size_t a_end = a.size() - suffix;
  const std::size_t b_end = b.size() - suffix;
  if (prefix == a_end || prefix == b_end) return false;
  for (std::size_t i = prefix; i < a_end; ++i) {
    if (!IsSpokenWord(a[i], locale)) return false;
  }
  bool literal = false;
  for (std::size_t i = prefix; i < b_end; ++i) {
    if (HasDigitOrSymbol(b[i])) {
      literal = true;
    } else if (!IsSpokenWord(b[i], locale)) {
      return false;
    }
  }
  return literal;
}

void SplitSpec::Validate() const {
  if (!(train > 0 && dev > 0 && test > 0) ||
      std::abs(train + dev + test - 1.0) > 1e-6) {
    throw ContractViolation("split ratios must be positive and sum to 1");
  }
}

SplitResult SplitDisjoint(const std::vector<ManifestRecord>& records,
                          const SplitSpec& spec) {
  spec.Validate();
  DisjointSets sets(records.size());
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& e : records[i].expressions) {
      auto [it, inserted] = owner.emplace(e.surface, i);
      if (!inserted) sets.Union(i, it->second);
    }
  }
  // Groups in order of first appearance.
  std::vector<std::size_t> roots;
  std::map<std::size_t, std::size_t> group_of_root;
  std::vector<std::size_t> group(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::size_t r = sets.Find(i);
    auto [it, inserted] = group_of_root.emplace(r, roots.size());
    if (inserted) roots.push_back(r);
    group[i] = it->second;
  }
  const std::size_t groups = roots.size();
  if (groups < 3) {
    throw ContractViolation(fmt::format(
        "need at least 3 surface-form groups to split, found {}", groups));
  }
  std::vector<std::size_t> order(groups);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = groups - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  const auto counts = GroupCounts(groups, spec);
  std::vector<int> split_of_group(groups);
  for (std::size_t k = 0; k < groups; ++k) {
    split_of_group[order[k]] =
        k < counts[0] ? 0 : (k < counts[0] + counts[1] ? 1 : 2);
  }
  SplitResult out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    switch (split_of_group[group[i]]) {
      case 0:
        out.train.push_back(records[i]);
        break;
      case 1:
        out.dev.push_back(records[i]);
        break;
      default:
        out.test.push_back(records[i]);
        break;
    }
  }
  return out;
}

GenerationResult RunGeneration(const GenerationPlan& plan,
                               TextGenerator& text_generator,
                               SpeechSynthesizer& synthesizer) {
  if (plan.voices.empty()) throw ContractViolation("voice list is empty");
  const Locale locale = Locale::ForLanguage(plan.language);
  GenerationResult result;
  std::size_t calls = 0;
  std::size_t failures = 0;

  // Step 1: sentences, in plan order.
  std::vector<std::pair<std::string, ExpressionType>> prompts;
  for (ExpressionType type : plan.types) {
    for (int i = 0; i < plan.prompts_per_type; ++i) {
      prompts.emplace_back(
          BuildSentencePrompt({plan.sentences_per_prompt, type, plan.language}),
          type);
    }
  }
  for (const auto& phrase : plan.timestamp_phrases) {
    prompts.emplace_back(BuildTimestampPrompt(phrase, plan.language),
                         ExpressionType::kTimestamp);
  }
  std::mt19937_64 voice_rng(plan.seed);
  std::uniform_int_distribution<std::size_t> voice_pick(0,
                                                        plan.voices.size() - 1);
  std::vector<PendingSentence> pending;
  for (const auto& [prompt, type] : prompts) {
    ++result.stats.prompts_issued;
    ++calls;
    std::string answer;
    try {
      answer = text_generator.Complete(prompt);
    } catch (const std::exception& e) {
      ++failures;
      result.errors.push_back(fmt::format("sentence prompt failed: {}", e.what()));
      continue;
    }
    for (auto& s : SplitSentences(answer)) {
      pending.push_back({std::move(s), type, plan.voices[voice_pick(voice_rng)]});
    }
  }
  result.stats.sentences = pending.size();

  // Steps 2 and 3 per sentence, concurrently.
  std::vector<SentenceOutcome> outcomes(pending.size());
  auto process = [&](std::size_t i) {
    const PendingSentence& p = pending[i];
    SentenceOutcome& out = outcomes[i];
    ++out.calls;
    try {
      out.audio = synthesizer.Synthesize(p.text, p.voice);
    } catch (const std::exception& e) {
      ++out.failures;
      out.errors.push_back(fmt::format("speech for '{}' failed: {}", p.text,
                                       e.what()));
      return;
    }
    ++out.calls;
    std::string converted;
    try {
      auto lines = SplitSentences(text_generator.Complete(
          BuildConversionPrompt(p.type) + "\n\n" + p.text));
      if (!lines.empty()) converted = lines.front();
    } catch (const std::exception& e) {
      ++out.failures;
      out.errors.push_back(fmt::format("conversion of '{}' failed: {}",
                                       p.text, e.what()));
      return;
    }
    if (!ValidateRecord(p.text, converted, locale)) {
      out.discard = fmt::format("'{}' -> '{}'", p.text, converted);
      return;
    }
    ManifestRecord r;
    r.locale = plan.language;
    r.type = p.type;
    r.verbalized = p.text;
    r.formatted = converted;
    for (const auto& lit : ExtractNumericLiterals(converted)) {
      r.expressions.push_back(
          {lit.text, AnnotationType(lit.guessed_type, p.type)});
    }
    r.voice = p.voice;
    out.record = std::move(r);
  };
  const std::size_t workers = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(plan.max_concurrency, 1)), 1,
      std::max<std::size_t>(pending.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < pending.size(); i = next++) process(i);
    });
  }
  for (auto& t : threads) t.join();

  // Single writer: ids, audio files and statistics in sentence order.
  std::map<std::string, double> seconds_by_id;
  for (auto& out : outcomes) {
    calls += out.calls;
    failures += out.failures;
    for (auto& e : out.errors) result.errors.push_back(std::move(e));
    if (out.discard) {
      ++result.stats.discarded;
      result.discards.push_back(std::move(*out.discard));
    }
    if (!out.record) continue;
    ManifestRecord& r = *out.record;
    r.id = fmt::format("{}-{}-{:06}", plan.id_prefix,
                       LanguageCode(plan.language), result.records.size() + 1);
    if (plan.audio_dir && out.audio && synthesizer.produces_audio()) {
      std::filesystem::create_directories(*plan.audio_dir);
      const auto path = std::filesystem::path(*plan.audio_dir) /
                        (r.id + "." + out.audio->format);
      std::ofstream f(path, std::ios::binary);
      f.write(out.audio->bytes.data(),
              static_cast<std::streamsize>(out.audio->bytes.size()));
      if (!f) throw std::runtime_error("cannot write " + path.string());
      r.audio = path.string();
    }
    seconds_by_id[r.id] = out.audio ? out.audio->duration_seconds : 0.0;
    result.records.push_back(std::move(r));
  }
  result.stats.client_errors = failures;
  result.stats.kept = result.records.size();
  if (calls > 0 && failures == calls) {
    throw ClientError(fmt::format("all {} client calls failed; first: {}",
                                  calls, result.errors.front()));
  }

  auto add_set = [&](const std::string& name,
                     const std::vector<ManifestRecord>& records) {
    SetStatistics s{name, records.size(), 0.0};
    for (const auto& r : records) s.hours += seconds_by_id[r.id] / 3600.0;
    result.stats.sets.push_back(s);
  };
  if (plan.split) {
    try {
      result.splits = SplitDisjoint(result.records, *plan.split);
    } catch (const ContractViolation& e) {
      result.errors.push_back(fmt::format("split skipped: {}", e.what()));
    }
  }
  if (result.splits) {
    add_set("Training", result.splits->train);
    add_set("Development", result.splits->dev);
    add_set("Test", result.splits->test);
  } else {
    add_set("All", result.records);
  }
  return result;
}

std::string RenderGenerationTable(const GenerationStats& stats) {
  std::size_t w = 3;
  for (const auto& s : stats.sets) w = std::max(w, s.name.size());
  std::string out = fmt::format("| {:<{}} | Utterances | Hours |\n", "Set", w);
  out += fmt::format("|{}|------------|-------|\n", std::string(w + 2, '-'));
  for (const auto& s : stats.sets) {
    out += fmt::format("| {:<{}} | {:>10} | {:>5.2f} |\n", s.name, w,
                       s.utterances, s.hours);
  }
  return out;
}

}  // namespace numex
