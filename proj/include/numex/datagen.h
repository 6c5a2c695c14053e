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

#ifndef NUMEX_DATAGEN_H_
#define NUMEX_DATAGEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numex/clients.h"
#include "numex/locale.h"
#include "numex/manifest.h"
#include "numex/types.h"

namespace numex {

struct SentencePromptSpec {
  int n = 1;
  ExpressionType type = ExpressionType::kYear;
  Language language = Language::kEnglish;
};

// "year", "timestamp", "currency amount", "quantity".
std::string_view PromptTypeName(ExpressionType type);

// Throws ContractViolation when n < 1.
std::string BuildSentencePrompt(const SentencePromptSpec& spec);
std::string BuildConversionPrompt(ExpressionType type);
// Throws ContractViolation for an empty phrase.
std::string BuildTimestampPrompt(std::string_view phrase, Language language);

// Accepts a generated pair when the converted sentence has a digit literal,
// the verbalized one has none, and the two differ only in one stretch made
// of spoken number vocabulary on the verbalized side.
bool ValidateRecord(std::string_view verbalized, std::string_view converted,
                    const Locale& locale);

struct SplitSpec {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;

  // Throws ContractViolation unless all ratios are positive and sum to 1.
  void Validate() const;
};

struct SplitResult {
  std::vector<ManifestRecord> train;
  std::vector<ManifestRecord> dev;
  std::vector<ManifestRecord> test;
};

// Records sharing an expression surface form are grouped (transitively) and
// each group goes whole into one split, so the surface sets of the three
// splits are pairwise disjoint. Group counts follow the ratios by largest
// remainder with every split non-empty; which group lands where is a seeded
// shuffle. Records keep their input order inside a split. Throws
// ContractViolation for fewer than 3 groups.
SplitResult SplitDisjoint(const std::vector<ManifestRecord>& records,
                          const SplitSpec& spec);

struct GenerationPlan {
  Language language = Language::kEnglish;
  std::vector<ExpressionType> types = {
      ExpressionType::kYear, ExpressionType::kTimestamp,
      ExpressionType::kCurrency, ExpressionType::kQuantity};
  int prompts_per_type = 1;
  int sentences_per_prompt = 5;
  // Extra single-sentence timestamp prompts, one per phrase.
  std::vector<std::string> timestamp_phrases;
  std::vector<std::string> voices = {"alloy", "echo",  "fable",
                                     "onyx",  "nova",  "shimmer"};
  std::uint64_t seed = 0;
  int max_concurrency = 4;
  std::string id_prefix = "utt";
  // Audio files go to <audio_dir>/<id>.<format> when set and the
  // synthesizer produces real audio.
  std::optional<std::string> audio_dir;
  // Split used for the statistics table; skipped when the data has fewer
  // than three surface groups.
  std::optional<SplitSpec> split;
};

struct SetStatistics {
  std::string name;
  std::size_t utterances = 0;
  double hours = 0.0;
};

struct GenerationStats {
  std::size_t prompts_issued = 0;  // step-1 prompts
  std::size_t sentences = 0;       // sentences returned by step 1
  std::size_t kept = 0;
  std::size_t discarded = 0;
  std::size_t client_errors = 0;
  std::vector<SetStatistics> sets;
};

struct GenerationResult {
  std::vector<ManifestRecord> records;
  std::optional<SplitResult> splits;
  GenerationStats stats;
  std::vector<std::string> errors;    // per-call client failures
  std::vector<std::string> discards;  // sentences rejected by validation
};

// Step 1 prompts are issued in plan order; audio synthesis and conversion
// for the resulting sentences run concurrently up to max_concurrency.
// Output is deterministic for deterministic clients. Throws ClientError when
// every client call failed.
GenerationResult RunGeneration(const GenerationPlan& plan,
                               TextGenerator& text_generator,
                               SpeechSynthesizer& synthesizer);

// "Set | Utterances | Hours" table.
std::string RenderGenerationTable(const GenerationStats& stats);

}  // namespace numex

#endif  // NUMEX_DATAGEN_H_
