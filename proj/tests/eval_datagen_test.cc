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

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "numex/batch.h"
#include "numex/clients.h"
#include "numex/datagen.h"
#include "numex/errors.h"
#include "numex/manifest.h"
#include "numex/normalizer.h"
#include "numex/report.h"

namespace numex {
namespace {

ManifestRecord Record(std::string id, ExpressionType type, std::string spoken,
                      std::string written, std::string surface) {
  ManifestRecord r;
  r.id = std::move(id);
  r.type = type;
  r.verbalized = std::move(spoken);
  r.formatted = std::move(written);
  r.expressions = {{std::move(surface), type}};
  return r;
}

std::vector<ManifestRecord> GoldenCorpus() {
  return {
      Record("a", ExpressionType::kYear, "in nineteen forty-five", "in 1945",
             "1945"),
      Record("b", ExpressionType::kTimestamp,
             "at quarter to eight in the evening", "at 19:45", "19:45"),
      Record("c", ExpressionType::kCurrency,
             "one thousand dollars and fifty cents", "$1,000.50", "$1,000.50"),
      Record("d", ExpressionType::kQuantity, "two thousand pieces",
             "2,000 pieces", "2,000 pieces"),
  };
}

TEST(ManifestTest, RoundTrip) {
  ManifestRecord r = GoldenCorpus()[2];
  r.locale = Language::kGerman;
  r.audio = "audio/c.wav";
  r.voice = "nova";
  EXPECT_EQ(ParseRecord(SerializeRecord(r), 1), r);
  EXPECT_EQ(SerializeRecord(r).find('\n'), std::string::npos);
}

TEST(ManifestTest, ParseErrorsCarryLine) {
  try {
    std::istringstream in(SerializeRecord(GoldenCorpus()[0]) +
                          "\n\n{\"id\": 3}\n");
    ReadManifest(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ReportTest, DelimitedMatch) {
  EXPECT_TRUE(ContainsDelimited("at 19:45.", "19:45"));
  EXPECT_FALSE(ContainsDelimited("at 119:45", "19:45"));
  EXPECT_FALSE(ContainsDelimited("$1,000.505", "$1,000.50"));
  EXPECT_TRUE(ContainsDelimited("$1,000.50", "$1,000.50"));
}

TEST(ReportTest, SelfConsistency) {
  const auto corpus = GoldenCorpus();
  std::vector<std::string> hyps;
  for (const auto& r : corpus) hyps.push_back(r.formatted);
  const EvalReport report = TypeAccuracy(corpus, hyps);
  for (ExpressionType t : kAllExpressionTypes) {
    EXPECT_EQ(report.counts(t).accuracy(), 1.0);
  }
  EXPECT_EQ(report.wer(), 0.0);
  EXPECT_EQ(EvaluateCorpus(corpus, hyps), report);
  EXPECT_EQ(reference::EvaluateCorpus(corpus, hyps), report);
}

TEST(ReportTest, WrongFormatIsIncorrect) {
  auto corpus = GoldenCorpus();
  std::vector<std::string> hyps = {"in 1945", "at 7:45 pm", "$1,000.50",
                                   "2000 pieces"};
  const EvalReport report = TypeAccuracy(corpus, hyps);
  EXPECT_EQ(report.counts(ExpressionType::kTimestamp).correct, 0u);
  EXPECT_EQ(report.counts(ExpressionType::kQuantity).correct, 0u);
  EXPECT_EQ(report.counts(ExpressionType::kYear).correct, 1u);
  EXPECT_THROW(TypeAccuracy(corpus, {"x"}), ContractViolation);
}

TEST(ReportTest, Rendering) {
  EXPECT_EQ(FormatPercent(0.9575), "95.8");
  EXPECT_EQ(FormatPercent(0.0), "0.0");
  EXPECT_EQ(FormatPercent(1.0), "100.0");
  EvalReport r;
  r.counts(ExpressionType::kYear) = {9, 10};
  r.counts(ExpressionType::kTimestamp) = {1, 4};
  r.word_edits = 3;
  r.reference_words = 40;
  const std::string table = RenderReport(r, ReportFormat::kTable, "demo");
  EXPECT_NE(table.find("demo"), std::string::npos);
  EXPECT_NE(table.find("90.0"), std::string::npos);
  EXPECT_NE(table.find("25.0"), std::string::npos);
  EXPECT_NE(table.find("57.5"), std::string::npos);
  EXPECT_EQ(ParseReportTsv(RenderReport(r, ReportFormat::kTsv)), r);
}

TEST(PromptTest, Templates) {
  EXPECT_EQ(BuildConversionPrompt(ExpressionType::kCurrency),
            "Convert the currency amount in the sentences to numeric "
            "literals.");
  const std::string p =
      BuildSentencePrompt({5, ExpressionType::kYear, Language::kGerman});
  EXPECT_EQ(p.rfind("Generate 5 diverse German sentences containing a year "
                    "written down using number words.",
                    0),
            0u);
}

TEST(ValidateTest, Filters) {
  const Locale en = Locale::English();
  EXPECT_TRUE(ValidateRecord("in nineteen forty-five", "in 1945", en));
  EXPECT_TRUE(ValidateRecord("It cost fifty point eight million dollars.",
                             "It cost $50.8 million.", en));
  EXPECT_TRUE(ValidateRecord("at two oh three pm", "at 14:03", en));
  EXPECT_FALSE(ValidateRecord("in 1945", "in 1945", en));
  EXPECT_FALSE(ValidateRecord("in nineteen forty-five", "in the year", en));
  EXPECT_FALSE(ValidateRecord("he went home", "she went away 5", en));
}

std::vector<ManifestRecord> SyntheticManifest(std::size_t n) {
  std::vector<ManifestRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    ManifestRecord r;
    r.id = "r" + std::to_string(i);
    r.type = kAllExpressionTypes[i % 4];
    const std::string a = std::to_string(i % 700);
    const std::string b = std::to_string((i * 7) % 900);
    r.verbalized = "words";
    r.formatted = a + " and " + b;
    r.expressions = {{a, r.type}, {b, r.type}};
    out.push_back(std::move(r));
  }
  return out;
}

TEST(SplitTest, DisjointAndDeterministic) {
  const auto records = SyntheticManifest(600);
  const SplitResult s = SplitDisjoint(records, {0.8, 0.1, 0.1, 3});
  EXPECT_EQ(s.train.size() + s.dev.size() + s.test.size(), records.size());
  auto surfaces = [](const std::vector<ManifestRecord>& set) {
    std::set<std::string> out;
    for (const auto& r : set)
      for (const auto& e : r.expressions) out.insert(e.surface);
    return out;
  };
  const auto a = surfaces(s.train), b = surfaces(s.dev), c = surfaces(s.test);
  for (const auto& x : a) {
    EXPECT_FALSE(b.count(x));
    EXPECT_FALSE(c.count(x));
  }
  for (const auto& x : b) EXPECT_FALSE(c.count(x));
  const SplitResult again = SplitDisjoint(records, {0.8, 0.1, 0.1, 3});
  EXPECT_EQ(again.train, s.train);
  EXPECT_EQ(again.test, s.test);
  EXPECT_THROW(SplitDisjoint(records, {0.5, 0.1, 0.1, 0}), ContractViolation);
}

TEST(GenerationTest, CannedPairs) {
  // Echoes the formatting-table pairs: sentences in step 1, written forms in
  // step 3.
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  const std::map<Language, Pairs> canned = {
      {Language::kEnglish,
       {{"in nineteen forty-five", "in 1945"},
        {"at quarter to eight in the evening", "at 19:45"},
        {"one thousand dollars and fifty cents", "$1,000.50"},
        {"two thousand pieces", "2,000 pieces"}}},
      {Language::kGerman,
       {{"eintausend Euro und f\xC3\xBC" "nfzig Cent", "1.000,50\xE2\x82\xAC"},
        {"zweitausend Teile", "2.000 Teile"}}},
  };
  std::size_t total = 0;
  for (const auto& [lang, pairs] : canned) {
    CallbackTextGenerator gen([&pairs = pairs](const std::string& prompt) {
      std::string out;
      if (prompt.rfind("Generate", 0) == 0) {
        for (const auto& p : pairs) out += p.first + "\n";
        return out;
      }
      for (const auto& p : pairs) {
        if (prompt.find(p.first) != std::string::npos) return p.second;
      }
      return std::string("?");
    });
    MockSpeechSynthesizer tts;
    GenerationPlan plan;
    plan.language = lang;
    plan.types = {ExpressionType::kYear};
    plan.sentences_per_prompt = static_cast<int>(pairs.size());
    plan.max_concurrency = 2;
    const GenerationResult r = RunGeneration(plan, gen, tts);
    EXPECT_EQ(r.stats.discarded, 0u);
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      EXPECT_EQ(r.records[i].formatted, pairs[i].second);
    }
    total += r.records.size();
  }
  EXPECT_EQ(total, 6u);
}

TEST(GenerationTest, AllCallsFailing) {
  CallbackTextGenerator gen([](const std::string&) -> std::string {
    throw ClientError("offline");
  });
  MockSpeechSynthesizer tts;
  EXPECT_THROW(RunGeneration(GenerationPlan{}, gen, tts), ClientError);
}

TEST(GenerationTest, VerbalizerMockAgreesWithNormalizer) {
  const Locale locale = Locale::English();
  VerbalizerTextGenerator gen(locale, 11);
  MockSpeechSynthesizer tts;
  GenerationPlan plan;
  plan.prompts_per_type = 2;
  plan.sentences_per_prompt = 10;
  plan.split = SplitSpec{};
  const GenerationResult r = RunGeneration(plan, gen, tts);
  ASSERT_FALSE(r.records.empty());
  for (const auto& rec : r.records) {
    EXPECT_EQ(NormalizeSentence(rec.verbalized, locale).text, rec.formatted)
        << rec.verbalized;
  }
  ASSERT_TRUE(r.splits);
  EXPECT_EQ(r.stats.sets.size(), 3u);
  EXPECT_NE(RenderGenerationTable(r.stats).find("Training"), std::string::npos);
}

TEST(ClientTest, WavDuration) {
  auto le32 = [](std::uint32_t v) {
    std::string s(4, '\0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    return s;
  };
  std::string wav = "RIFF" + le32(36 + 32000) + "WAVE" + "fmt " + le32(16);
  wav += std::string("\x01\x00\x01\x00", 4) + le32(8000) + le32(16000) +
         std::string("\x02\x00\x10\x00", 4);
  wav += "data" + le32(32000) + std::string(32000, '\0');
  EXPECT_DOUBLE_EQ(WavDurationSeconds(wav), 2.0);
  EXPECT_EQ(WavDurationSeconds("not audio"), 0.0);
}

TEST(ClientTest, ConfigKeys) {
  Config c;
  c.Set("llm.base_url", "http://localhost:9/v1");
  c.Set("llm.model", "m");
  c.Set("llm.retries", "0");
  const ClientConfig cc = ClientConfig::FromConfig(c, "llm");
  EXPECT_EQ(cc.base_url, "http://localhost:9/v1");
  EXPECT_EQ(cc.retries, 0);
  HttpTextGenerator http(cc);
  EXPECT_THROW(http.Complete("hi"), ClientError);
}

}  // namespace
}  // namespace numex
