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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass. Limits are fixed below and never relaxed at runtime.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "numex/clients.h"
#include "numex/datagen.h"
#include "numex/extractor.h"
#include "numex/formatter.h"
#include "numex/grammar.h"
#include "numex/guard.h"
#include "numex/normalizer.h"
#include "numex/report.h"
#include "numex/token.h"
#include "numex/verbalizer.h"
#include "numex/wer.h"
#include "oracles.h"

namespace numex {
namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kCardinalSeconds = 60.0;
constexpr double kTimestampSeconds = 60.0;
constexpr int kCardinalMax = 99'999;
constexpr int kWerMaxLength = 6;
constexpr int kWerAlphabet = 3;
constexpr int kGuardPairs = 1'000;
constexpr double kGuardThreshold = 0.5;
constexpr int kExtractorRecallCases = 10'000;
constexpr int kExtractorPrecisionCases = 1'000;
constexpr std::size_t kSplitRecords = 5'000;
constexpr int kIdempotenceSentences = 1'000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

Outcome Golden() {
  const Locale en = Locale::English();
  const Locale de = Locale::German();
  struct Case {
    const Locale* locale;
    std::string in;
    std::string out;
  };
  const std::vector<Case> cases = {
      {&en, "in nineteen forty-five", "in 1945"},
      {&en, "at quarter to eight in the evening", "at 19:45"},
      {&en, "one thousand dollars and fifty cents", "$1,000.50"},
      {&de, "eintausend Euro und f\xC3\xBCnfzig Cent", "1.000,50\xE2\x82\xAC"},
      {&en, "two thousand pieces", "2,000 pieces"},
      {&de, "zweitausend Teile", "2.000 Teile"},
      {&de, "Ich habe bis f\xC3\xBCnfzehn Uhr f\xC3\xBCnfundvierzig Zeit.",
       "Ich habe bis 15:45 Zeit."},
      {&en, "Try to come at 4pm as you can at 10am.",
       "Try to come at 16:00 as you can at 10:00."},
      {&en, "The bus leaves at five past seven.", "The bus leaves at 7:05."},
      {&en, "They raised nine point one million dollars.",
       "They raised $9.1 million."},
      {&en, "The library opens at 10 o'clock.", "The library opens at 10:00."},
  };
  const auto start = std::chrono::steady_clock::now();
  std::size_t ok = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    const std::string got = NormalizeSentence(c.in, *c.locale).text;
    if (got == c.out) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = fmt::format("; '{}' -> '{}'", c.in, got);
    }
  }
  const double secs = Seconds(start);
  return {ok == cases.size() && secs < kGoldenSeconds,
          fmt::format("{}/{} exact, {:.3f}s (limit {}s){}", ok, cases.size(),
                      secs, kGoldenSeconds, first_bad)};
}

Outcome CardinalRoundTrip() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0, ok = 0;
  std::string first_bad;
  for (Language lang : {Language::kEnglish, Language::kGerman}) {
    const Locale locale = Locale::ForLanguage(lang);
    for (int n = 0; n <= kCardinalMax; ++n) {
      ++cases;
      const std::string words = VerbalizeInteger(n, lang);
      const auto tokens = Tokenize(words);
      const auto c = ParseCardinal(tokens, 0, locale);
      if (c && c->span.end == tokens.size() &&
          c->number() == NumericValue::Integer(n)) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = fmt::format("; first failure {} '{}'", n, words);
      }
    }
  }
  const double secs = Seconds(start);
  return {ok == cases && cases == 200'000 && secs < kCardinalSeconds,
          fmt::format("{}/{} round trips, {:.2f}s (limit {}s){}", ok, cases,
                      secs, kCardinalSeconds, first_bad)};
}

Outcome TimestampRoundTrip() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0, ok = 0;
  std::string first_bad;
  for (Language lang : {Language::kEnglish, Language::kGerman}) {
    const Locale locale = Locale::ForLanguage(lang);
    const std::string before =
        lang == Language::kGerman ? "Der Zug f\xC3\xA4hrt um " : "The train leaves at ";
    for (int m = 0; m < 24 * 60; ++m) {
      const TimeOfDay t{m / 60, m % 60};
      const std::string want = FormatTime(t);
      for (TimestampFamily f : ApplicableFamilies(t, lang)) {
        const std::string spoken = VerbalizeTime(t, lang, f);
        // Bare phrase and phrase inside a carrier sentence.
        for (const auto& [in, out] :
             {std::pair{spoken, want},
              std::pair{before + spoken + ".", before + want + "."}}) {
          ++cases;
          const std::string got = NormalizeSentence(in, locale).text;
          if (got == out) {
            ++ok;
          } else if (first_bad.empty()) {
            first_bad = fmt::format("; '{}' -> '{}' [{}]", in, got,
                                    TimestampFamilyName(f));
          }
        }
      }
    }
  }
  const double secs = Seconds(start);
  return {ok == cases && secs < kTimestampSeconds,
          fmt::format("{}/{} phrasings, {:.2f}s (limit {}s){}", ok, cases,
                      secs, kTimestampSeconds, first_bad)};
}

Outcome WerOracle() {
  const auto all = oracle::AllSequences(kWerAlphabet, kWerMaxLength);
  std::vector<std::string> texts;
  for (const auto& s : all) {
    std::string t;
    for (int x : s) {
      if (!t.empty()) t += ' ';
      t += static_cast<char>('a' + x);
    }
    texts.push_back(std::move(t));
  }
  std::size_t pairs = 0, ok = 0;
  std::string first_bad;
  for (std::size_t r = 0; r < all.size(); ++r) {
    const auto dist = oracle::EditDistancesFrom(all[r], kWerAlphabet,
                                                kWerMaxLength);
    for (std::size_t h = 0; h < all.size(); ++h) {
      ++pairs;
      const WerResult w = WordErrorRate(texts[r], texts[h]);
      const std::size_t edits = static_cast<std::size_t>(dist.at(all[h]));
      const double expected = static_cast<double>(edits) /
                              static_cast<double>(std::max<std::size_t>(
                                  all[r].size(), 1));
      if (w.edits() == edits && w.value() == expected) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = fmt::format("; '{}' vs '{}': {} != {}", texts[r],
                                texts[h], w.edits(), edits);
      }
    }
  }
  return {ok == pairs, fmt::format("{}/{} pairs equal to exhaustive search{}",
                                   ok, pairs, first_bad)};
}

Outcome GuardLaw() {
  std::mt19937_64 rng(20240501);
  const std::vector<std::string> vocab = {"the", "bus", "leaves", "at",
                                          "seven", "7:05", "in", "1945",
                                          "morning", "and"};
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto join = [](const std::vector<std::string>& w) {
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  bool default_ok = GuardConfig{}.threshold == kGuardThreshold;
  std::size_t ok = 0, boundary = 0, kept = 0;
  std::string first_bad;
  for (int i = 0; i < kGuardPairs; ++i) {
    std::vector<std::string> ref(1 + pick(12));
    for (auto& w : ref) w = vocab[pick(vocab.size())];
    std::vector<std::string> hyp = ref;
    if (i % 5 == 0) {
      // WER exactly 0.5: even length, half the words replaced by unseen ones.
      if (ref.size() % 2) ref.push_back(vocab[pick(vocab.size())]);
      hyp = ref;
      std::vector<std::size_t> pos(ref.size());
      for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = k;
      std::shuffle(pos.begin(), pos.end(), rng);
      for (std::size_t k = 0; k < ref.size() / 2; ++k) {
        hyp[pos[k]] = fmt::format("x{}", k);
      }
    } else {
      const std::size_t edits = pick(ref.size() + 3);
      for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t op = pick(3);
        if (op == 0 && !hyp.empty()) {
          hyp.erase(hyp.begin() + pick(hyp.size()));
        } else if (op == 1 && !hyp.empty()) {
          hyp[pick(hyp.size())] = vocab[pick(vocab.size())];
        } else {
          hyp.insert(hyp.begin() + pick(hyp.size() + 1),
                     vocab[pick(vocab.size())]);
        }
      }
    }
    const std::size_t d = oracle::GridEditDistance(ref, hyp);
    // kept iff d / |ref| <= 1/2, compared in integers.
    const bool expect_kept = 2 * d <= ref.size();
    if (2 * d == ref.size()) ++boundary;
    const std::string original = join(ref), segmented = join(hyp);
    const GuardDecision g = Guard(original, segmented);
    const bool right = g.kept == expect_kept && g.wer.edits() == d &&
                       g.returned_text == (expect_kept ? segmented : original);
    if (right) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = fmt::format("; '{}' vs '{}'", original, segmented);
    }
    kept += g.kept;
  }
  return {default_ok && ok == kGuardPairs && boundary > 0,
          fmt::format("{}/{} decisions match, {} at WER=0.5 (all must be "
                      "kept), {} kept, default threshold {}{}",
                      ok, kGuardPairs, boundary, kept, GuardConfig{}.threshold,
                      first_bad)};
}

const std::vector<std::pair<std::string, std::string>> kCarriers = {
    {"Look: ", "."},
    {"We noted ", " in the log."},
    {"(", ")"},
    {"Der Wert war ", ", sagte sie."},
    {"", ""},
    {"It says \"", "\" on the sign."},
};

Outcome Extractor() {
  std::mt19937_64 rng(99);
  std::size_t found = 0;
  std::string first_bad;
  for (int i = 0; i < kExtractorRecallCases; ++i) {
    const Locale locale =
        Locale::ForLanguage(i % 2 ? Language::kGerman : Language::kEnglish);
    const ParsedExpression e = oracle::RandomExpression(rng, locale);
    const std::string literal = FormatExpression(e, locale);
    std::string core = literal;
    if (const auto* q = std::get_if<QuantityPayload>(&e.payload)) {
      core = literal.substr(0, literal.size() - q->unit_word.size() - 1);
    }
    const auto& [before, after] = kCarriers[i % kCarriers.size()];
    const std::string sentence = before + literal + after;
    const auto matches = ExtractNumericLiterals(sentence);
    const bool hit = std::any_of(matches.begin(), matches.end(), [&](const auto& m) {
      return m.begin == before.size() && m.text == core;
    });
    if (hit) {
      ++found;
    } else if (first_bad.empty()) {
      first_bad = fmt::format("; missed '{}' in '{}'", core, sentence);
    }
  }
  const std::vector<std::string> words = {
      "the", "report", "was", "late", "again", "Die", "Stra\xC3\x9F" "e",
      "war", "nass", "COVID", "e.g.", "Mr.", "A.M.", "U.S.", "x-ray",
      "caf\xC3\xA9", "\xC3\x9C" "bung", "naive", "--", "...", "&", "co-op",
      "Q&A", "v.", "No.", "a.m.", "\xE2\x82\xAC", "$", "per-cent", "I.D."};
  const std::vector<std::string> marks = {"", ",", ".", ";", ":", "!", "?"};
  std::size_t false_positives = 0, sentences = 0;
  std::string first_fp;
  for (int i = 0; i < kExtractorPrecisionCases; ++i) {
    std::string s;
    const std::size_t n = 3 + rng() % 10;
    for (std::size_t k = 0; k < n; ++k) {
      if (!s.empty()) s += ' ';
      s += words[rng() % words.size()] + marks[rng() % marks.size()];
    }
    ++sentences;
    const auto m = ExtractNumericLiterals(s);
    if (!m.empty()) {
      false_positives += m.size();
      if (first_fp.empty()) first_fp = fmt::format("; '{}' in '{}'", m[0].text, s);
    }
  }
  return {found == static_cast<std::size_t>(kExtractorRecallCases) &&
              false_positives == 0,
          fmt::format("recall {}/{}, false positives {} on {} number-free "
                      "sentences{}{}",
                      found, kExtractorRecallCases, false_positives, sentences,
                      first_bad, first_fp)};
}

std::vector<ManifestRecord> SyntheticManifest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ManifestRecord> out;
  for (std::size_t i = 0; i < kSplitRecords; ++i) {
    ManifestRecord r;
    r.id = fmt::format("rec-{:05}", i);
    r.type = kAllExpressionTypes[i % 4];
    r.verbalized = "sentence";
    const std::size_t n = 1 + rng() % 2;
    for (std::size_t k = 0; k < n; ++k) {
      // 12,000 distinct surfaces: frequent repeats, small components.
      const std::string surface = std::to_string(1000 + rng() % 12'000);
      r.formatted += (r.formatted.empty() ? "" : " and ") + surface;
      r.expressions.push_back({surface, r.type});
    }
    out.push_back(std::move(r));
  }
  return out;
}

Outcome Split() {
  const auto records = SyntheticManifest(5);
  const SplitSpec spec{0.8, 0.1, 0.1, 42};
  const SplitResult a = SplitDisjoint(records, spec);
  const SplitResult b = SplitDisjoint(records, spec);
  std::multiset<std::string> ids;
  for (const auto* set : {&a.train, &a.dev, &a.test}) {
    for (const auto& r : *set) ids.insert(r.id);
  }
  std::set<std::string> input_ids;
  for (const auto& r : records) input_ids.insert(r.id);
  const bool partition =
      ids.size() == records.size() &&
      std::set<std::string>(ids.begin(), ids.end()) == input_ids;
  auto surfaces = [](const std::vector<ManifestRecord>& set) {
    std::set<std::string> s;
    for (const auto& r : set)
      for (const auto& e : r.expressions) s.insert(e.surface);
    return s;
  };
  const auto s1 = surfaces(a.train), s2 = surfaces(a.dev), s3 = surfaces(a.test);
  std::size_t shared = 0;
  for (const auto& x : s1) shared += s2.count(x) + s3.count(x);
  for (const auto& x : s2) shared += s3.count(x);
  const bool same = a.train == b.train && a.dev == b.dev && a.test == b.test;
  const bool nonempty = !a.train.empty() && !a.dev.empty() && !a.test.empty();
  return {partition && shared == 0 && same && nonempty,
          fmt::format("{} records -> {}/{}/{}, partition {}, shared surfaces "
                      "{}, reproducible {}",
                      records.size(), a.train.size(), a.dev.size(),
                      a.test.size(), partition ? "yes" : "no", shared,
                      same ? "yes" : "no")};
}

std::vector<ManifestRecord> g_generated;  // reused by the eval criterion

Outcome PipelineAgreement() {
  std::size_t total = 0, agree = 0, discarded = 0;
  std::string first_bad;
  for (Language lang : {Language::kEnglish, Language::kGerman}) {
    const Locale locale = Locale::ForLanguage(lang);
    VerbalizerTextGenerator gen(locale, lang == Language::kGerman ? 2 : 1);
    MockSpeechSynthesizer tts;
    GenerationPlan plan;
    plan.language = lang;
    plan.prompts_per_type = 5;
    plan.sentences_per_prompt = 10;
    plan.seed = 7;
    for (const auto& p : EnumerateTimestampPhrasings(locale)) {
      plan.timestamp_phrases.push_back(p.phrase);
    }
    const GenerationResult r = RunGeneration(plan, gen, tts);
    discarded += r.stats.discarded;
    for (const auto& rec : r.records) {
      ++total;
      const std::string got = NormalizeSentence(rec.verbalized, locale).text;
      if (got == rec.formatted) {
        ++agree;
      } else if (first_bad.empty()) {
        first_bad = fmt::format("; '{}' -> '{}' vs '{}'", rec.verbalized, got,
                                rec.formatted);
      }
      g_generated.push_back(rec);
    }
  }
  return {total > 0 && agree == total,
          fmt::format("{}/{} records agree ({} discarded){}", agree, total,
                      discarded, first_bad)};
}

// Last cell of the last table row, padding removed.
std::string LastCell(const std::string& table) {
  std::string row = table.substr(0, table.find_last_not_of('\n') + 1);
  row = row.substr(row.rfind('\n') + 1);
  row = row.substr(0, row.find_last_of('|'));
  row = row.substr(row.find_last_of('|') + 1);
  const auto b = row.find_first_not_of(' ');
  const auto e = row.find_last_not_of(' ');
  return b == std::string::npos ? "" : row.substr(b, e - b + 1);
}

Outcome EvalSelfConsistency() {
  std::vector<std::string> hyps;
  for (const auto& r : g_generated) hyps.push_back(r.formatted);
  const EvalReport report = TypeAccuracy(g_generated, hyps);
  bool all_full = !g_generated.empty();
  std::size_t present = 0;
  for (ExpressionType t : kAllExpressionTypes) {
    if (const auto acc = report.counts(t).accuracy()) {
      ++present;
      all_full &= FormatPercent(*acc) == "100.0";
    }
  }
  const std::string table = RenderReport(report, ReportFormat::kTable, "self");
  const bool layout =
      table.find("Model || WER (%) | Accuracy (%) years | Accuracy (%) "
                 "timestamps | Accuracy (%) currency amounts | Accuracy (%) "
                 "quantities || Accuracy (%) average |") != std::string::npos;
  // Published rows (years, timestamps, currency, quantities -> average).
  const std::vector<std::array<int, 5>> rows = {
      {974, 34, 363, 933, 576},  {743, 10, 44, 86, 221},
      {966, 203, 711, 914, 699}, {958, 392, 733, 933, 754},
      {966, 649, 793, 963, 843}, {955, 784, 948, 994, 920},
      {955, 838, 956, 994, 936}, {977, 639, 970, 994, 895},
      {977, 759, 985, 994, 929}};
  std::size_t spot_ok = 0;
  for (const auto& row : rows) {
    EvalReport r;
    for (std::size_t t = 0; t < 4; ++t) r.per_type[t] = {std::size_t(row[t]), 1000};
    const std::string want = fmt::format("{}.{}", row[4] / 10, row[4] % 10);
    const std::string rendered = RenderReport(r, ReportFormat::kTable, "row");
    if (FormatPercent(*r.average_accuracy()) == want &&
        LastCell(rendered) == want) {
      ++spot_ok;
    }
  }
  return {all_full && present > 0 && report.wer() == 0.0 && layout &&
              spot_ok == rows.size(),
          fmt::format("{} types at 100.0, WER {}, layout {}, averages {}/{} "
                      "match published rows",
                      present, FormatPercent(report.wer()),
                      layout ? "ok" : "wrong", spot_ok, rows.size())};
}

Outcome Idempotence() {
  std::mt19937_64 rng(1234);
  std::size_t same = 0, changed_first_pass = 0;
  std::string first_bad;
  for (int i = 0; i < kIdempotenceSentences; ++i) {
    const Locale locale =
        Locale::ForLanguage(i % 2 ? Language::kGerman : Language::kEnglish);
    const ParsedExpression e = oracle::RandomExpression(rng, locale);
    const std::string spoken = VerbalizeValue(e, locale, {std::nullopt, rng()});
    const auto& [before, after] = kCarriers[i % kCarriers.size()];
    const std::string once = NormalizeSentence(before + spoken + after, locale).text;
    changed_first_pass += once != before + spoken + after;
    const std::string twice = NormalizeSentence(once, locale).text;
    if (twice == once) {
      ++same;
    } else if (first_bad.empty()) {
      first_bad = fmt::format("; '{}' -> '{}'", once, twice);
    }
  }
  return {same == static_cast<std::size_t>(kIdempotenceSentences),
          fmt::format("{}/{} byte-identical ({} rewritten by the first pass){}",
                      same, kIdempotenceSentences, changed_first_pass,
                      first_bad)};
}

}  // namespace
}  // namespace numex

int main() {
  using numex::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden formatting pairs", numex::Golden},
      {"cardinal round trip", numex::CardinalRoundTrip},
      {"timestamp round trip", numex::TimestampRoundTrip},
      {"WER oracle equivalence", numex::WerOracle},
      {"guard law", numex::GuardLaw},
      {"extractor recall/precision", numex::Extractor},
      {"split disjointness", numex::Split},
      {"pipeline agreement", numex::PipelineAgreement},
      {"eval self-consistency", numex::EvalSelfConsistency},
      {"idempotence", numex::Idempotence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    fmt::print("criterion {:2} {} {}: {}\n", i + 1, o.pass ? "PASS" : "FAIL",
               criteria[i].first, o.detail);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
