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

// numex command-line tool. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 operational error (unreadable input, malformed
// manifest or config, client failure), 2 misaligned inputs.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "numex/batch.h"
#include "numex/clients.h"
#include "numex/config.h"
#include "numex/datagen.h"
#include "numex/errors.h"
#include "numex/extractor.h"
#include "numex/manifest.h"
#include "numex/normalizer.h"
#include "numex/report.h"
#include "numex/verbalizer.h"

namespace {

using namespace numex;

constexpr int kExitError = 1;
constexpr int kExitMisaligned = 2;
constexpr std::size_t kChunkLines = 4096;

struct Misaligned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string locale;
  double threshold = 0.5;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string config_path;
};

Config LoadConfig(const Options& o) {
  return o.config_path.empty() ? Config{} : Config::Load(o.config_path);
}

Locale LoadLocale(const Options& o) {
  return Locale::FromConfig(LoadConfig(o), ParseLanguage(o.locale));
}

// Opens `path` ("-" or empty for stdin).
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw std::runtime_error("cannot read " + path);
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

std::vector<std::string> ReadLines(const std::string& path) {
  Input in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in.stream(), line);) {
    lines.push_back(std::move(line));
  }
  return lines;
}

// Reads fixed-size chunks so large inputs are never held in memory at once;
// each chunk is processed in parallel and written back in order.
template <typename Fn>
void ForEachChunk(std::istream& in, Fn&& fn) {
  std::vector<std::string> chunk;
  chunk.reserve(kChunkLines);
  for (std::string line; std::getline(in, line);) {
    chunk.push_back(std::move(line));
    if (chunk.size() == kChunkLines) {
      fn(chunk);
      chunk.clear();
    }
  }
  if (!chunk.empty()) fn(chunk);
}

void RunNormalize(const Options& o, const std::string& input) {
  const Locale locale = LoadLocale(o);
  Input in(input);
  ForEachChunk(in.stream(), [&](const std::vector<std::string>& lines) {
    for (const auto& out : NormalizeBatch(lines, locale)) {
      std::cout << out << '\n';
    }
  });
  std::cout.flush();
}

void RunVerbalize(const Options& o, const std::string& input,
                  const std::string& family) {
  const Locale locale = LoadLocale(o);
  VerbalizeOptions v;
  if (!family.empty()) {
    v.family = ParseTimestampFamily(family);
    if (!v.family) throw std::runtime_error("unknown timestamp family " + family);
  } else {
    v.seed = o.seed;
  }
  Input in(input);
  std::uint64_t line_no = 0;
  for (std::string line; std::getline(in.stream(), line); ++line_no) {
    VerbalizeOptions per_line = v;
    if (per_line.seed) per_line.seed = *per_line.seed * 1'000'003 + line_no;
    std::cout << VerbalizeSentence(line, locale, per_line) << '\n';
  }
}

void RunEval(const Options& o, const std::string& manifest,
             const std::string& hypotheses, const std::string& label) {
  const auto references = ReadManifest(manifest);
  const auto hyps = ReadLines(hypotheses);
  if (references.size() != hyps.size()) {
    throw Misaligned(fmt::format("{} manifest records but {} hypothesis lines",
                                 references.size(), hyps.size()));
  }
  const EvalReport report = EvaluateCorpus(references, hyps);
  std::cout << RenderReport(report,
                            o.format == "tsv" ? ReportFormat::kTsv
                                              : ReportFormat::kTable,
                            label);
}

void RunGuard(const Options& o, const std::string& original,
              const std::string& segmented, const std::string& log_path) {
  const auto a = ReadLines(original);
  const auto b = ReadLines(segmented);
  if (a.size() != b.size()) {
    throw Misaligned(fmt::format("{} original lines but {} segmented lines",
                                 a.size(), b.size()));
  }
  GuardConfig config{o.threshold};
  config.Validate();
  std::ofstream log_file;
  if (!log_path.empty()) {
    log_file.open(log_path);
    if (!log_file) throw std::runtime_error("cannot write " + log_path);
  }
  std::ostream& log = log_path.empty() ? std::cerr : log_file;
  const auto decisions = GuardBatch(a, b, config);
  std::size_t reverted = 0;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const auto& d = decisions[i];
    std::cout << d.returned_text << '\n';
    log << fmt::format("{}\t{}\twer={:.4f}\tedits={}/{}\n", i + 1,
                       d.kept ? "kept" : "reverted", d.measured_wer,
                       d.wer.edits(), d.wer.reference_length);
    reverted += !d.kept;
  }
  std::cerr << fmt::format("guard: {} lines, {} reverted (threshold {})\n",
                           decisions.size(), reverted, config.threshold);
}

void RunExtract(const std::string& input) {
  Input in(input);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in.stream(), line);) {
    ++line_no;
    for (const auto& m : ExtractNumericLiterals(line)) {
      std::cout << fmt::format("{}\t{}\t{}\t{}\t{}\n", line_no, m.begin, m.end,
                               ExpressionTypeName(m.guessed_type), m.text);
    }
  }
}

void WriteSplits(const SplitResult& s, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto base = std::filesystem::path(dir);
  WriteManifest((base / "train.jsonl").string(), s.train);
  WriteManifest((base / "dev.jsonl").string(), s.dev);
  WriteManifest((base / "test.jsonl").string(), s.test);
}

SplitSpec ParseRatios(const std::string& ratios, std::uint64_t seed) {
  SplitSpec spec;
  spec.seed = seed;
  if (!ratios.empty()) {
    double t = 0, d = 0, e = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(ratios);
    if (!(in >> t >> c1 >> d >> c2 >> e) || c1 != ':' || c2 != ':') {
      throw std::runtime_error("--ratios expects train:dev:test");
    }
    spec.train = t;
    spec.dev = d;
    spec.test = e;
  }
  spec.Validate();
  return spec;
}

void RunSplit(const Options& o, const std::string& manifest,
              const std::string& out_dir, const std::string& ratios) {
  const auto records = ReadManifest(manifest);
  const SplitResult s = SplitDisjoint(records, ParseRatios(ratios, o.seed));
  WriteSplits(s, out_dir);
  std::cout << fmt::format("train\t{}\ndev\t{}\ntest\t{}\n", s.train.size(),
                           s.dev.size(), s.test.size());
}

struct GenArgs {
  std::string out;
  bool mock = false;
  int prompts = 1;
  int sentences = 5;
  int concurrency = 4;
  std::string audio_dir;
  std::string split_dir;
  std::string ratios;
  bool timestamps = false;
};

void RunGen(const Options& o, const GenArgs& g) {
  const Config config = LoadConfig(o);
  const Locale locale = Locale::FromConfig(config, ParseLanguage(o.locale));
  std::unique_ptr<TextGenerator> text;
  std::unique_ptr<SpeechSynthesizer> speech;
  if (g.mock) {
    text = std::make_unique<VerbalizerTextGenerator>(locale, o.seed);
    speech = std::make_unique<MockSpeechSynthesizer>();
  } else {
    if (o.config_path.empty()) {
      throw std::runtime_error("gen needs --config with llm.* and tts.* keys "
                               "(or --mock)");
    }
    text = std::make_unique<HttpTextGenerator>(
        ClientConfig::FromConfig(config, "llm"));
    if (config.Get("tts.base_url")) {
      speech = std::make_unique<HttpSpeechSynthesizer>(
          ClientConfig::FromConfig(config, "tts"));
    } else {
      speech = std::make_unique<MockSpeechSynthesizer>();
    }
  }
  GenerationPlan plan;
  plan.language = locale.language();
  plan.prompts_per_type = g.prompts;
  plan.sentences_per_prompt = g.sentences;
  plan.max_concurrency = g.concurrency;
  plan.seed = o.seed;
  if (!g.audio_dir.empty()) plan.audio_dir = g.audio_dir;
  if (!g.split_dir.empty()) plan.split = ParseRatios(g.ratios, o.seed);
  if (g.timestamps) {
    for (const auto& p : EnumerateTimestampPhrasings(locale)) {
      plan.timestamp_phrases.push_back(p.phrase);
    }
  }
  const GenerationResult r = RunGeneration(plan, *text, *speech);
  for (const auto& e : r.errors) std::cerr << "client error: " << e << '\n';
  for (const auto& d : r.discards) std::cerr << "discarded: " << d << '\n';
  WriteManifest(g.out, r.records);
  if (r.splits) WriteSplits(*r.splits, g.split_dir);
  std::cout << RenderGenerationTable(r.stats);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numex: numeric expression normalization toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--locale", o.locale, "Locale (en or de)")
      ->check(CLI::IsMember({"en", "de"}));
  app.add_option("--threshold", o.threshold, "Guard WER threshold")
      ->check(CLI::Range(0.0, 1e9));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"table", "tsv"}));
  app.add_option("--config", o.config_path, "Config file (key = value)")
      ->check(CLI::ExistingFile);

  std::string input, input2, label = "system", log_path, family, out_dir,
                     ratios;
  GenArgs gen;

  auto* normalize = app.add_subcommand("normalize", "Spoken to written form");
  normalize->add_option("input", input, "Input file (default stdin)");
  auto* verbalize = app.add_subcommand("verbalize", "Written to spoken form");
  verbalize->add_option("input", input, "Input file (default stdin)");
  verbalize->add_option("--family", family, "Fixed timestamp phrasing family");
  auto* eval = app.add_subcommand("eval", "Score hypotheses against a manifest");
  eval->add_option("manifest", input, "Reference manifest (JSONL)")->required();
  eval->add_option("hypotheses", input2, "One hypothesis per line")->required();
  eval->add_option("--label", label, "Row label in the report");
  auto* guard = app.add_subcommand("guard", "Revert reformatting over the WER threshold");
  guard->add_option("original", input, "Original lines")->required();
  guard->add_option("segmented", input2, "Reformatted lines")->required();
  guard->add_option("--log", log_path, "Decision log file (default stderr)");
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("--out", gen.out, "Output manifest")->required();
  gen_cmd->add_flag("--mock", gen.mock, "Use the built-in offline generator");
  gen_cmd->add_option("--prompts", gen.prompts, "Prompts per type")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--sentences", gen.sentences, "Sentences per prompt")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--concurrency", gen.concurrency, "Parallel client calls")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--audio-dir", gen.audio_dir, "Directory for audio files");
  gen_cmd->add_option("--split-dir", gen.split_dir, "Also write disjoint splits");
  gen_cmd->add_option("--ratios", gen.ratios, "Split ratios train:dev:test");
  gen_cmd->add_flag("--timestamps", gen.timestamps,
                    "Add one prompt per timestamp phrasing");
  auto* split = app.add_subcommand("split", "Pairwise-disjoint manifest split");
  split->add_option("manifest", input, "Manifest (JSONL)")->required();
  split->add_option("--out-dir", out_dir, "Output directory")->required();
  split->add_option("--ratios", ratios, "Split ratios train:dev:test");
  auto* extract = app.add_subcommand("extract", "List numeric literals");
  extract->add_option("input", input, "Input file (default stdin)");

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {normalize, verbalize, gen_cmd}) {
    if (sub->parsed() && o.locale.empty()) {
      std::cerr << "numex " << sub->get_name() << ": --locale is required\n";
      return kExitError;
    }
  }
  try {
    if (normalize->parsed()) RunNormalize(o, input);
    if (verbalize->parsed()) RunVerbalize(o, input, family);
    if (eval->parsed()) RunEval(o, input, input2, label);
    if (guard->parsed()) RunGuard(o, input, input2, log_path);
    if (gen_cmd->parsed()) RunGen(o, gen);
    if (split->parsed()) RunSplit(o, input, out_dir, ratios);
    if (extract->parsed()) RunExtract(input);
  } catch (const Misaligned& e) {
    std::cerr << "numex: " << e.what() << '\n';
    return kExitMisaligned;
  } catch (const std::exception& e) {
    std::cerr << "numex: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
