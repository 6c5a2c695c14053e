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

#ifndef NUMEX_CLIENTS_H_
#define NUMEX_CLIENTS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "numex/config.h"
#include "numex/locale.h"
#include "numex/types.h"

namespace numex {

// Text completion backend. Implementations must be safe to call from
// several threads; failures are reported as ClientError.
class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  virtual std::string Complete(const std::string& prompt) = 0;
};

struct AudioClip {
  std::string bytes;
  std::string format;  // file extension: "wav", "mp3", ...
  double duration_seconds = 0.0;
};

class SpeechSynthesizer {
 public:
  virtual ~SpeechSynthesizer() = default;
  virtual AudioClip Synthesize(const std::string& text,
                               const std::string& voice) = 0;
  // False for placeholders whose output should not be written to disk.
  virtual bool produces_audio() const { return true; }
};

// Endpoint settings read from `<prefix>.base_url`, `.model`, `.api_key_env`,
// `.timeout_seconds`, `.retries`, `.format`.
struct ClientConfig {
  std::string base_url;  // "https://api.openai.com/v1"
  std::string model;
  std::string api_key_env;  // name of the variable holding the key
  int timeout_seconds = 60;
  int retries = 2;
  std::string format = "wav";  // speech only

  static ClientConfig FromConfig(const Config& config,
                                 const std::string& prefix);
};

// OpenAI-compatible chat completions (POST <base>/chat/completions).
class HttpTextGenerator : public TextGenerator {
 public:
  explicit HttpTextGenerator(ClientConfig config);
  std::string Complete(const std::string& prompt) override;

 private:
  ClientConfig config_;
};

// OpenAI-compatible speech endpoint (POST <base>/audio/speech).
class HttpSpeechSynthesizer : public SpeechSynthesizer {
 public:
  explicit HttpSpeechSynthesizer(ClientConfig config);
  AudioClip Synthesize(const std::string& text,
                       const std::string& voice) override;

 private:
  ClientConfig config_;
};

// Playback length of a PCM WAV file; 0 when the header is not understood.
double WavDurationSeconds(const std::string& bytes);

// Deterministic stand-in for an LLM built on the rule verbalizer.
//
// Sentence prompts get carrier sentences around seeded random payloads,
// timestamp prompts embed the requested phrase, and conversion prompts are
// answered from the formatted twin remembered for each generated sentence.
// Unknown sentences come back unchanged.
class VerbalizerTextGenerator : public TextGenerator {
 public:
  VerbalizerTextGenerator(Locale locale, std::uint64_t seed);
  std::string Complete(const std::string& prompt) override;

 private:
  std::pair<std::string, std::string> MakeSentence(ExpressionType type);
  ParsedExpression RandomPayload(ExpressionType type);

  Locale locale_;
  std::mutex mu_;
  std::mt19937_64 rng_;
  std::map<std::string, std::string> formatted_;
  std::map<std::string, TimeOfDay> phrase_times_;
};

// Answers every prompt through a callback.
class CallbackTextGenerator : public TextGenerator {
 public:
  explicit CallbackTextGenerator(
      std::function<std::string(const std::string&)> fn)
      : fn_(std::move(fn)) {}
  std::string Complete(const std::string& prompt) override {
    return fn_(prompt);
  }

 private:
  std::function<std::string(const std::string&)> fn_;
};

// Placeholder audio: the bytes spell out voice and text, duration is 0.
class MockSpeechSynthesizer : public SpeechSynthesizer {
 public:
  AudioClip Synthesize(const std::string& text,
                       const std::string& voice) override;
  bool produces_audio() const override { return false; }
};

}  // namespace numex

#endif  // NUMEX_CLIENTS_H_
