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

#include "numex/clients.h"

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <regex>
#include <thread>

#include "numex/classifier.h"
#include "numex/datagen.h"
#include "numex/errors.h"
#include "numex/formatter.h"
#include "numex/verbalizer.h"

namespace numex {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // prefix, no trailing '/'
};

Endpoint SplitUrl(const std::string& url) {
  const std::size_t scheme = url.find("://");
  const std::size_t host = scheme == std::string::npos ? 0 : scheme + 3;
  const std::size_t slash = url.find('/', host);
  Endpoint e;
  e.origin = url.substr(0, slash);
  e.path = slash == std::string::npos ? "" : url.substr(slash);
  while (!e.path.empty() && e.path.back() == '/') e.path.pop_back();
  return e;
}

// POSTs JSON with bearer auth, retrying transport errors and 429/5xx.
std::string PostJson(const ClientConfig& config, const std::string& route,
                     const json& body) {
  if (config.base_url.empty()) throw ClientError("client base_url not set");
  const Endpoint ep = SplitUrl(config.base_url);
  httplib::Client client(ep.origin);
  client.set_connection_timeout(config.timeout_seconds, 0);
  client.set_read_timeout(config.timeout_seconds, 0);
  client.set_write_timeout(config.timeout_seconds, 0);
  httplib::Headers headers;
  if (!config.api_key_env.empty()) {
    const char* key = std::getenv(config.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw ClientError("environment variable " + config.api_key_env +
                        " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const std::string payload = body.dump();
  std::string last_error;
  for (int attempt = 0; attempt <= config.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(200 << attempt));
    }
    auto res = client.Post(ep.path + route, headers, payload,
                           "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return res->body;
    last_error = fmt::format("HTTP {}: {}", res->status, res->body.substr(0, 200));
    if (res->status != 429 && res->status < 500) break;
  }
  throw ClientError(fmt::format("POST {}{} failed: {}", config.base_url, route,
                                last_error));
}

std::uint32_t ReadLe32(const std::string& b, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(b[at + i]);
  }
  return v;
}

}  // namespace

ClientConfig ClientConfig::FromConfig(const Config& config,
                                      const std::string& prefix) {
  ClientConfig c;
  c.base_url = config.GetOr(prefix + ".base_url", "");
  c.model = config.GetOr(prefix + ".model", "");
  c.api_key_env = config.GetOr(prefix + ".api_key_env", "");
  c.timeout_seconds = config.GetInt(prefix + ".timeout_seconds", c.timeout_seconds);
  c.retries = config.GetInt(prefix + ".retries", c.retries);
  c.format = config.GetOr(prefix + ".format", c.format);
  if (c.timeout_seconds <= 0 || c.retries < 0) {
    throw ParseError(prefix + ": timeout must be positive, retries >= 0");
  }
  return c;
}

HttpTextGenerator::HttpTextGenerator(ClientConfig config)
    : config_(std::move(config)) {}

std::string HttpTextGenerator::Complete(const std::string& prompt) {
  json body = {{"model", config_.model},
               {"messages", {{{"role", "user"}, {"content", prompt}}}}};
  const std::string raw = PostJson(config_, "/chat/completions", body);
  try {
    return json::parse(raw)
        .at("choices")
        .at(0)
        .at("message")
        .at("content")
        .get<std::string>();
  } catch (const json::exception& e) {
    throw ClientError(std::string("unexpected completion response: ") +
                      e.what());
  }
}

HttpSpeechSynthesizer::HttpSpeechSynthesizer(ClientConfig config)
    : config_(std::move(config)) {}

AudioClip HttpSpeechSynthesizer::Synthesize(const std::string& text,
                                            const std::string& voice) {
  json body = {{"model", config_.model},
               {"input", text},
               {"voice", voice},
               {"response_format", config_.format}};
  AudioClip clip;
  clip.bytes = PostJson(config_, "/audio/speech", body);
  clip.format = config_.format;
  if (clip.format == "wav") clip.duration_seconds = WavDurationSeconds(clip.bytes);
  return clip;
}

double WavDurationSeconds(const std::string& bytes) {
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    return 0.0;
  }
  std::uint32_t byte_rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::string id = bytes.substr(pos, 4);
    std::uint32_t size = ReadLe32(bytes, pos + 4);
    if (id == "fmt " && pos + 8 + 12 <= bytes.size()) {
      byte_rate = ReadLe32(bytes, pos + 8 + 8);
    } else if (id == "data") {
      // Streamed responses may carry a placeholder size.
      const std::size_t available = bytes.size() - pos - 8;
      if (size == 0 || size == 0xFFFFFFFFu || size > available) {
        size = static_cast<std::uint32_t>(available);
      }
      return byte_rate == 0 ? 0.0 : static_cast<double>(size) / byte_rate;
    }
    pos += 8 + size + (size & 1);
  }
  return 0.0;
}

AudioClip MockSpeechSynthesizer::Synthesize(const std::string& text,
                                            const std::string& voice) {
  return {fmt::format("mock-audio voice={} text={}", voice, text), "txt", 0.0};
}

// ---------------------------------------------------------------------------

namespace {

struct Carrier {
  const char* before;
  const char* after;
};

const std::vector<Carrier>& Carriers(ExpressionType type, Language language) {
  static const std::vector<Carrier> en_year = {
      {"The museum opened in ", "."},
      {"She was born in ", "."},
      {"The bridge has stood there since ", "."}};
  static const std::vector<Carrier> en_time = {
      {"The train leaves at ", "."},
      {"We agreed to meet at ", "."},
      {"Please call me back at ", "."}};
  static const std::vector<Carrier> en_money = {
      {"The ticket costs ", "."},
      {"He paid ", " for the old bike."},
      {"The repair came to ", "."}};
  static const std::vector<Carrier> en_quantity = {
      {"We ordered ", " for the event."},
      {"The warehouse holds ", "."},
      {"They counted ", " yesterday."}};
  static const std::vector<Carrier> de_year = {
      {"Das Museum wurde im Jahr ", " er\xC3\xB6" "ffnet."},
      {"Die Br\xC3\xBC" "cke steht dort seit ", "."},
      {"Sie lebt hier seit ", "."}};
  static const std::vector<Carrier> de_time = {
      {"Der Zug f\xC3\xA4hrt um ", "."},
      {"Wir treffen uns um ", "."},
      {"Bitte ruf mich um ", " an."}};
  static const std::vector<Carrier> de_money = {
      {"Die Karte kostet ", "."},
      {"Er hat ", " f\xC3\xBCr das alte Fahrrad bezahlt."},
      {"Die Reparatur kostete ", "."}};
  static const std::vector<Carrier> de_quantity = {
      {"Wir haben ", " bestellt."},
      {"Das Lager fasst ", "."},
      {"Sie haben gestern ", " gez\xC3\xA4hlt."}};
  const bool de = language == Language::kGerman;
  switch (type) {
    case ExpressionType::kYear:
      return de ? de_year : en_year;
    case ExpressionType::kTimestamp:
      return de ? de_time : en_time;
    case ExpressionType::kCurrency:
      return de ? de_money : en_money;
    case ExpressionType::kQuantity:
      return de ? de_quantity : en_quantity;
  }
  return en_year;
}

const std::vector<std::string>& UnitNouns(Language language) {
  static const std::vector<std::string> en = {
      "pieces", "people", "books", "kilometers", "tickets", "chairs"};
  static const std::vector<std::string> de = {
      "Teile", "Menschen", "B\xC3\xBC" "cher", "Kilometer", "Karten",
      "St\xC3\xBC" "hle"};
  return language == Language::kGerman ? de : en;
}

}  // namespace

VerbalizerTextGenerator::VerbalizerTextGenerator(Locale locale,
                                                 std::uint64_t seed)
    : locale_(std::move(locale)), rng_(seed) {
  std::vector<int> offsets(59);
  for (int m = 1; m <= 59; ++m) offsets[m - 1] = m;
  for (const auto& p : EnumerateTimestampPhrasings(locale_, offsets)) {
    phrase_times_.emplace(p.phrase, p.time);
  }
}

ParsedExpression VerbalizerTextGenerator::RandomPayload(ExpressionType type) {
  auto uniform = [this](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  };
  const Language language = locale_.language();
  ParsedExpression e;
  e.type = type;
  switch (type) {
    case ExpressionType::kYear:
      e.payload = YearPayload{static_cast<int>(uniform(1000, 2100))};
      break;
    case ExpressionType::kTimestamp:
      e.payload = TimeOfDay{static_cast<int>(uniform(0, 23)),
                            static_cast<int>(uniform(0, 59))};
      break;
    case ExpressionType::kCurrency: {
      const auto& currencies = locale_.currencies();
      const CurrencyUnit& unit = currencies[uniform(0, currencies.size() - 1)];
      MoneyPayload m;
      m.currency_code = unit.code;
      if (uniform(0, 9) == 0) {
        m.major = NumericValue{uniform(11, 999), 1, false};
        if (m.major.mantissa % 10 == 0) m.major.mantissa += 1;
        const bool billion = uniform(0, 1) == 1;
        m.magnitude_word = language == Language::kGerman
                               ? (billion ? "Milliarden" : "Millionen")
                               : (billion ? "billion" : "million");
      } else {
        m.major = NumericValue::Integer(uniform(0, 9999));
        if (m.major.IsZero() || uniform(0, 2) == 0) {
          m.minor = NumericValue::Integer(uniform(1, 99));
          m.minor_spoken = true;
        }
      }
      e.payload = std::move(m);
      break;
    }
    case ExpressionType::kQuantity: {
      QuantityPayload q;
      const auto& units = UnitNouns(language);
      q.unit_word = units[uniform(0, units.size() - 1)];
      q.value = uniform(0, 4) == 0 ? NumericValue{uniform(11, 999), 1, false}
                                   : NumericValue::Integer(uniform(2, 99999));
      e.payload = std::move(q);
      break;
    }
  }
  return e;
}

std::pair<std::string, std::string> VerbalizerTextGenerator::MakeSentence(
    ExpressionType type) {
  ParsedExpression e = RandomPayload(type);
  const auto& carriers = Carriers(type, locale_.language());
  const Carrier& c = carriers[std::uniform_int_distribution<std::size_t>(
      0, carriers.size() - 1)(rng_)];
  const std::string spoken =
      VerbalizeValue(e, locale_, VerbalizeOptions{std::nullopt, rng_()});
  const std::string written = FormatExpression(e, locale_);
  return {c.before + spoken + c.after, c.before + written + c.after};
}

std::string VerbalizerTextGenerator::Complete(const std::string& prompt) {
  static const std::regex sentence_re(
      R"(^Generate (\d+) diverse (?:German )?sentences containing an? (.+?) written down using number words\.)");
  static const std::regex timestamp_re(
      R"(^Generate an? (?:German )?sentence containing the timestamp (.+?) written down using number words\.)");
  static const std::regex convert_re(
      R"(^Convert the .+? in the sentences to numeric literals\.\s*)");
  std::lock_guard<std::mutex> lock(mu_);
  std::smatch m;
  if (std::regex_search(prompt, m, sentence_re)) {
    const int n = std::stoi(m[1].str());
    std::optional<ExpressionType> type;
    for (ExpressionType t : kAllExpressionTypes) {
      if (PromptTypeName(t) == m[2].str()) type = t;
    }
    if (!type) throw ClientError("unknown expression type in prompt");
    std::string out;
    for (int i = 0; i < n; ++i) {
      auto [spoken, written] = MakeSentence(*type);
      formatted_[spoken] = written;
      out += spoken + "\n";
    }
    return out;
  }
  if (std::regex_search(prompt, m, timestamp_re)) {
    const std::string phrase = m[1].str();
    auto it = phrase_times_.find(phrase);
    if (it == phrase_times_.end()) {
      throw ClientError("unknown timestamp phrase '" + phrase + "'");
    }
    const auto& carriers =
        Carriers(ExpressionType::kTimestamp, locale_.language());
    const Carrier& c = carriers[std::uniform_int_distribution<std::size_t>(
        0, carriers.size() - 1)(rng_)];
    const std::string spoken = c.before + phrase + c.after;
    formatted_[spoken] = c.before + FormatTime(ResolveTime(it->second)) + c.after;
    return spoken;
  }
  if (std::regex_search(prompt, m, convert_re)) {
    const std::string sentence = Trim(prompt.substr(m.length(0)));
    auto it = formatted_.find(sentence);
    return it == formatted_.end() ? sentence : it->second;
  }
  throw ClientError("prompt not understood by the verbalizer mock");
}

}  // namespace numex
