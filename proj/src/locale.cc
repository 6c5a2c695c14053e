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

#include "numex/locale.h"

#include <algorithm>

#include "numex/errors.h"
#include "numex/token.h"

namespace numex {
namespace {

CurrencyUnit Usd() {
  return {"USD", "$", 2, {"dollar", "dollars"}, {"cent", "cents"}};
}
CurrencyUnit Eur(Language language) {
  if (language == Language::kGerman) {
    return {"EUR", "\xE2\x82\xAC", 2, {"euro", "euro", "euros"},
            {"cent", "cent", "cents"}};
  }
  return {"EUR", "\xE2\x82\xAC", 2, {"euro", "euros"}, {"cent", "cents"}};
}
CurrencyUnit Gbp(Language language) {
  if (language == Language::kGerman) {
    return {"GBP", "\xC2\xA3", 2, {"pfund", "pfund"}, {"penny", "pence"}};
  }
  return {"GBP", "\xC2\xA3", 2, {"pound", "pounds"}, {"penny", "pence"}};
}

char ParseSeparator(const std::string& key, const std::string& value) {
  if (value == "space") return ' ';
  if (value.size() != 1) {
    throw ParseError("'" + key + "' must be a single character or 'space'");
  }
  return value[0];
}

std::vector<std::string> LowercaseAll(std::vector<std::string> words) {
  for (auto& w : words) w = Lowercase(w);
  return words;
}

}  // namespace

std::string_view LanguageCode(Language language) {
  return language == Language::kGerman ? "de" : "en";
}

Language ParseLanguage(std::string_view code) {
  std::string c = Lowercase(code);
  if (c == "en") return Language::kEnglish;
  if (c == "de") return Language::kGerman;
  throw ContractViolation("unknown language code '" + std::string(code) + "'");
}

const std::string& CurrencyUnit::MajorWord(bool plural) const {
  if (major_words.empty()) return code;
  return major_words[plural && major_words.size() > 1 ? 1 : 0];
}

const std::string& CurrencyUnit::MinorWord(bool plural) const {
  if (minor_words.empty()) return code;
  return minor_words[plural && minor_words.size() > 1 ? 1 : 0];
}

Locale::Locale(Language language, char thousands, char decimal,
               CurrencyPlacement placement)
    : language_(language),
      thousands_separator_(thousands),
      decimal_mark_(decimal),
      placement_(placement) {}

Locale Locale::English() {
  Locale l(Language::kEnglish, ',', '.', CurrencyPlacement::kPrefix);
  l.currencies_ = {Usd(), Eur(Language::kEnglish), Gbp(Language::kEnglish)};
  l.default_code_ = "USD";
  return l;
}

Locale Locale::German() {
  Locale l(Language::kGerman, '.', ',', CurrencyPlacement::kSuffix);
  l.currencies_ = {Eur(Language::kGerman), Usd(), Gbp(Language::kGerman)};
  l.default_code_ = "EUR";
  return l;
}

Locale Locale::ForLanguage(Language language) {
  return language == Language::kGerman ? German() : English();
}

Locale Locale::FromConfig(const Config& config, Language fallback) {
  Language base = fallback;
  if (auto b = config.Get("locale.base")) base = ParseLanguage(*b);
  Locale l = ForLanguage(base);

  if (auto v = config.Get("locale.thousands_separator")) {
    l.thousands_separator_ = ParseSeparator("locale.thousands_separator", *v);
  }
  if (auto v = config.Get("locale.decimal_mark")) {
    l.decimal_mark_ = ParseSeparator("locale.decimal_mark", *v);
  }
  if (auto v = config.Get("locale.currency_placement")) {
    if (*v == "prefix") {
      l.placement_ = CurrencyPlacement::kPrefix;
    } else if (*v == "suffix") {
      l.placement_ = CurrencyPlacement::kSuffix;
    } else {
      throw ParseError("locale.currency_placement must be prefix or suffix");
    }
  }

  // currency.<CODE>.<field>
  std::vector<std::string> codes;
  for (const auto& key : config.KeysWithPrefix("currency.")) {
    std::size_t dot = key.find('.', 9);
    if (dot == std::string::npos) continue;
    std::string code = key.substr(9, dot - 9);
    if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
      codes.push_back(code);
    }
  }
  for (const auto& code : codes) {
    const std::string prefix = "currency." + code + ".";
    CurrencyUnit unit;
    if (const CurrencyUnit* existing = l.FindCurrency(code)) unit = *existing;
    unit.code = code;
    unit.symbol = config.GetOr(prefix + "symbol", unit.symbol);
    unit.minor_unit_digits =
        config.GetInt(prefix + "minor_digits", unit.minor_unit_digits);
    if (config.Get(prefix + "major_words")) {
      unit.major_words = LowercaseAll(config.GetList(prefix + "major_words"));
    }
    if (config.Get(prefix + "minor_words")) {
      unit.minor_words = LowercaseAll(config.GetList(prefix + "minor_words"));
    }
    l.AddCurrency(std::move(unit));
  }
  if (auto v = config.Get("locale.default_currency")) {
    if (!l.FindCurrency(*v)) {
      throw ParseError("locale.default_currency names unknown currency " + *v);
    }
    l.default_code_ = *v;
  }
  l.Validate();
  return l;
}

void Locale::Validate() const {
  if (thousands_separator_ == decimal_mark_) {
    throw ContractViolation(
        "thousands separator and decimal mark must differ");
  }
  for (const auto& c : currencies_) {
    if (c.symbol.empty()) {
      throw ContractViolation("currency " + c.code + " has an empty symbol");
    }
    if (c.minor_unit_digits != 0 && c.minor_unit_digits != 2) {
      throw ContractViolation("currency " + c.code +
                              " minor_digits must be 0 or 2");
    }
  }
}

void Locale::AddCurrency(CurrencyUnit unit) {
  for (auto& c : currencies_) {
    if (c.code == unit.code) {
      c = std::move(unit);
      Validate();
      return;
    }
  }
  currencies_.push_back(std::move(unit));
  Validate();
}

const CurrencyUnit& Locale::default_currency() const {
  const CurrencyUnit* c = FindCurrency(default_code_);
  return c ? *c : currencies_.front();
}

const CurrencyUnit* Locale::FindCurrency(std::string_view code) const {
  for (const auto& c : currencies_) {
    if (c.code == code) return &c;
  }
  return nullptr;
}

const CurrencyUnit* Locale::CurrencyForMajorWord(std::string_view word) const {
  for (const auto& c : currencies_) {
    for (const auto& w : c.major_words) {
      if (w == word) return &c;
    }
  }
  return nullptr;
}

bool Locale::IsMinorWord(const CurrencyUnit& unit,
                         std::string_view word) const {
  return std::find(unit.minor_words.begin(), unit.minor_words.end(), word) !=
         unit.minor_words.end();
}

bool Locale::IsCurrencyWord(std::string_view word) const {
  for (const auto& c : currencies_) {
    if (std::find(c.major_words.begin(), c.major_words.end(), word) !=
            c.major_words.end() ||
        IsMinorWord(c, word)) {
      return true;
    }
  }
  return false;
}

}  // namespace numex
