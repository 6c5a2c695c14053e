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

#ifndef NUMEX_LOCALE_H_
#define NUMEX_LOCALE_H_

#include <string>
#include <string_view>
#include <vector>

#include "numex/config.h"

namespace numex {

enum class Language { kEnglish, kGerman };

// "en" / "de".
std::string_view LanguageCode(Language language);
Language ParseLanguage(std::string_view code);

enum class CurrencyPlacement { kPrefix, kSuffix };

struct CurrencyUnit {
  std::string code;    // ISO-4217
  std::string symbol;  // "$", "€", ...
  int minor_unit_digits = 2;
  // Lowercased spoken unit names; the first two are singular and plural
  // for verbalization ("dollar", "dollars").
  std::vector<std::string> major_words;
  std::vector<std::string> minor_words;

  const std::string& MajorWord(bool plural) const;
  const std::string& MinorWord(bool plural) const;
};

class Locale {
 public:
  static Locale English();
  static Locale German();
  static Locale ForLanguage(Language language);

  // Starts from the preset named by `locale.base` (default: `fallback`) and
  // applies `locale.*` and `currency.<CODE>.*` overrides.
  static Locale FromConfig(const Config& config, Language fallback);

  Language language() const { return language_; }
  char thousands_separator() const { return thousands_separator_; }
  char decimal_mark() const { return decimal_mark_; }
  CurrencyPlacement currency_placement() const { return placement_; }
  const std::vector<CurrencyUnit>& currencies() const { return currencies_; }
  const CurrencyUnit& default_currency() const;

  const CurrencyUnit* FindCurrency(std::string_view code) const;
  // Lookup by lowercased major unit word.
  const CurrencyUnit* CurrencyForMajorWord(std::string_view word) const;
  bool IsMinorWord(const CurrencyUnit& unit, std::string_view word) const;
  // Any currency's major or minor word, lowercased.
  bool IsCurrencyWord(std::string_view word) const;

  void AddCurrency(CurrencyUnit unit);

 private:
  Locale(Language language, char thousands, char decimal,
         CurrencyPlacement placement);
  void Validate() const;

  Language language_;
  char thousands_separator_;
  char decimal_mark_;
  CurrencyPlacement placement_;
  std::vector<CurrencyUnit> currencies_;
  std::string default_code_;
};

}  // namespace numex

#endif  // NUMEX_LOCALE_H_
