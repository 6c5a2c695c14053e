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

#include "numex/grammar.h"

#include <algorithm>
#include <array>
#include <regex>
#include <span>

#include "lexicon.h"

namespace numex {
namespace {

using lexicon::Atom;
using lexicon::AtomKind;

// Longest run of number tokens considered from one position.
constexpr std::size_t kMaxRun = 24;

struct Reading {
  NumericValue value;
  std::optional<std::string> magnitude;
  bool pair = false;
};

std::optional<std::uint64_t> Below100(std::span<const Atom> a,
                                      Language language) {
  if (a.size() == 1) {
    switch (a[0].kind) {
      case AtomKind::kUnit:
      case AtomKind::kTeen:
      case AtomKind::kTens:
      case AtomKind::kTwoDigit:
        return a[0].value;
      default:
        return std::nullopt;
    }
  }
  if (a.size() == 2 && language == Language::kEnglish &&
      a[0].kind == AtomKind::kTens && a[1].kind == AtomKind::kUnit &&
      a[1].value >= 1) {
    return a[0].value + a[1].value;
  }
  return std::nullopt;
}

struct Group {
  std::uint64_t value = 0;
  bool year_style = false;
};

// Value below 1000, or below 10000 for "nineteen hundred" style groups when
// `allow_big_hundreds` is set.
std::optional<Group> ParseGroup(std::span<const Atom> a, Language language,
                                bool allow_big_hundreds) {
  if (a.empty()) return std::nullopt;
  auto hundred = std::find_if(a.begin(), a.end(), [](const Atom& x) {
    return x.kind == AtomKind::kHundred;
  });
  if (hundred == a.end()) {
    auto v = Below100(a, language);
    if (!v || *v == 0) return std::nullopt;
    return Group{*v, false};
  }
  std::size_t h = static_cast<std::size_t>(hundred - a.begin());
  auto left = a.first(h);
  auto right = a.subspan(h + 1);
  std::uint64_t mult = 1;
  if (left.empty()) {
    if (language != Language::kGerman) return std::nullopt;
  } else {
    auto m = Below100(left, language);
    if (!m || *m == 0) return std::nullopt;
    if (*m >= 10 && !allow_big_hundreds) return std::nullopt;
    mult = *m;
  }
  std::uint64_t rest = 0;
  if (!right.empty()) {
    auto r = Below100(right, language);
    if (!r || *r == 0) return std::nullopt;
    rest = *r;
  }
  return Group{mult * 100 + rest, mult >= 11 && mult <= 19 && rest > 0};
}

struct IntegerReading {
  std::uint64_t value = 0;
  std::size_t multipliers = 0;
  bool year_style = false;
  // Exactly "<group> <million|billion|trillion>".
  std::optional<std::pair<std::uint64_t, std::string>> magnitude_form;
};

std::optional<IntegerReading> ParseInteger(std::span<const Atom> a,
                                           Language language) {
  if (a.empty()) return std::nullopt;
  if (a.size() == 1 && a[0].kind == AtomKind::kUnit && a[0].value == 0) {
    return IntegerReading{};
  }
  IntegerReading r;
  std::uint64_t previous = ~0ULL;
  std::size_t start = 0;
  std::uint64_t last_group = 0;
  std::string last_word;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != AtomKind::kThousand && a[i].kind != AtomKind::kScale) {
      continue;
    }
    const std::uint64_t mult = a[i].value;
    if (mult >= previous) return std::nullopt;
    std::uint64_t g = 1;
    if (i == start) {
      if (!(language == Language::kGerman &&
            a[i].kind == AtomKind::kThousand)) {
        return std::nullopt;
      }
    } else {
      auto group = ParseGroup(a.subspan(start, i - start), language, false);
      if (!group) return std::nullopt;
      g = group->value;
    }
    r.value += g * mult;
    ++r.multipliers;
    previous = mult;
    last_group = g;
    last_word = a[i].word;
    start = i + 1;
  }
  if (start < a.size()) {
    auto group =
        ParseGroup(a.subspan(start), language, r.multipliers == 0);
    if (!group) return std::nullopt;
    r.value += group->value;
    if (r.multipliers == 0) r.year_style = group->year_style;
  } else if (r.multipliers == 1 && a[start - 1].kind == AtomKind::kScale) {
    r.magnitude_form = std::make_pair(last_group, last_word);
  }
  if (r.value >= NumericValue::kIntegerLimit) return std::nullopt;
  return r;
}

// English "nineteen forty-five", "twenty oh five".
std::optional<std::uint64_t> ParsePair(std::span<const Atom> a) {
  if (a.size() < 2 || a.size() > 3) return std::nullopt;
  const Atom& p = a[0];
  const bool head_ok = (p.kind == AtomKind::kTeen && p.value >= 11) ||
                       (p.kind == AtomKind::kTens && p.value == 20);
  if (!head_ok) return std::nullopt;
  auto tail = a.subspan(1);
  std::uint64_t q = 0;
  if (tail.size() == 2 && tail[0].kind == AtomKind::kOh &&
      tail[1].kind == AtomKind::kUnit && tail[1].value >= 1) {
    q = tail[1].value;
  } else if (tail.size() == 1 && (tail[0].kind == AtomKind::kTeen ||
                                  tail[0].kind == AtomKind::kTens)) {
    q = tail[0].value;
  } else if (tail.size() == 2 && tail[0].kind == AtomKind::kTens &&
             tail[1].kind == AtomKind::kUnit && tail[1].value >= 1) {
    q = tail[0].value + tail[1].value;
  } else {
    return std::nullopt;
  }
  return p.value * 100 + q;
}

std::optional<Reading> ParseAtoms(std::span<const Atom> a, Language language) {
  if (a.empty()) return std::nullopt;
  bool negative = false;
  if (a[0].kind == AtomKind::kMinus) {
    negative = true;
    a = a.subspan(1);
    if (a.empty()) return std::nullopt;
  }
  if (language == Language::kEnglish && !negative) {
    if (auto pair = ParsePair(a)) {
      return Reading{NumericValue::Integer(*pair), std::nullopt, true};
    }
  }

  auto point = std::find_if(a.begin(), a.end(), [](const Atom& x) {
    return x.kind == AtomKind::kPoint;
  });
  Reading reading;
  if (point != a.end()) {
    std::size_t p = static_cast<std::size_t>(point - a.begin());
    auto integer = ParseInteger(a.first(p), language);
    if (!integer) return std::nullopt;
    std::string digits;
    std::size_t i = p + 1;
    for (; i < a.size(); ++i) {
      if (a[i].kind == AtomKind::kOh) {
        digits += '0';
      } else if (a[i].kind == AtomKind::kUnit) {
        digits += static_cast<char>('0' + a[i].value);
      } else {
        break;
      }
    }
    if (digits.empty()) return std::nullopt;
    auto value = NumericValue::FromParts(integer->value, digits);
    if (!value) return std::nullopt;
    reading.value = *value;
    if (i < a.size()) {
      if (i + 1 != a.size() || a[i].kind != AtomKind::kScale ||
          integer->multipliers != 0) {
        return std::nullopt;
      }
      reading.magnitude = a[i].word;
    }
  } else {
    auto integer = ParseInteger(a, language);
    if (!integer) return std::nullopt;
    if (integer->magnitude_form) {
      reading.value = NumericValue::Integer(integer->magnitude_form->first);
      reading.magnitude = integer->magnitude_form->second;
    } else {
      reading.value = NumericValue::Integer(integer->value);
      reading.pair = integer->year_style && language == Language::kGerman;
    }
  }
  reading.value.negative = negative && !reading.value.IsZero();
  return reading;
}

struct CardinalOption {
  std::size_t end;
  Reading reading;
  bool article;  // a lone "one"/"ein"/"eine"
};

// Every valid cardinal reading starting at `at`, longest first.
std::vector<CardinalOption> CardinalOptions(const std::vector<Token>& tokens,
                                            std::size_t at,
                                            Language language) {
  std::vector<CardinalOption> options;
  std::vector<Atom> atoms;
  std::vector<std::size_t> boundaries;  // atom count after each token
  // English "one hundred and one": the "and" adds no atom and may not end
  // the run. It is dropped again when another multiplier follows it
  // ("two hundred and three hundred" is two numbers).
  constexpr std::size_t kNoBoundary = 0;
  std::optional<std::size_t> and_at;
  auto multiplier = [](const Atom& x) {
    return x.kind == AtomKind::kHundred || x.kind == AtomKind::kThousand ||
           x.kind == AtomKind::kScale;
  };
  for (std::size_t i = at; i < tokens.size() && i < at + kMaxRun; ++i) {
    if (!tokens[i].is_word) break;
    if (language == Language::kEnglish && tokens[i].lowercased == "and" &&
        !and_at && !atoms.empty() && multiplier(atoms.back())) {
      and_at = boundaries.size();
      boundaries.push_back(kNoBoundary);
      continue;
    }
    auto a = lexicon::Atomize(tokens[i].surface, tokens[i].lowercased, i,
                              language);
    if (!a) break;
    atoms.insert(atoms.end(), a->begin(), a->end());
    boundaries.push_back(atoms.size());
  }
  if (and_at) {
    const std::size_t from = *and_at == 0 ? 0 : boundaries[*and_at - 1];
    if (std::any_of(atoms.begin() + from, atoms.end(), multiplier)) {
      boundaries.resize(*and_at);
      atoms.resize(from);
    }
  }
  for (std::size_t k = boundaries.size(); k > 0; --k) {
    if (boundaries[k - 1] == kNoBoundary) continue;
    auto reading =
        ParseAtoms(std::span<const Atom>(atoms).first(boundaries[k - 1]),
                   language);
    if (!reading) continue;
    const bool article = k == 1 && boundaries[0] == 1 && atoms[0].article;
    options.push_back({at + k, std::move(*reading), article});
  }
  return options;
}

std::optional<Reading> CardinalExact(const std::vector<Token>& tokens,
                                     std::size_t begin, std::size_t end,
                                     Language language) {
  for (auto& option : CardinalOptions(tokens, begin, language)) {
    if (option.end == end) return std::move(option.reading);
  }
  return std::nullopt;
}

std::optional<int> SmallInteger(const Reading& r, int lo, int hi) {
  if (r.magnitude || r.value.scale != 0 || r.value.negative) {
    return std::nullopt;
  }
  if (r.value.mantissa < static_cast<std::uint64_t>(lo) ||
      r.value.mantissa > static_cast<std::uint64_t>(hi)) {
    return std::nullopt;
  }
  return static_cast<int>(r.value.mantissa);
}

// ---------------------------------------------------------------------------
// Clock phrases

struct ClockMatch {
  std::size_t end = 0;
  int hour = 0;
  int minute = 0;
  PeriodHint hint = PeriodHint::kUnspecified;
  // Idiom forms may still take an am/pm or "Uhr" suffix.
  bool open_suffix = true;
};

class ClockParser {
 public:
  ClockParser(const std::vector<Token>& tokens, const Locale& locale)
      : tokens_(tokens), language_(locale.language()) {}

  std::optional<CandidateParse> Parse(std::size_t at) const {
    if (at >= tokens_.size() || !tokens_[at].is_word) return std::nullopt;
    std::vector<ClockMatch> matches = language_ == Language::kGerman
                                          ? GermanBase(at)
                                          : EnglishBase(at);
    std::optional<ClockMatch> best;
    for (auto m : matches) {
      if (m.hour < 0 || m.hour > 23 || m.minute < 0 || m.minute > 59) continue;
      Finish(at, m);
      if (!best || m.end > best->end) best = m;
    }
    if (!best) return std::nullopt;
    CandidateParse c;
    c.span = {at, best->end};
    c.kind = CandidateKind::kClockPhrase;
    c.value = TimeOfDay{best->hour, best->minute, best->hint};
    return c;
  }

 private:
  std::string_view Lw(std::size_t i) const {
    return i < tokens_.size() ? std::string_view(tokens_[i].lowercased)
                              : std::string_view();
  }

  std::optional<int> HourWord(std::size_t i, int lo, int hi) const {
    if (i >= tokens_.size()) return std::nullopt;
    auto r = CardinalExact(tokens_, i, i + 1, language_);
    if (!r) return std::nullopt;
    return SmallInteger(*r, lo, hi);
  }

  // (end, value) for minute-count readings starting at i.
  std::vector<std::pair<std::size_t, int>> Minutes(std::size_t i, int lo,
                                                   int hi) const {
    std::vector<std::pair<std::size_t, int>> out;
    if (i >= tokens_.size()) return out;
    for (const auto& o : CardinalOptions(tokens_, i, language_)) {
      if (auto v = SmallInteger(o.reading, lo, hi)) out.emplace_back(o.end, *v);
    }
    return out;
  }

  static int HourBefore(int hour) { return hour == 1 ? 12 : hour - 1; }

  static std::optional<PeriodHint> AmPm(std::string_view w) {
    if (w == "am" || w == "a.m" || w == "a.m.") return PeriodHint::kExplicitAm;
    if (w == "pm" || w == "p.m" || w == "p.m.") return PeriodHint::kExplicitPm;
    return std::nullopt;
  }

  struct DigitClock {
    int hour;
    std::optional<int> minute;
    std::optional<PeriodHint> ampm;
  };

  static std::optional<DigitClock> ParseDigitClock(const std::string& lower) {
    static const std::regex re(
        R"(^(\d{1,2})(?:[:.](\d{2}))?(am|pm|a\.m\.?|p\.m\.?)?$)");
    std::smatch m;
    if (!std::regex_match(lower, m, re)) return std::nullopt;
    DigitClock d{std::stoi(m[1].str()), std::nullopt, std::nullopt};
    if (m[2].matched) d.minute = std::stoi(m[2].str());
    if (m[3].matched) d.ampm = AmPm(m[3].str());
    return d;
  }

  std::vector<ClockMatch> EnglishBase(std::size_t at) const {
    std::vector<ClockMatch> out;
    // [a] quarter past/to H
    std::size_t j = at;
    if (Lw(j) == "a" && Lw(j + 1) == "quarter") ++j;
    if (Lw(j) == "quarter") {
      auto rel = Lw(j + 1);
      if (auto h = HourWord(j + 2, 1, 12)) {
        if (rel == "past" || rel == "after") out.push_back({j + 3, *h, 15});
        if (rel == "to" || rel == "before" || rel == "till") {
          out.push_back({j + 3, HourBefore(*h), 45});
        }
      }
    }
    // half past H
    if (Lw(at) == "half" && Lw(at + 1) == "past") {
      if (auto h = HourWord(at + 2, 1, 12)) out.push_back({at + 3, *h, 30});
    }
    // M [minutes] past/to H
    for (auto [k, m] : Minutes(at, 1, 59)) {
      bool has_word = false;
      if (Lw(k) == "minute" || Lw(k) == "minutes") {
        has_word = true;
        ++k;
      }
      auto rel = Lw(k);
      auto h = HourWord(k + 1, 1, 12);
      if (!h) continue;
      if (rel == "past" || rel == "after") out.push_back({k + 2, *h, m});
      if (has_word && (rel == "to" || rel == "before")) {
        out.push_back({k + 2, HourBefore(*h), 60 - m});
      }
    }
    if (auto h = HourWord(at, 1, 12)) {
      // H o'clock
      if (IsOClock(Lw(at + 1))) out.push_back({at + 2, *h, 0});
      // H MM am/pm
      if (Lw(at + 1) == "oh") {
        if (auto m = HourWord(at + 2, 1, 9)) {
          if (auto ap = AmPm(Lw(at + 3))) {
            out.push_back({at + 4, *h, *m, *ap, false});
          }
        }
      }
      for (auto [k, m] : Minutes(at + 1, 10, 59)) {
        if (auto ap = AmPm(Lw(k))) out.push_back({k + 1, *h, m, *ap, false});
      }
      // H am/pm
      if (auto ap = AmPm(Lw(at + 1))) {
        out.push_back({at + 2, *h, 0, *ap, false});
      }
    }
    // Digit forms: "4pm", "4 pm", "4:30 pm", "10 o'clock".
    if (auto d = ParseDigitClock(tokens_[at].lowercased)) {
      if (d->hour >= 1 && d->hour <= 12) {
        const int minute = d->minute.value_or(0);
        if (d->ampm) {
          out.push_back({at + 1, d->hour, minute, *d->ampm, false});
        } else if (auto ap = AmPm(Lw(at + 1))) {
          out.push_back({at + 2, d->hour, minute, *ap, false});
        } else if (!d->minute && IsOClock(Lw(at + 1))) {
          out.push_back({at + 2, d->hour, 0});
        }
      }
    }
    return out;
  }

  static bool IsOClock(std::string_view w) {
    return w == "o'clock" || w == "o\xE2\x80\x99" "clock" || w == "oclock";
  }

  std::vector<ClockMatch> GermanBase(std::size_t at) const {
    std::vector<ClockMatch> out;
    if (Lw(at) == "viertel") {
      if (auto h = HourWord(at + 2, 1, 12)) {
        if (Lw(at + 1) == "nach") out.push_back({at + 3, *h, 15});
        if (Lw(at + 1) == "vor") out.push_back({at + 3, HourBefore(*h), 45});
      }
    }
    if (Lw(at) == "dreiviertel") {
      if (auto h = HourWord(at + 1, 1, 12)) {
        out.push_back({at + 2, HourBefore(*h), 45});
      }
    }
    if (Lw(at) == "halb") {
      if (auto h = HourWord(at + 1, 1, 12)) {
        out.push_back({at + 2, HourBefore(*h), 30});
      }
    }
    for (auto [k, m] : Minutes(at, 1, 59)) {
      if (Lw(k) == "minute" || Lw(k) == "minuten") ++k;
      auto h = HourWord(k + 1, 1, 12);
      if (!h) continue;
      if (Lw(k) == "nach") out.push_back({k + 2, *h, m});
      if (Lw(k) == "vor") out.push_back({k + 2, HourBefore(*h), 60 - m});
    }
    // H Uhr [M]
    if (Lw(at + 1) == "uhr") {
      if (auto h = HourWord(at, 0, 23)) {
        out.push_back({at + 2, *h, 0, PeriodHint::kUnspecified, false});
        if (auto m = HourWord(at + 2, 1, 59)) {
          out.push_back({at + 3, *h, *m, PeriodHint::kUnspecified, false});
        }
      } else if (auto d = ParseDigitClock(tokens_[at].lowercased)) {
        if (!d->ampm) {
          out.push_back({at + 2, d->hour, d->minute.value_or(0),
                         PeriodHint::kUnspecified, false});
        }
      }
    }
    return out;
  }

  // Suffixes (am/pm, "Uhr"), adjacent period phrases, then context hints.
  void Finish(std::size_t at, ClockMatch& m) const {
    if (language_ == Language::kEnglish) {
      if (m.open_suffix) {
        if (auto ap = AmPm(Lw(m.end))) {
          m.hint = *ap;
          ++m.end;
        }
      }
    } else if (m.open_suffix && Lw(m.end) == "uhr") {
      ++m.end;
    }
    if (m.hint == PeriodHint::kUnspecified) {
      auto [len, hint] = TrailingPeriod(m.end);
      if (len > 0) {
        m.end += len;
        m.hint = hint;
      }
    }
    if (m.hint == PeriodHint::kUnspecified) m.hint = ContextPeriod(at);
  }

  std::pair<std::size_t, PeriodHint> TrailingPeriod(std::size_t i) const {
    if (language_ == Language::kEnglish) {
      if ((Lw(i) == "in" && Lw(i + 1) == "the") ||
          (Lw(i) == "this")) {
        const std::size_t w = Lw(i) == "this" ? i + 1 : i + 2;
        if (auto h = EnglishPeriodWord(Lw(w))) return {w + 1 - i, *h};
      }
      if (Lw(i) == "at" && Lw(i + 1) == "night") {
        return {2, PeriodHint::kNight};
      }
      if (Lw(i) == "tonight") return {1, PeriodHint::kEvening};
      return {0, PeriodHint::kUnspecified};
    }
    if (auto h = GermanAdverb(Lw(i))) return {1, *h};
    if (Lw(i) == "am") {
      if (auto h = GermanNoun(Lw(i + 1))) return {2, *h};
    }
    if (Lw(i) == "in" && Lw(i + 1) == "der" && Lw(i + 2) == "nacht") {
      return {3, PeriodHint::kNight};
    }
    return {0, PeriodHint::kUnspecified};
  }

  PeriodHint ContextPeriod(std::size_t at) const {
    const std::size_t from = at >= 4 ? at - 4 : 0;
    for (std::size_t i = at; i > from; --i) {
      auto w = Lw(i - 1);
      std::optional<PeriodHint> h;
      if (language_ == Language::kEnglish) {
        h = w == "tonight" ? std::optional(PeriodHint::kEvening)
                           : EnglishPeriodWord(w);
      } else {
        h = GermanAdverb(w);
        if (!h) h = GermanNoun(w);
      }
      if (h) return *h;
    }
    return PeriodHint::kUnspecified;
  }

  static std::optional<PeriodHint> EnglishPeriodWord(std::string_view w) {
    if (w == "morning") return PeriodHint::kMorning;
    if (w == "afternoon") return PeriodHint::kAfternoon;
    if (w == "evening") return PeriodHint::kEvening;
    if (w == "night") return PeriodHint::kNight;
    return std::nullopt;
  }

  static std::optional<PeriodHint> GermanAdverb(std::string_view w) {
    if (w == "morgens" || w == "fr\xC3\xBCh" || w == "vormittags") {
      return PeriodHint::kMorning;
    }
    if (w == "mittags" || w == "nachmittags") return PeriodHint::kAfternoon;
    if (w == "abends") return PeriodHint::kEvening;
    if (w == "nachts") return PeriodHint::kNight;
    return std::nullopt;
  }

  // "Morgen" alone also means "tomorrow", so it only counts after "am".
  std::optional<PeriodHint> GermanNoun(std::string_view w) const {
    if (w == "morgen" || w == "vormittag") return PeriodHint::kMorning;
    if (w == "mittag" || w == "nachmittag") return PeriodHint::kAfternoon;
    if (w == "abend") return PeriodHint::kEvening;
    if (w == "nacht") return PeriodHint::kNight;
    return std::nullopt;
  }

  const std::vector<Token>& tokens_;
  Language language_;
};

// ---------------------------------------------------------------------------
// Currency phrases

const CurrencyUnit* CurrencyForMinorWord(const Locale& locale,
                                         std::string_view word) {
  const CurrencyUnit& def = locale.default_currency();
  if (locale.IsMinorWord(def, word)) return &def;
  for (const auto& c : locale.currencies()) {
    if (locale.IsMinorWord(c, word)) return &c;
  }
  return nullptr;
}

}  // namespace

std::optional<CandidateParse> ParseCardinal(const std::vector<Token>& tokens,
                                            std::size_t at,
                                            const Locale& locale) {
  if (at >= tokens.size()) return std::nullopt;
  auto options = CardinalOptions(tokens, at, locale.language());
  if (options.empty()) return std::nullopt;
  auto& best = options.front();
  CandidateParse c;
  c.span = {at, best.end};
  c.kind = CandidateKind::kCardinal;
  c.value = best.reading.value;
  c.magnitude_word = best.reading.magnitude;
  c.pair_reading = best.reading.pair;
  return c;
}

std::optional<CandidateParse> ParseClockPhrase(const std::vector<Token>& tokens,
                                               std::size_t at,
                                               const Locale& locale) {
  return ClockParser(tokens, locale).Parse(at);
}

std::optional<CandidateParse> ParseCurrencyPhrase(
    const std::vector<Token>& tokens, std::size_t at, const Locale& locale) {
  auto major = ParseCardinal(tokens, at, locale);
  if (!major || major->number().negative) return std::nullopt;
  const std::size_t unit_at = major->span.end;
  if (unit_at >= tokens.size()) return std::nullopt;
  const std::string& unit_word = tokens[unit_at].lowercased;

  MoneyPayload money;
  money.unit_word = tokens[unit_at].surface;
  CandidateParse c;
  c.kind = CandidateKind::kCurrencyPhrase;

  if (const CurrencyUnit* unit = locale.CurrencyForMajorWord(unit_word)) {
    money.currency_code = unit->code;
    money.major = major->number();
    money.magnitude_word = major->magnitude_word;
    if (!money.magnitude_word &&
        money.major.scale > unit->minor_unit_digits) {
      return std::nullopt;
    }
    std::size_t end = unit_at + 1;
    const bool tail_allowed = !money.magnitude_word &&
                              money.major.scale == 0 &&
                              unit->minor_unit_digits > 0;
    if (tail_allowed && end < tokens.size()) {
      std::size_t k = end;
      const bool has_and =
          tokens[k].lowercased == "and" || tokens[k].lowercased == "und";
      if (has_and) ++k;
      if (auto minor = ParseCardinal(tokens, k, locale);
          minor && !minor->magnitude_word && minor->number().IsInteger() &&
          !minor->number().negative) {
        const std::size_t after = minor->span.end;
        const bool minor_word =
            after < tokens.size() &&
            locale.IsMinorWord(*unit, tokens[after].lowercased);
        if (minor_word || !has_and) {
          if (minor->number().mantissa >= 100) {
            if (minor_word) return std::nullopt;
          } else {
            money.minor = minor->number();
            money.minor_spoken = true;
            end = minor_word ? after + 1 : after;
          }
        }
      }
    }
    c.span = {at, end};
    c.value = std::move(money);
    return c;
  }

  if (const CurrencyUnit* unit = CurrencyForMinorWord(locale, unit_word)) {
    const NumericValue& v = major->number();
    if (major->magnitude_word || !v.IsInteger() || unit->minor_unit_digits == 0)
      return std::nullopt;
    if (v.mantissa >= 100) return std::nullopt;
    money.currency_code = unit->code;
    money.major = NumericValue::Integer(0);
    money.minor = v;
    money.minor_spoken = true;
    c.span = {at, unit_at + 1};
    c.value = std::move(money);
    return c;
  }
  return std::nullopt;
}

std::vector<CandidateParse> ScanTokens(const std::vector<Token>& tokens,
                                       const Locale& locale) {
  std::vector<CandidateParse> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!tokens[i].is_word) {
      ++i;
      continue;
    }
    std::optional<CandidateParse> best = ParseCurrencyPhrase(tokens, i, locale);
    auto consider = [&](std::optional<CandidateParse> c) {
      if (c && (!best || c->span.end > best->span.end)) best = std::move(c);
    };
    consider(ParseClockPhrase(tokens, i, locale));

    auto options = CardinalOptions(tokens, i, locale.language());
    if (!options.empty() && !options.front().article) {
      consider(ParseCardinal(tokens, i, locale));
    }
    if (!best) {
      ++i;
      continue;
    }
    i = best->span.end;
    out.push_back(std::move(*best));
  }
  return out;
}

std::vector<CandidateParse> ScanSentence(std::string_view sentence,
                                         const Locale& locale) {
  return ScanTokens(Tokenize(sentence), locale);
}

bool IsNumberWord(std::string_view lowercased, Language language) {
  auto atoms = lexicon::Atomize(lowercased, lowercased, 0, language);
  if (!atoms) return false;
  return std::any_of(atoms->begin(), atoms->end(), [](const Atom& a) {
    return a.kind != AtomKind::kPoint && a.kind != AtomKind::kMinus &&
           a.kind != AtomKind::kOh;
  });
}

}  // namespace numex
