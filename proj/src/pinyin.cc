// Copyright 2026 The vcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcc/pinyin.h"

#include <algorithm>
#include <optional>

#include "vcc/error.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

constexpr char32_t kUmlautU = U'ü';

// Rows: a e i o u. Columns: tones 1..4 (macron, acute, circumflex, grave).
constexpr char32_t kMarked[5][4] = {
    {U'ā', U'á', U'â', U'à'},
    {U'ē', U'é', U'ê', U'è'},
    {U'ī', U'í', U'î', U'ì'},
    {U'ō', U'ó', U'ô', U'ò'},
    {U'ū', U'ú', U'û', U'ù'},
};
constexpr char32_t kPlainVowels[5] = {U'a', U'e', U'i', U'o', U'u'};

// Caron forms are an alternate spelling of the third tone.
constexpr char32_t kCaron[5] = {U'ǎ', U'ě', U'ǐ', U'ǒ',
                                U'ǔ'};
// ü with tones 1..4.
constexpr char32_t kUmlautMarked[4] = {U'ǖ', U'ǘ', U'ǚ',
                                       U'ǜ'};

bool is_vowel(char32_t c) {
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' ||
         c == kUmlautU;
}

bool is_consonant(char32_t c) {
  return c >= U'a' && c <= U'z' && !is_vowel(c);
}

std::optional<Tone> combining_tone(char32_t cp) {
  switch (cp) {
    case U'̄': return Tone::kFirst;
    case U'́': return Tone::kSecond;
    case U'̂': return Tone::kThird;
    case U'̌': return Tone::kThird;
    case U'̀': return Tone::kFourth;
    default: return std::nullopt;
  }
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::kMalformedSyllable,
              "\"" + std::string(text) + "\": " + std::string(why));
}

bool matches_grammar(const std::u32string& b) {
  if (b.empty() || b.size() > 8) return false;
  if (b.front() == kUmlautU) return false;
  if (std::count(b.begin(), b.end(), kUmlautU) > 1) return false;
  for (char32_t c : b) {
    if (!is_vowel(c) && !is_consonant(c)) return false;
  }
  static constexpr std::u32string_view kInitials = U"bpmfdtnlgkhjqxrzcsyw";
  if (std::none_of(b.begin(), b.end(), is_vowel)) {
    // A bare initial.
    if (b.size() == 2) {
      return b[1] == U'h' && (b[0] == U'z' || b[0] == U'c' || b[0] == U's');
    }
    return b.size() == 1 && kInitials.find(b[0]) != std::u32string_view::npos;
  }

  size_t i = 0;
  if (b.size() >= 2 && b[1] == U'h' &&
      (b[0] == U'z' || b[0] == U'c' || b[0] == U's')) {
    i = 2;
  } else if (is_consonant(b[0])) {
    if (kInitials.find(b[0]) == std::u32string_view::npos) return false;
    i = 1;
  }
  const size_t nucleus_start = i;
  while (i < b.size() && is_vowel(b[i])) ++i;
  const size_t vowels = i - nucleus_start;
  if (vowels == 0 || vowels > 3) return false;
  for (size_t k = nucleus_start + 1; k < i; ++k) {
    if (b[k] == U'u' && b[k - 1] == U'u') return false;  // reserved for ü
  }
  const std::u32string_view rest(b.data() + i, b.size() - i);
  return rest.empty() || rest == U"n" || rest == U"ng" || rest == U"r" ||
         rest == U"g";
}

// Index of the vowel that carries the tone mark: a > e > o > last of i/u/ü.
size_t nucleus_index(const std::u32string& b) {
  for (char32_t preferred : {U'a', U'e', U'o'}) {
    if (auto pos = b.find(preferred); pos != std::u32string::npos) return pos;
  }
  for (size_t k = b.size(); k-- > 0;) {
    if (is_vowel(b[k])) return k;
  }
  return std::u32string::npos;
}

struct Rewrite {
  std::u32string_view from;
  std::u32string_view to;
};
constexpr Rewrite kFinalRewrites[] = {
    {U"uang", U"ug"},
    {U"ing", U"ig"},
    {U"ong", U"og"},
};

bool ends_with(std::u32string_view s, std::u32string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Tone tone_from_number(int n) {
  if (n < 0 || n > 4) {
    throw Error(ErrorKind::kMalformedSyllable,
                "tone number out of range: " + std::to_string(n));
  }
  return static_cast<Tone>(n);
}

char32_t marked_vowel(char32_t vowel, Tone tone) {
  if (tone == Tone::kNeutral) return vowel;
  for (int row = 0; row < 5; ++row) {
    if (kPlainVowels[row] == vowel) return kMarked[row][tone_number(tone) - 1];
  }
  return vowel;
}

bool classify_letter(char32_t cp, char32_t* letter, Tone* tone) {
  if (cp >= U'a' && cp <= U'z') {
    *letter = cp == U'v' ? kUmlautU : cp;
    *tone = Tone::kNeutral;
    return true;
  }
  if (cp == kUmlautU) {
    *letter = kUmlautU;
    *tone = Tone::kNeutral;
    return true;
  }
  for (int row = 0; row < 5; ++row) {
    for (int col = 0; col < 4; ++col) {
      if (kMarked[row][col] == cp) {
        *letter = kPlainVowels[row];
        *tone = static_cast<Tone>(col + 1);
        return true;
      }
    }
    if (kCaron[row] == cp) {
      *letter = kPlainVowels[row];
      *tone = Tone::kThird;
      return true;
    }
  }
  for (int col = 0; col < 4; ++col) {
    if (kUmlautMarked[col] == cp) {
      *letter = kUmlautU;
      *tone = static_cast<Tone>(col + 1);
      return true;
    }
  }
  return false;
}

bool is_valid_base(std::string_view base) {
  try {
    return matches_grammar(utf8::decode(base));
  } catch (const Error&) {
    return false;
  }
}

Syllable::Syllable(std::string base, Tone tone)
    : base_(std::move(base)), tone_(tone) {
  if (!is_valid_base(base_)) malformed(base_, "not a valid syllable base");
  if (tone_ != Tone::kNeutral && !has_vowel()) {
    malformed(base_, "tone given but the nucleus is empty");
  }
}

bool Syllable::has_vowel() const {
  const std::u32string b = utf8::decode(base_);
  return std::any_of(b.begin(), b.end(), is_vowel);
}

Syllable parse_syllable(std::string_view text) {
  if (text.empty()) malformed(text, "empty");
  std::u32string cps;
  try {
    cps = utf8::decode(text);
  } catch (const Error&) {
    malformed(text, "invalid UTF-8");
  }

  std::optional<Tone> tone;
  int tone_marks = 0;
  if (cps.back() >= U'0' && cps.back() <= U'9') {
    tone = tone_from_number(static_cast<int>(cps.back() - U'0'));
    ++tone_marks;
    cps.pop_back();
  }

  std::u32string letters;
  for (char32_t cp : cps) {
    char32_t letter;
    Tone t;
    if (classify_letter(cp, &letter, &t)) {
      letters.push_back(letter);
      if (t != Tone::kNeutral) {
        tone = t;
        ++tone_marks;
      }
    } else if (auto ct = combining_tone(cp)) {
      if (letters.empty() || !is_vowel(letters.back())) {
        malformed(text, "tone mark without a vowel");
      }
      tone = *ct;
      ++tone_marks;
    } else if (cp == U'̈' && !letters.empty() && letters.back() == U'u') {
      letters.back() = kUmlautU;
    } else {
      malformed(text, "illegal letter");
    }
  }
  if (tone_marks > 1) malformed(text, "more than one tone indicator");
  if (letters.empty()) malformed(text, "empty nucleus");

  // The rendered digraphs "uu" and "uü" both stand for ü.
  std::u32string base;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] == U'u' && k + 1 < letters.size() &&
        (letters[k + 1] == U'u' || letters[k + 1] == kUmlautU)) {
      base.push_back(kUmlautU);
      ++k;
    } else {
      base.push_back(letters[k]);
    }
  }
  return Syllable(utf8::encode(base), tone.value_or(Tone::kNeutral));
}

std::string render_syllable(const Syllable& s) {
  const std::u32string b = utf8::decode(s.base());
  const size_t nucleus =
      s.tone() == Tone::kNeutral ? std::u32string::npos : nucleus_index(b);
  std::u32string out;
  for (size_t k = 0; k < b.size(); ++k) {
    const Tone t = k == nucleus ? s.tone() : Tone::kNeutral;
    if (b[k] == kUmlautU) {
      out.push_back(U'u');
      out.push_back(marked_vowel(U'u', t));
    } else {
      out.push_back(marked_vowel(b[k], t));
    }
  }
  return utf8::encode(out);
}

std::string abbreviate(std::string_view rendered) {
  const std::u32string in = utf8::decode(rendered);
  std::u32string out;
  size_t i = 0;
  while (i < in.size()) {
    char32_t letter;
    Tone tone;
    if (!classify_letter(in[i], &letter, &tone)) {
      out.push_back(in[i++]);
      continue;
    }
    // A maximal run of pinyin letters is one syllable.
    std::u32string plain;
    std::u32string original;
    Tone run_tone = Tone::kNeutral;
    size_t marked_at = std::u32string::npos;
    while (i < in.size() && classify_letter(in[i], &letter, &tone)) {
      if (tone != Tone::kNeutral) {
        run_tone = tone;
        marked_at = plain.size();
      }
      plain.push_back(letter == kUmlautU ? U'u' : letter);
      original.push_back(in[i]);
      ++i;
    }
    bool rewritten = false;
    for (const Rewrite& r : kFinalRewrites) {
      if (!ends_with(plain, r.from)) continue;
      const size_t stem = plain.size() - r.from.size();
      out.append(original, 0, stem);
      // The surviving vowel of the new final takes the mark if the old final
      // carried it.
      const bool mark_in_final = marked_at != std::u32string::npos &&
                                 marked_at >= stem;
      out.push_back(marked_vowel(r.to[0], mark_in_final ? run_tone
                                                        : Tone::kNeutral));
      out.append(r.to.substr(1));
      rewritten = true;
      break;
    }
    if (!rewritten) out.append(original);
  }
  return utf8::encode(out);
}

Syllable abbreviate_syllable(const Syllable& s) {
  std::u32string b = utf8::decode(s.base());
  for (const Rewrite& r : kFinalRewrites) {
    if (ends_with(b, r.from)) {
      b.resize(b.size() - r.from.size());
      b.append(r.to);
      break;
    }
  }
  return Syllable(utf8::encode(b), s.tone());
}

}  // namespace vcc
