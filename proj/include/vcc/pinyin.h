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

// Pinyin syllables under the virtual-script tone scheme.
//
// Tones are written with macron (1st), acute (2nd), CIRCUMFLEX (3rd) and
// grave (4th); the neutral tone is unmarked. Carons are accepted on input and
// read as 3rd tone. The vowel ü never appears in rendered output: it is
// written as the digraph "uu", and when ü carries the tone the mark sits on
// the second u ("lü" 3rd tone renders as "luû").

#ifndef VCC_PINYIN_H_
#define VCC_PINYIN_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vcc {

enum class Tone : uint8_t {
  kNeutral = 0,
  kFirst = 1,
  kSecond = 2,
  kThird = 3,
  kFourth = 4,
};

// Assignment order used when tones disambiguate colliding forms.
inline constexpr std::array<Tone, 5> kToneOrder = {
    Tone::kNeutral, Tone::kFirst, Tone::kSecond, Tone::kThird, Tone::kFourth};

inline constexpr int tone_number(Tone t) { return static_cast<int>(t); }

// Returns the tone for a digit 0..4; throws MalformedSyllable otherwise.
Tone tone_from_number(int n);

// A validated (base, tone) pair. The base is lowercase a-z plus ü, with no
// tone marks, and follows initial + vowel nucleus + final. A base without any
// vowel (a bare initial such as "h", used for short radical names) is
// accepted only with the neutral tone, since there is nothing to mark.
class Syllable {
 public:
  // Throws Error(kMalformedSyllable) when the pair is invalid.
  Syllable(std::string base, Tone tone);

  const std::string& base() const { return base_; }
  Tone tone() const { return tone_; }
  bool has_vowel() const;

  Syllable with_tone(Tone tone) const { return Syllable(base_, tone); }

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;

 private:
  std::string base_;
  Tone tone_;
};

// True when `base` satisfies the syllable grammar (ignoring tone).
bool is_valid_base(std::string_view base);

// Accepts numeric style ("zhi1", "lv3") or diacritic style ("zhī", "shǎo",
// "luû", "luǚ"), including combining diacritics.
Syllable parse_syllable(std::string_view text);

std::string render_syllable(const Syllable& s);

// Final rewrites ing->ig, ong->og, uang->ug on every syllable-shaped run of
// an already rendered string. Tone marks survive on the remaining vowel.
std::string abbreviate(std::string_view rendered);

// The same rewrites applied to a syllable base; the tone is kept.
Syllable abbreviate_syllable(const Syllable& s);

// Precomposed lowercase vowel carrying the given (non-neutral) tone mark.
char32_t marked_vowel(char32_t vowel, Tone tone);

// Classifies a single code point that may occur in rendered pinyin: the
// plain letter it carries and its tone mark (kNeutral when unmarked). Returns
// false for anything that is not a pinyin letter. Carons map to kThird, and
// the ü family maps to letter U+00FC.
bool classify_letter(char32_t cp, char32_t* letter, Tone* tone);

}  // namespace vcc

#endif  // VCC_PINYIN_H_
