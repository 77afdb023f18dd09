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

// Chinese text <-> virtual script.
//
// Characters of one word are joined with "-", adjacent words are separated
// by one space, and anything that is not a known character passes through.
// Passthrough symbols that could be read as part of a form (Latin letters,
// tone vowels, "-", "'", "·", "\", "⟦", "⟧") are escaped with a backslash,
// so decoding is exact.

#ifndef VCC_CODEC_H_
#define VCC_CODEC_H_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcc/lexicon.h"

namespace vcc {

class WordList {
 public:
  WordList() = default;

  // Throws MalformedInput for words shorter than two characters.
  void add(std::string_view word, double frequency = 0.0);

  bool contains(std::string_view word) const;
  size_t size() const { return words_.size(); }
  size_t max_length() const { return max_length_; }  // in characters
  const std::map<std::string, double, std::less<>>& words() const {
    return words_;
  }

 private:
  std::map<std::string, double, std::less<>> words_;
  size_t max_length_ = 0;
};

// Columns: word, then an optional frequency. See docs/formats.md.
WordList load_word_list(std::istream& in, std::string_view source_name = "words");

struct WordToken {
  std::vector<std::string> glyphs;
  friend bool operator==(const WordToken&, const WordToken&) = default;
};

struct Passthrough {
  std::string text;
  friend bool operator==(const Passthrough&, const Passthrough&) = default;
};

using Token = std::variant<WordToken, Passthrough>;
using TokenStream = std::vector<Token>;

// Concatenation of every token; equals the segmented text.
std::string join_tokens(const TokenStream& tokens);

// Digits that always group into one word: 一 .. 十, 百 千 万 亿 兆 京, 零 两.
bool is_numeral_glyph(std::string_view glyph);

// Greedy longest match over runs of lexicon characters. At each position the
// longer of the longest listed word and the run of numeral glyphs wins (a
// listed word on ties); otherwise the character stands alone. Everything
// that is not a lexicon character becomes Passthrough.
TokenStream segment(std::string_view text, const Lexicon& lexicon,
                    const WordList& words);

enum class UnknownPolicy { kError, kMark };

struct EncodeResult {
  std::string text;
  size_t unknown = 0;  // Chinese characters missing from the lexicon
};

// Throws UnknownCharacter (with the code point position) for a Chinese
// character missing from the lexicon under kError; kMark writes it as ⟦X⟧.
EncodeResult encode_text(std::string_view text, const Lexicon& lexicon,
                         const WordList& words,
                         UnknownPolicy policy = UnknownPolicy::kError);

// Throws UnknownToken or MalformedToken with the code point position.
std::string decode_text(std::string_view vtext, const Lexicon& lexicon);

// Code points that may appear inside a rendered form.
bool is_form_symbol(char32_t cp);

}  // namespace vcc

#endif  // VCC_CODEC_H_
