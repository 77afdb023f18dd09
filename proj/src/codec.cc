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

#include "vcc/codec.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "vcc/error.h"
#include "vcc/pinyin.h"
#include "vcc/tsv.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

constexpr char32_t kEscape = U'\\';
constexpr char32_t kMarkOpen = U'⟦';
constexpr char32_t kMarkClose = U'⟧';
constexpr char32_t kMiddleDot = U'·';

bool is_space_run(std::u32string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char32_t c) { return c == U' '; });
}

void append_escaped(std::string& out, std::u32string_view text) {
  for (char32_t c : text) {
    if (is_form_symbol(c) || c == kEscape || c == kMarkOpen ||
        c == kMarkClose) {
      utf8::append(out, kEscape);
    }
    utf8::append(out, c);
  }
}

std::string position(size_t cp_index) {
  return "at character " + std::to_string(cp_index);
}

}  // namespace

void WordList::add(std::string_view word, double frequency) {
  const size_t len = utf8::length(word);
  if (len < 2) {
    throw Error(ErrorKind::kMalformedInput,
                "word \"" + std::string(word) + "\" has fewer than two characters");
  }
  words_.insert_or_assign(std::string(word), frequency);
  max_length_ = std::max(max_length_, len);
}

bool WordList::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

WordList load_word_list(std::istream& in, std::string_view source_name) {
  TsvReader reader(in, source_name, {"word"});
  WordList words;
  TsvRow row;
  while (reader.next(&row)) {
    const auto& f = row.fields;
    if (f.size() > 2) reader.fail(row, "expected 1 or 2 columns");
    double freq = 0.0;
    if (f.size() == 2 && !is_absent(f[1])) {
      auto [ptr, ec] =
          std::from_chars(f[1].data(), f[1].data() + f[1].size(), freq);
      if (ec != std::errc() || ptr != f[1].data() + f[1].size() ||
          !std::isfinite(freq) || freq < 0) {
        reader.fail(row, "frequency must be a non-negative number");
      }
    }
    try {
      words.add(f[0], freq);
    } catch (const Error& e) {
      reader.fail(row, e.detail());
    }
  }
  return words;
}

std::string join_tokens(const TokenStream& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (const auto* w = std::get_if<WordToken>(&t)) {
      for (const std::string& g : w->glyphs) out += g;
    } else {
      out += std::get<Passthrough>(t).text;
    }
  }
  return out;
}

bool is_numeral_glyph(std::string_view glyph) {
  static constexpr std::string_view kNumerals[] = {
      "一", "二", "三", "四", "五", "六", "七", "八", "九", "十",
      "百", "千", "万", "亿", "兆", "京", "零", "两"};
  return std::find(std::begin(kNumerals), std::end(kNumerals), glyph) !=
         std::end(kNumerals);
}

bool is_form_symbol(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp == U'-' || cp == U'\'' || cp == kMiddleDot) return true;
  if (cp >= 0x0300 && cp <= 0x036F) return true;  // combining marks
  char32_t letter;
  Tone tone;
  return classify_letter(cp, &letter, &tone);
}

TokenStream segment(std::string_view text, const Lexicon& lexicon,
                    const WordList& words) {
  const std::vector<std::string> cps = utf8::split_code_points(text);
  TokenStream out;
  std::string pending;
  auto flush = [&] {
    if (!pending.empty()) out.push_back(Passthrough{std::move(pending)});
    pending.clear();
  };

  size_t i = 0;
  while (i < cps.size()) {
    if (lexicon.find(cps[i]) == nullptr) {
      pending += cps[i++];
      continue;
    }
    flush();
    size_t run_end = i;
    while (run_end < cps.size() && lexicon.find(cps[run_end]) != nullptr) {
      ++run_end;
    }
    while (i < run_end) {
      size_t take = 1;
      const size_t limit = std::min(run_end - i, words.max_length());
      std::string candidate = cps[i];
      for (size_t len = 2; len <= limit; ++len) {
        candidate += cps[i + len - 1];
        if (words.contains(candidate)) take = len;
      }
      size_t numerals = 0;
      while (i + numerals < run_end && is_numeral_glyph(cps[i + numerals])) {
        ++numerals;
      }
      take = std::max(take, numerals);
      out.push_back(WordToken{{cps.begin() + i, cps.begin() + i + take}});
      i += take;
    }
  }
  flush();
  return out;
}

EncodeResult encode_text(std::string_view text, const Lexicon& lexicon,
                         const WordList& words, UnknownPolicy policy) {
  const TokenStream tokens = segment(text, lexicon, words);
  EncodeResult result;
  std::string& out = result.text;
  size_t pos = 0;  // code point offset of the current token
  bool after_word = false;
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (const auto* w = std::get_if<WordToken>(&tokens[t])) {
      if (after_word) out += ' ';
      for (size_t k = 0; k < w->glyphs.size(); ++k) {
        if (k) out += '-';
        out += lexicon.find(w->glyphs[k])->rendered();
      }
      pos += w->glyphs.size();
      after_word = true;
      continue;
    }
    const std::u32string pass =
        utf8::decode(std::get<Passthrough>(tokens[t]).text);
    const bool between_words =
        after_word && t + 1 < tokens.size() &&
        std::holds_alternative<WordToken>(tokens[t + 1]);
    if (between_words && is_space_run(pass)) out += ' ';
    size_t start = 0;
    for (size_t k = 0; k < pass.size(); ++k) {
      if (!utf8::is_han(pass[k])) continue;
      if (policy == UnknownPolicy::kError) {
        throw Error(ErrorKind::kUnknownCharacter,
                    utf8::encode(pass[k]) + " " + position(pos + k));
      }
      append_escaped(out, pass.substr(start, k - start));
      utf8::append(out, kMarkOpen);
      utf8::append(out, pass[k]);
      utf8::append(out, kMarkClose);
      ++result.unknown;
      start = k + 1;
    }
    append_escaped(out, std::u32string_view(pass).substr(start));
    pos += pass.size();
    after_word = false;
  }
  return result;
}

std::string decode_text(std::string_view vtext, const Lexicon& lexicon) {
  const std::u32string in = utf8::decode(vtext);
  std::string out;
  std::u32string gap;  // literal text since the last form run
  bool after_form = false;

  auto decode_run = [&](size_t begin, size_t end) {
    size_t piece_start = begin;
    for (size_t k = begin; k <= end; ++k) {
      if (k < end && in[k] != U'-') continue;
      const std::string piece =
          utf8::encode(std::u32string_view(in).substr(piece_start, k - piece_start));
      if (piece.empty()) {
        throw Error(ErrorKind::kMalformedToken,
                    "empty form around \"-\" " + position(piece_start));
      }
      std::string canonical;
      try {
        canonical = VirtualForm::parse(piece).rendered();
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kMalformedToken) {
          throw Error(ErrorKind::kMalformedToken,
                      e.detail() + " " + position(piece_start));
        }
        throw Error(ErrorKind::kUnknownToken,
                    "\"" + piece + "\" " + position(piece_start));
      }
      const std::string* glyph = lexicon.glyph_for(canonical);
      if (glyph == nullptr) {
        throw Error(ErrorKind::kUnknownToken,
                    "\"" + piece + "\" " + position(piece_start));
      }
      out += *glyph;
      piece_start = k + 1;
    }
  };

  size_t i = 0;
  while (i < in.size()) {
    const char32_t c = in[i];
    if (c == kEscape) {
      if (i + 1 >= in.size()) {
        throw Error(ErrorKind::kMalformedToken, "dangling \"\\\" " + position(i));
      }
      gap += in[i + 1];
      i += 2;
    } else if (c == kMarkOpen) {
      const size_t close = in.find(kMarkClose, i + 1);
      if (close == std::u32string::npos) {
        throw Error(ErrorKind::kMalformedToken, "unclosed \"⟦\" " + position(i));
      }
      gap.append(in, i + 1, close - i - 1);
      i = close + 1;
    } else if (is_form_symbol(c)) {
      size_t end = i;
      while (end < in.size() && is_form_symbol(in[end])) ++end;
      if (after_form && is_space_run(gap)) gap.pop_back();
      out += utf8::encode(gap);
      gap.clear();
      decode_run(i, end);
      after_form = true;
      i = end;
    } else {
      gap += c;
      ++i;
    }
  }
  out += utf8::encode(gap);
  return out;
}

}  // namespace vcc
