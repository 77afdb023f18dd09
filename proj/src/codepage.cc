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

#include "vcc/codepage.h"

#include <cctype>
#include <cstdio>

#include "vcc/error.h"
#include "vcc/pinyin.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

std::string describe(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

std::vector<char32_t> vcc8_symbols() {
  std::vector<char32_t> symbols;
  for (char32_t cp = 0; cp < 0x80; ++cp) symbols.push_back(cp);
  constexpr char32_t kVowels[] = {U'a', U'e', U'i', U'o', U'u'};
  std::vector<char32_t> lower;
  for (char32_t v : kVowels) {
    for (Tone t : {Tone::kFirst, Tone::kSecond, Tone::kThird, Tone::kFourth}) {
      lower.push_back(marked_vowel(v, t));
    }
  }
  symbols.insert(symbols.end(), lower.begin(), lower.end());
  // Upper-case counterparts of the Latin-1 / Latin Extended-A vowels.
  for (char32_t cp : lower) {
    symbols.push_back(cp >= 0x100 ? cp - 1 : cp - 0x20);
  }
  symbols.push_back(U'·');
  for (char32_t cp : std::u32string_view(U"，。、！？；：“”‘’（）《》…—⟦⟧")) {
    symbols.push_back(cp);
  }
  return symbols;
}

}  // namespace

Alphabet::Alphabet(std::vector<char32_t> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > 256) {
    throw Error(ErrorKind::kMalformedInput,
                "alphabet has " + std::to_string(symbols_.size()) +
                    " symbols; at most 256 fit in a byte");
  }
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (!byte_of_.emplace(symbols_[i], static_cast<uint8_t>(i)).second) {
      throw Error(ErrorKind::kMalformedInput,
                  "duplicate alphabet symbol " + describe(symbols_[i]));
    }
  }
}

const Alphabet& Alphabet::vcc8() {
  static const Alphabet kVcc8(vcc8_symbols());
  return kVcc8;
}

std::optional<uint8_t> Alphabet::byte_of(char32_t cp) const {
  if (auto it = byte_of_.find(cp); it != byte_of_.end()) return it->second;
  return std::nullopt;
}

std::optional<char32_t> Alphabet::symbol_at(uint8_t byte) const {
  if (byte < symbols_.size()) return symbols_[byte];
  return std::nullopt;
}

std::vector<uint8_t> Alphabet::encode_bytes(std::string_view text) const {
  const std::u32string cps = utf8::decode(text);
  std::vector<uint8_t> out;
  out.reserve(cps.size());
  for (size_t pos = 0; pos < cps.size(); ++pos) {
    auto b = byte_of(cps[pos]);
    if (!b) {
      throw Error(ErrorKind::kSymbolNotInAlphabet,
                  "\"" + utf8::encode(cps[pos]) + "\" (" + describe(cps[pos]) +
                      ") at position " + std::to_string(pos));
    }
    out.push_back(*b);
  }
  return out;
}

std::string Alphabet::decode_bytes(std::span<const uint8_t> bytes) const {
  std::string out;
  out.reserve(bytes.size());
  for (size_t pos = 0; pos < bytes.size(); ++pos) {
    auto cp = symbol_at(bytes[pos]);
    if (!cp) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "0x%02X", bytes[pos]);
      throw Error(ErrorKind::kSymbolNotInAlphabet,
                  std::string("unassigned byte ") + buf + " at position " +
                      std::to_string(pos));
    }
    utf8::append(out, *cp);
  }
  return out;
}

std::string Alphabet::to_tsv() const {
  std::string out = "# VCC-8 v" + std::to_string(kVcc8Version) + "\n";
  out += "symbol\tbyte\n";
  for (size_t i = 0; i < symbols_.size(); ++i) {
    const char32_t cp = symbols_[i];
    if (cp <= 0x20 || cp == 0x7F) {
      out += describe(cp);
    } else {
      utf8::append(out, cp);
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "\t0x%02X\n", static_cast<unsigned>(i));
    out += buf;
  }
  return out;
}

}  // namespace vcc
