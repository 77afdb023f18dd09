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

// Single-byte code pages for virtual-script text.
//
// VCC-8 layout (version 1):
//   0x00-0x7F  ASCII
//   0x80-0x93  ā á â à ē é ê è ī í î ì ō ó ô ò ū ú û ù
//   0x94-0xA7  the same twenty vowels in upper case
//   0xA8       · (U+00B7 MIDDLE DOT)
//   0xA9-0xBB  ，。、！？；：“”‘’（）《》…— ⟦ ⟧
//   0xBC-0xFF  unassigned

#ifndef VCC_CODEPAGE_H_
#define VCC_CODEPAGE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vcc {

class Alphabet {
 public:
  // Symbols are assigned bytes 0, 1, 2, ... in the order given. Throws
  // MalformedInput when there are more than 256 symbols or duplicates.
  explicit Alphabet(std::vector<char32_t> symbols);

  // The VCC-8 code page.
  static const Alphabet& vcc8();
  static constexpr int kVcc8Version = 1;

  size_t size() const { return symbols_.size(); }
  const std::vector<char32_t>& symbols() const { return symbols_; }
  bool contains(char32_t cp) const { return byte_of_.contains(cp); }
  std::optional<uint8_t> byte_of(char32_t cp) const;
  std::optional<char32_t> symbol_at(uint8_t byte) const;

  // One byte per code point. Throws SymbolNotInAlphabet naming the symbol
  // and its code point position.
  std::vector<uint8_t> encode_bytes(std::string_view text) const;

  // Inverse of encode_bytes. Unassigned bytes raise SymbolNotInAlphabet.
  std::string decode_bytes(std::span<const uint8_t> bytes) const;

  // "symbol<TAB>0xNN" per assigned byte, after a "# VCC-8 v1" header line.
  // Control characters and space are written as U+XXXX.
  std::string to_tsv() const;

 private:
  std::vector<char32_t> symbols_;
  std::unordered_map<char32_t, uint8_t> byte_of_;
};

}  // namespace vcc

#endif  // VCC_CODEPAGE_H_
