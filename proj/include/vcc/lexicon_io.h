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

// Lexicon files.
//
//   vcc-lexicon/1
//   sha256:<64 lowercase hex digits of every byte after this line>
//   <glyph>\t<rendered form>\n    one per character, in glyph byte order
//
// The compile report and frequencies are not stored.

#ifndef VCC_LEXICON_IO_H_
#define VCC_LEXICON_IO_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "vcc/lexicon.h"

namespace vcc {

std::string serialize_lexicon(const Lexicon& lexicon);
void save_lexicon(const Lexicon& lexicon, std::ostream& out);

// Throws FormatVersionMismatch when the first line names another format, and
// IntegrityFailure for a missing header, checksum mismatch, unsorted or
// duplicated glyphs, non-canonical forms or a form used twice.
Lexicon load_lexicon(std::istream& in);
Lexicon parse_lexicon(std::string_view text);

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace vcc

#endif  // VCC_LEXICON_IO_H_
