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

#ifndef VCC_UTF8_H_
#define VCC_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace vcc::utf8 {

// Decodes UTF-8 into code points. Throws Error(kMalformedInput) on invalid
// sequences, overlongs, surrogates and truncated input.
std::u32string decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);
std::string encode(std::u32string_view text);

// Number of code points; same validation as decode().
size_t length(std::string_view text);

// Splits text into one UTF-8 string per code point.
std::vector<std::string> split_code_points(std::string_view text);

// CJK ideographs, radicals and stroke blocks: everything the codec treats
// as a Chinese character.
bool is_han(char32_t cp);

}  // namespace vcc::utf8

#endif  // VCC_UTF8_H_
