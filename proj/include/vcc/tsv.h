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

#ifndef VCC_TSV_H_
#define VCC_TSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace vcc {

struct TsvRow {
  size_t line = 0;  // 1-based line number in the source
  std::vector<std::string> fields;
};

// Reads a tab-separated table. Blank lines and lines starting with '#' are
// skipped. The first remaining line is the header; when `expected_header`
// is non-empty its leading columns must match it. A trailing '\r' is
// stripped from every line.
class TsvReader {
 public:
  TsvReader(std::istream& in, std::string_view source_name,
            std::vector<std::string> expected_header = {});

  const std::vector<std::string>& header() const { return header_; }

  // Returns false at end of input.
  bool next(TsvRow* row);

  // Throws MalformedInput with "<source>:<line>: <message>".
  [[noreturn]] void fail(const TsvRow& row, const std::string& message) const;

 private:
  bool next_line(std::string* line);

  std::istream& in_;
  std::string source_;
  std::vector<std::string> header_;
  size_t line_no_ = 0;
};

std::vector<std::string> split(std::string_view s, char sep);

// "-" and "" both mean an absent optional column.
bool is_absent(std::string_view field);

}  // namespace vcc

#endif  // VCC_TSV_H_
