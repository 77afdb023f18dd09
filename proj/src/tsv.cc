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

#include "vcc/tsv.h"

#include "vcc/error.h"

namespace vcc {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_absent(std::string_view field) { return field.empty() || field == "-"; }

TsvReader::TsvReader(std::istream& in, std::string_view source_name,
                     std::vector<std::string> expected_header)
    : in_(in), source_(source_name) {
  std::string line;
  if (!next_line(&line)) {
    throw Error(ErrorKind::kMalformedInput, source_ + ": missing header line");
  }
  header_ = split(line, '\t');
  if (expected_header.size() > header_.size()) {
    throw Error(ErrorKind::kMalformedInput,
                source_ + ": header has " + std::to_string(header_.size()) +
                    " columns, expected at least " +
                    std::to_string(expected_header.size()));
  }
  for (size_t i = 0; i < expected_header.size(); ++i) {
    if (header_[i] != expected_header[i]) {
      throw Error(ErrorKind::kMalformedInput,
                  source_ + ": header column " + std::to_string(i + 1) +
                      " is \"" + header_[i] + "\", expected \"" +
                      expected_header[i] + "\"");
    }
  }
}

bool TsvReader::next_line(std::string* line) {
  while (std::getline(in_, *line)) {
    ++line_no_;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    if (line->empty() || (*line)[0] == '#') continue;
    return true;
  }
  return false;
}

bool TsvReader::next(TsvRow* row) {
  std::string line;
  if (!next_line(&line)) return false;
  row->line = line_no_;
  row->fields = split(line, '\t');
  return true;
}

void TsvReader::fail(const TsvRow& row, const std::string& message) const {
  throw Error(ErrorKind::kMalformedInput,
              source_ + ":" + std::to_string(row.line) + ": " + message);
}

}  // namespace vcc
