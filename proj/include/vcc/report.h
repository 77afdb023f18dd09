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

// Comparison scoring and corpus statistics.

#ifndef VCC_REPORT_H_
#define VCC_REPORT_H_

#include <array>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcc/codec.h"
#include "vcc/lexicon.h"

namespace vcc {

inline constexpr size_t kScoreCriteria = 9;

struct ScoreRow {
  std::string label;
  std::array<int, kScoreCriteria> cells{};
};

struct ScoreMatrix {
  std::array<std::string, kScoreCriteria> criteria;
  std::vector<ScoreRow> rows;
};

// Header: "language" followed by nine criterion names; one row per
// language, every cell 1, 2 or 3. Throws MalformedScoreMatrix.
ScoreMatrix load_score_matrix(std::istream& in,
                              std::string_view source_name = "scores");

// Row totals in row order.
std::vector<std::pair<std::string, int>> total_scores(const ScoreMatrix& m);

// Label of the highest total; the earliest row wins a tie. Throws
// MalformedScoreMatrix on an empty matrix.
std::string best_scoring(const ScoreMatrix& m);

struct CorpusStats {
  size_t characters = 0;       // code points of the input
  size_t han_characters = 0;   // of those, Chinese characters
  size_t unknown = 0;          // Chinese characters missing from the lexicon
  size_t tokens = 0;           // words after segmentation
  size_t forms = 0;            // characters written as virtual forms
  size_t encoded_symbols = 0;  // code points of the encoded text
  size_t encoded_bytes = 0;    // VCC-8 bytes; unencodable symbols excluded
  size_t unencodable = 0;      // encoded symbols outside VCC-8
  double mean_form_length = 0.0;  // symbols per encoded character

  std::string to_text() const;
  std::string to_json() const;

  CorpusStats& operator+=(const CorpusStats& other);
};

// Unknown characters are counted and marked, never fatal.
CorpusStats corpus_stats(std::string_view text, const Lexicon& lexicon,
                         const WordList& words);

}  // namespace vcc

#endif  // VCC_REPORT_H_
