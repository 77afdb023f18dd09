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

#include "vcc/report.h"

#include <charconv>
#include <cstdio>
#include <memory>

#include "json.hpp"
#include "vcc/codepage.h"
#include "vcc/error.h"
#include "vcc/tsv.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

Error bad_matrix(std::string_view source, size_t line, const std::string& msg) {
  return Error(ErrorKind::kMalformedScoreMatrix,
               std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

ScoreMatrix load_score_matrix(std::istream& in, std::string_view source_name) {
  ScoreMatrix m;
  std::unique_ptr<TsvReader> reader;
  try {
    reader = std::make_unique<TsvReader>(in, source_name,
                                         std::vector<std::string>{"language"});
  } catch (const Error& e) {
    throw Error(ErrorKind::kMalformedScoreMatrix, e.detail());
  }
  const auto& header = reader->header();
  if (header.size() != kScoreCriteria + 1) {
    throw bad_matrix(source_name, 1,
                     "header needs " + std::to_string(kScoreCriteria) +
                         " criteria, found " + std::to_string(header.size() - 1));
  }
  std::copy(header.begin() + 1, header.end(), m.criteria.begin());

  TsvRow row;
  while (reader->next(&row)) {
    const auto& f = row.fields;
    if (f.size() != kScoreCriteria + 1) {
      throw bad_matrix(source_name, row.line,
                       "expected " + std::to_string(kScoreCriteria) +
                           " scores, found " + std::to_string(f.size() - 1));
    }
    ScoreRow r;
    r.label = f[0];
    if (r.label.empty()) throw bad_matrix(source_name, row.line, "empty label");
    for (size_t c = 0; c < kScoreCriteria; ++c) {
      const std::string& cell = f[c + 1];
      int v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || v < 1 ||
          v > 3) {
        throw bad_matrix(source_name, row.line,
                         "score for " + m.criteria[c] + " must be 1, 2 or 3: \"" +
                             cell + "\"");
      }
      r.cells[c] = v;
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

std::vector<std::pair<std::string, int>> total_scores(const ScoreMatrix& m) {
  std::vector<std::pair<std::string, int>> out;
  for (const ScoreRow& r : m.rows) {
    int total = 0;
    for (int v : r.cells) total += v;
    out.emplace_back(r.label, total);
  }
  return out;
}

std::string best_scoring(const ScoreMatrix& m) {
  const auto totals = total_scores(m);
  if (totals.empty()) {
    throw Error(ErrorKind::kMalformedScoreMatrix, "no rows to rank");
  }
  const auto* best = &totals.front();
  for (const auto& t : totals) {
    if (t.second > best->second) best = &t;
  }
  return best->first;
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& o) {
  const double forms_a = static_cast<double>(forms);
  const double forms_b = static_cast<double>(o.forms);
  characters += o.characters;
  han_characters += o.han_characters;
  unknown += o.unknown;
  tokens += o.tokens;
  forms += o.forms;
  encoded_symbols += o.encoded_symbols;
  encoded_bytes += o.encoded_bytes;
  unencodable += o.unencodable;
  const double n = forms_a + forms_b;
  mean_form_length =
      n == 0 ? 0.0
             : (mean_form_length * forms_a + o.mean_form_length * forms_b) / n;
  return *this;
}

std::string CorpusStats::to_text() const {
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.3f", mean_form_length);
  std::string out;
  out += "characters: " + std::to_string(characters) + "\n";
  out += "han-characters: " + std::to_string(han_characters) + "\n";
  out += "unknown: " + std::to_string(unknown) + "\n";
  out += "tokens: " + std::to_string(tokens) + "\n";
  out += "forms: " + std::to_string(forms) + "\n";
  out += "encoded-symbols: " + std::to_string(encoded_symbols) + "\n";
  out += "encoded-bytes: " + std::to_string(encoded_bytes) + "\n";
  out += "unencodable: " + std::to_string(unencodable) + "\n";
  out += "mean-form-length: " + std::string(mean) + "\n";
  return out;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json j;
  j["characters"] = characters;
  j["han_characters"] = han_characters;
  j["unknown"] = unknown;
  j["tokens"] = tokens;
  j["forms"] = forms;
  j["encoded_symbols"] = encoded_symbols;
  j["encoded_bytes"] = encoded_bytes;
  j["unencodable"] = unencodable;
  j["mean_form_length"] = mean_form_length;
  return j.dump() + "\n";
}

CorpusStats corpus_stats(std::string_view text, const Lexicon& lexicon,
                         const WordList& words) {
  CorpusStats s;
  const std::u32string cps = utf8::decode(text);
  s.characters = cps.size();
  for (char32_t c : cps) {
    if (utf8::is_han(c)) ++s.han_characters;
  }

  size_t form_symbols = 0;
  for (const Token& t : segment(text, lexicon, words)) {
    const auto* w = std::get_if<WordToken>(&t);
    if (w == nullptr) continue;
    ++s.tokens;
    for (const std::string& g : w->glyphs) {
      form_symbols += utf8::length(lexicon.find(g)->rendered());
      ++s.forms;
    }
  }
  s.mean_form_length =
      s.forms == 0 ? 0.0 : static_cast<double>(form_symbols) / s.forms;

  const EncodeResult enc =
      encode_text(text, lexicon, words, UnknownPolicy::kMark);
  s.unknown = enc.unknown;
  const Alphabet& vcc8 = Alphabet::vcc8();
  for (char32_t c : utf8::decode(enc.text)) {
    ++s.encoded_symbols;
    if (vcc8.contains(c)) {
      ++s.encoded_bytes;
    } else {
      ++s.unencodable;
    }
  }
  return s;
}

}  // namespace vcc
