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

// Character inventory -> virtual form compilation.
//
// Every character is written as <radical name>·<reading> ("协" is
// "shì·xié"). When two characters would get the same form, the less frequent
// one moves its radical name through the tones (neutral, 1st, 2nd, 3rd,
// 4th); once all five are used it falls back to
// <radical>'<phonetic component>·<reading>. Numerals and flagged characters
// are written bare, without a radical. The compiled Lexicon is a bijection
// between characters and rendered forms.

#ifndef VCC_LEXICON_H_
#define VCC_LEXICON_H_

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcc/pinyin.h"
#include "vcc/radicals.h"

namespace vcc {

struct CharacterEntry {
  std::string glyph;
  std::vector<Syllable> readings;  // most frequent first; never empty
  std::vector<RadicalCandidate> radical_candidates;
  double frequency = 0.0;
  std::optional<Syllable> component_reading;
  bool is_numeral = false;
  bool bare = false;

  bool wants_bare() const { return is_numeral || bare; }
};

// Columns: glyph, readings, radicals, frequency, component, flags.
// See docs/formats.md. Throws MalformedInput or DuplicateGlyph.
std::vector<CharacterEntry> load_character_table(
    std::istream& in, std::string_view source_name = "characters");

const RadicalEntry& resolve_radical(const CharacterEntry& c,
                                    const RadicalTable& t);

enum class FormKind { kBare, kPrefixed, kFallback };

std::string_view form_kind_name(FormKind kind);

class VirtualForm {
 public:
  static VirtualForm bare(Syllable body);
  static VirtualForm prefixed(Syllable radical, Syllable body);
  static VirtualForm fallback(Syllable radical, Syllable infix, Syllable body);

  // Splits a rendered form on "'" and "·" and parses each part. Throws
  // MalformedToken for separator misuse and MalformedSyllable for bad parts.
  // Carons and other accepted input spellings are normalised, so the result
  // may render differently from `text`.
  static VirtualForm parse(std::string_view text);

  FormKind kind() const { return kind_; }
  const std::optional<Syllable>& radical() const { return radical_; }
  const std::optional<Syllable>& infix() const { return infix_; }
  const Syllable& body() const { return body_; }
  const std::string& rendered() const { return rendered_; }

  friend bool operator==(const VirtualForm& a, const VirtualForm& b) {
    return a.rendered_ == b.rendered_ && a.kind_ == b.kind_;
  }

 private:
  VirtualForm(FormKind kind, std::optional<Syllable> radical,
              std::optional<Syllable> infix, Syllable body);

  FormKind kind_;
  std::optional<Syllable> radical_;
  std::optional<Syllable> infix_;
  Syllable body_;
  std::string rendered_;
};

// What compilation saw before collisions were resolved, per character.
struct CompileRecord {
  std::string initial;  // form before tone disambiguation
  int group_size = 1;   // characters that shared `initial`
};

struct CompileReport {
  std::map<std::string, CompileRecord> records;  // by glyph
  int passes = 0;
};

class Lexicon {
 public:
  static constexpr std::string_view kFormatVersion = "vcc-lexicon/1";

  using Forward = std::map<std::string, VirtualForm, std::less<>>;

  Lexicon() = default;

  // Certifies injectivity: throws IntegrityFailure if two glyphs share a
  // rendered form.
  explicit Lexicon(Forward forward,
                   std::map<std::string, double> frequency = {},
                   CompileReport report = {});

  const Forward& forward() const { return forward_; }
  size_t size() const { return forward_.size(); }
  bool empty() const { return forward_.empty(); }

  const VirtualForm* find(std::string_view glyph) const;
  // Reverse lookup of a canonical rendered form.
  const std::string* glyph_for(std::string_view rendered) const;

  double frequency(std::string_view glyph) const;
  const std::map<std::string, double>& frequencies() const {
    return frequency_;
  }
  const CompileReport& report() const { return report_; }

  // Compares the character <-> form mapping only. Frequencies and the
  // compile report are not part of the serialized format.
  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.forward_ == b.forward_;
  }

 private:
  Forward forward_;
  std::map<std::string, std::string, std::less<>> reverse_;
  std::map<std::string, double> frequency_;
  CompileReport report_;
};

// Rendered forms used by more than one glyph, with the glyphs using them.
// Exhaustive; empty means the mapping is injective.
std::map<std::string, std::vector<std::string>> find_collisions(
    const Lexicon::Forward& forward);

inline constexpr int kMaxResolutionPasses = 10;

// Throws EmptyInventory, DuplicateGlyph, NoActiveRadical,
// FallbackDataMissing or UnresolvableCollision.
Lexicon compile_lexicon(std::span<const CharacterEntry> chars,
                        const RadicalTable& table);

struct CompressOptions {
  bool abbreviate_finals = true;  // ing->ig, ong->og, uang->ug
  bool shorten_radicals = true;   // give short radical prefixes to frequent
                                  // characters
};

Lexicon compress_lexicon(const Lexicon& lexicon,
                         const CompressOptions& options = {});

struct LexiconAuditRow {
  std::string glyph;
  std::string form;
  FormKind kind = FormKind::kBare;
  std::optional<CompileRecord> compile;  // absent for loaded lexicons
};

struct LexiconAudit {
  std::vector<LexiconAuditRow> rows;  // glyph order
  size_t bare = 0;
  size_t prefixed = 0;
  size_t fallback = 0;
  int max_group_size = 0;  // 0 when compile records are unavailable
  std::map<std::string, std::vector<std::string>> residual_collisions;
  bool injective() const { return residual_collisions.empty(); }

  std::string to_text() const;
};

LexiconAudit audit_lexicon(const Lexicon& lexicon);

}  // namespace vcc

#endif  // VCC_LEXICON_H_
