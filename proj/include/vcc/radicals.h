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

// The radical table: which radicals exist, what they are called in the
// virtual script, and which ones were abolished in favour of another.

#ifndef VCC_RADICALS_H_
#define VCC_RADICALS_H_

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcc/pinyin.h"

namespace vcc {

enum class RadicalStatus { kActive, kAbolished };

struct RadicalEntry {
  std::string glyph;
  int index = 0;  // dictionary ordering, used for sorting reports
  Syllable original{"a", Tone::kNeutral};
  RadicalStatus status = RadicalStatus::kActive;

  // Active entries: the revised (toneless) name, plus an optional longer
  // name used whenever a tone has to be written on a vowel-less short name
  // ("h" is written "hēng" in the first tone).
  std::optional<Syllable> revised;
  std::optional<std::string> long_base;

  // Abolished entries: the active radical that takes over its characters.
  std::string redirect_to;

  std::string synonym_group;  // empty when the radical has no synonyms
  std::optional<Tone> default_tone;
  bool overrides_position = false;

  bool active() const { return status == RadicalStatus::kActive; }
  Tone base_tone() const { return default_tone.value_or(Tone::kNeutral); }

  // The prefix syllable at tone `t`, or nullopt when that tone cannot be
  // written for this radical. Only meaningful for active entries.
  std::optional<Syllable> prefix_at(Tone t) const;

  // The prefix syllable at the radical's own tone, rendered.
  std::string rendered_revised() const;
};

class RadicalTable {
 public:
  RadicalTable() = default;

  enum class Validation { kStrict, kReportOnly };

  // Throws DuplicateGlyph, DanglingRedirect or PronunciationClash. With
  // kReportOnly a pronunciation clash is tolerated so that audit_radicals
  // can report it; the other two errors are always fatal.
  explicit RadicalTable(std::vector<RadicalEntry> entries,
                        Validation validation = Validation::kStrict);

  // Sorted by (index, glyph).
  const std::vector<RadicalEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  const RadicalEntry* find(std::string_view glyph) const;

  // Follows an abolition redirect; active entries map to themselves.
  const RadicalEntry& active_for(const RadicalEntry& entry) const;

 private:
  std::vector<RadicalEntry> entries_;
  std::map<std::string, size_t, std::less<>> by_glyph_;
};

// Columns: index, glyph, original_pinyin, status, revised_or_redirect,
// synonym_group, default_tone, override. The last three may be omitted.
// See docs/formats.md.
RadicalTable load_radical_table(
    std::istream& in, std::string_view source_name = "radicals",
    RadicalTable::Validation validation = RadicalTable::Validation::kStrict);

enum class RadicalPosition { kTop, kLeft, kOther };

struct RadicalCandidate {
  std::string glyph;
  RadicalPosition position = RadicalPosition::kOther;

  friend bool operator==(const RadicalCandidate&,
                         const RadicalCandidate&) = default;
};

// Picks the indexing radical: a listed override radical (鸟, 鱼, 彡, ...)
// first, then the first top component, then the first left component, then
// the first candidate in listed order. Unknown glyphs are skipped and an
// abolished choice is replaced by its redirect. Throws NoActiveRadical when
// nothing usable remains.
const RadicalEntry& resolve_radical(std::span<const RadicalCandidate> candidates,
                                    const RadicalTable& table,
                                    std::string_view character = {});

struct RadicalAuditRow {
  std::string glyph;
  int index = 0;
  bool active = true;
  std::string pronunciation;  // rendered revised name, or "->X" if abolished
  int repetitions = 0;        // entries sharing the pronunciation, self incl.
  int clashes = 0;            // of those, entries outside the synonym group
};

struct RadicalAudit {
  std::vector<RadicalAuditRow> rows;  // table order
  // Entries whose dictionary pronunciation (tone ignored) coincides.
  std::vector<std::pair<std::string, std::vector<std::string>>>
      original_collisions;
  bool pass = true;

  std::string to_text() const;
};

RadicalAudit audit_radicals(const RadicalTable& table);

}  // namespace vcc

#endif  // VCC_RADICALS_H_
