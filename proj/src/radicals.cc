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

#include "vcc/radicals.h"

#include <algorithm>
#include <charconv>

#include "vcc/error.h"
#include "vcc/tsv.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

const std::vector<std::string> kRadicalHeader = {
    "index", "glyph", "original_pinyin", "status", "revised_or_redirect"};

bool same_group(const RadicalEntry& a, const RadicalEntry& b) {
  return !a.synonym_group.empty() && a.synonym_group == b.synonym_group;
}

}  // namespace

std::optional<Syllable> RadicalEntry::prefix_at(Tone t) const {
  if (!revised) return std::nullopt;
  if (revised->has_vowel() || t == Tone::kNeutral) return revised->with_tone(t);
  if (long_base) return Syllable(*long_base, t);
  return std::nullopt;
}

std::string RadicalEntry::rendered_revised() const {
  auto s = prefix_at(base_tone());
  return s ? render_syllable(*s) : std::string();
}

RadicalTable::RadicalTable(std::vector<RadicalEntry> entries,
                           Validation validation)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const RadicalEntry& a, const RadicalEntry& b) {
                     return std::tie(a.index, a.glyph) <
                            std::tie(b.index, b.glyph);
                   });
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!by_glyph_.emplace(entries_[i].glyph, i).second) {
      throw Error(ErrorKind::kDuplicateGlyph,
                  "radical " + entries_[i].glyph + " listed twice");
    }
  }
  for (const RadicalEntry& e : entries_) {
    if (e.active()) continue;
    const RadicalEntry* target = find(e.redirect_to);
    if (e.redirect_to.empty() || target == nullptr || !target->active()) {
      throw Error(ErrorKind::kDanglingRedirect,
                  "abolished radical " + e.glyph + " redirects to " +
                      (e.redirect_to.empty() ? std::string("nothing")
                                             : e.redirect_to) +
                      ", which is not an active radical");
    }
  }
  if (validation == Validation::kReportOnly) return;

  // Exhaustive pairwise scan; tables hold a few hundred rows at most.
  for (size_t i = 0; i < entries_.size(); ++i) {
    const RadicalEntry& a = entries_[i];
    if (!a.active()) continue;
    for (size_t j = i + 1; j < entries_.size(); ++j) {
      const RadicalEntry& b = entries_[j];
      if (!b.active() || same_group(a, b)) continue;
      if (a.rendered_revised() == b.rendered_revised()) {
        throw Error(ErrorKind::kPronunciationClash,
                    a.glyph + " and " + b.glyph + " are both \"" +
                        a.rendered_revised() +
                        "\" without sharing a synonym group");
      }
    }
  }
}

const RadicalEntry* RadicalTable::find(std::string_view glyph) const {
  auto it = by_glyph_.find(glyph);
  return it == by_glyph_.end() ? nullptr : &entries_[it->second];
}

const RadicalEntry& RadicalTable::active_for(const RadicalEntry& entry) const {
  if (entry.active()) return entry;
  return *find(entry.redirect_to);  // checked at construction
}

RadicalTable load_radical_table(std::istream& in, std::string_view source_name,
                                RadicalTable::Validation validation) {
  TsvReader reader(in, source_name, kRadicalHeader);
  std::vector<RadicalEntry> entries;
  TsvRow row;
  while (reader.next(&row)) {
    const auto& f = row.fields;
    if (f.size() < 5 || f.size() > 8) {
      reader.fail(row, "expected 5 to 8 columns, got " +
                           std::to_string(f.size()));
    }
    auto field = [&](size_t i) -> std::string_view {
      return i < f.size() ? std::string_view(f[i]) : std::string_view();
    };

    RadicalEntry e;
    auto [ptr, ec] =
        std::from_chars(f[0].data(), f[0].data() + f[0].size(), e.index);
    if (ec != std::errc() || ptr != f[0].data() + f[0].size() || e.index <= 0) {
      reader.fail(row, "index must be a positive integer: \"" + f[0] + "\"");
    }
    e.glyph = f[1];
    if (e.glyph.empty() || utf8::length(e.glyph) != 1) {
      reader.fail(row, "glyph must be a single character: \"" + f[1] + "\"");
    }
    try {
      e.original = parse_syllable(f[2]);
    } catch (const Error& err) {
      reader.fail(row, err.what());
    }

    if (f[3] == "active") {
      e.status = RadicalStatus::kActive;
      const std::vector<std::string> names = split(f[4], '|');
      if (names.size() > 2) reader.fail(row, "at most two revised names");
      try {
        Syllable revised = parse_syllable(names[0]);
        if (revised.tone() != Tone::kNeutral) {
          reader.fail(row, "revised name must be toneless; use default_tone");
        }
        if (utf8::length(revised.base()) > 4) {
          reader.fail(row, "revised name longer than 4 letters");
        }
        e.revised = revised;
        if (names.size() == 2) {
          Syllable long_form = parse_syllable(names[1]);
          if (!long_form.has_vowel() || long_form.tone() != Tone::kNeutral) {
            reader.fail(row, "long revised name must be toneless with a vowel");
          }
          e.long_base = long_form.base();
        }
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::kMalformedInput) throw;
        reader.fail(row, err.what());
      }
    } else if (f[3] == "abolished") {
      e.status = RadicalStatus::kAbolished;
      if (!is_absent(f[4])) e.redirect_to = f[4];
    } else {
      reader.fail(row, "status must be active or abolished: \"" + f[3] + "\"");
    }

    if (!is_absent(field(5))) e.synonym_group = std::string(field(5));
    if (!is_absent(field(6))) {
      const std::string_view t = field(6);
      if (t.size() != 1 || t[0] < '0' || t[0] > '4') {
        reader.fail(row, "default_tone must be 0-4");
      }
      e.default_tone = static_cast<Tone>(t[0] - '0');
      if (e.active() && !e.prefix_at(*e.default_tone)) {
        reader.fail(row, "default_tone needs a vowel or a long revised name");
      }
    }
    if (!is_absent(field(7))) {
      if (field(7) != "override") reader.fail(row, "override column must be \"override\" or -");
      e.overrides_position = true;
    }
    entries.push_back(std::move(e));
  }
  return RadicalTable(std::move(entries), validation);
}

const RadicalEntry& resolve_radical(std::span<const RadicalCandidate> candidates,
                                    const RadicalTable& table,
                                    std::string_view character) {
  const RadicalEntry* chosen = nullptr;
  auto pick = [&](auto&& wanted) {
    for (const RadicalCandidate& c : candidates) {
      const RadicalEntry* e = table.find(c.glyph);
      if (e != nullptr && wanted(c, *e)) {
        chosen = e;
        return true;
      }
    }
    return false;
  };
  pick([](const RadicalCandidate&, const RadicalEntry& e) {
    return e.overrides_position;
  }) ||
      pick([](const RadicalCandidate& c, const RadicalEntry&) {
        return c.position == RadicalPosition::kTop;
      }) ||
      pick([](const RadicalCandidate& c, const RadicalEntry&) {
        return c.position == RadicalPosition::kLeft;
      }) ||
      pick([](const RadicalCandidate&, const RadicalEntry&) { return true; });

  if (chosen == nullptr) {
    std::string listed;
    for (const RadicalCandidate& c : candidates) {
      listed += (listed.empty() ? "" : ",") + c.glyph;
    }
    throw Error(ErrorKind::kNoActiveRadical,
                "no usable radical for " +
                    (character.empty() ? std::string("character")
                                       : std::string(character)) +
                    " among [" + listed + "]");
  }
  return table.active_for(*chosen);
}

RadicalAudit audit_radicals(const RadicalTable& table) {
  RadicalAudit audit;
  const auto& entries = table.entries();
  for (const RadicalEntry& e : entries) {
    RadicalAuditRow row;
    row.glyph = e.glyph;
    row.index = e.index;
    row.active = e.active();
    if (e.active()) {
      row.pronunciation = e.rendered_revised();
      for (const RadicalEntry& other : entries) {
        if (!other.active() || other.rendered_revised() != row.pronunciation) {
          continue;
        }
        ++row.repetitions;
        if (&other != &e && !same_group(e, other)) ++row.clashes;
      }
      if (row.clashes > 0) audit.pass = false;
    } else {
      row.pronunciation = "->" + e.redirect_to;
    }
    audit.rows.push_back(std::move(row));
  }

  std::map<std::string, std::vector<std::string>> by_original;
  for (const RadicalEntry& e : entries) {
    by_original[e.original.base()].push_back(e.glyph);
  }
  for (auto& [base, glyphs] : by_original) {
    if (glyphs.size() > 1) {
      audit.original_collisions.emplace_back(base, std::move(glyphs));
    }
  }
  return audit;
}

std::string RadicalAudit::to_text() const {
  std::string out = "index\tglyph\tpronunciation\trepetitions\tclashes\n";
  int clashing = 0;
  for (const RadicalAuditRow& r : rows) {
    out += std::to_string(r.index) + "\t" + r.glyph + "\t" + r.pronunciation +
           "\t" + std::to_string(r.repetitions) + "\t" +
           std::to_string(r.clashes) + "\n";
    if (r.clashes > 0) ++clashing;
  }
  for (const auto& [base, glyphs] : original_collisions) {
    out += "original-collision\t" + base + "\t";
    for (size_t i = 0; i < glyphs.size(); ++i) {
      out += (i ? " " : "") + glyphs[i];
    }
    out += "\n";
  }
  out += "radicals: " + std::to_string(rows.size()) + "\n";
  out += "revised-clashes: " + std::to_string(clashing) + "\n";
  out += std::string("radical-audit: ") + (pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace vcc
