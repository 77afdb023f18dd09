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

#include "vcc/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

#include "vcc/error.h"
#include "vcc/tsv.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

const std::vector<std::string> kCharacterHeader = {
    "glyph", "readings", "radicals", "frequency", "component", "flags"};

constexpr std::string_view kMiddleDot = "·";

RadicalPosition parse_position(std::string_view s, bool* ok) {
  *ok = true;
  if (s == "top") return RadicalPosition::kTop;
  if (s == "left") return RadicalPosition::kLeft;
  if (s == "other") return RadicalPosition::kOther;
  *ok = false;
  return RadicalPosition::kOther;
}

// Frequency descending, then code point ascending. UTF-8 byte order is code
// point order.
struct ByFrequency {
  const Lexicon::Forward* forward = nullptr;
  const std::map<std::string, double>* frequency = nullptr;

  bool operator()(const std::string& a, const std::string& b) const {
    const double fa = lookup(a);
    const double fb = lookup(b);
    if (fa != fb) return fa > fb;
    return a < b;
  }
  double lookup(const std::string& g) const {
    auto it = frequency->find(g);
    return it == frequency->end() ? 0.0 : it->second;
  }
};

// Multiset of rendered forms currently in use.
class Occupancy {
 public:
  bool free(const std::string& rendered) const {
    auto it = counts_.find(rendered);
    return it == counts_.end() || it->second == 0;
  }
  void add(const std::string& rendered) { ++counts_[rendered]; }
  void remove(const std::string& rendered) { --counts_[rendered]; }
  void move(const std::string& from, const std::string& to) {
    remove(from);
    add(to);
  }

 private:
  std::unordered_map<std::string, int> counts_;
};

struct Work {
  const CharacterEntry* entry;
  const RadicalEntry* radical;  // null only for bare characters without one
  VirtualForm form;
};

}  // namespace

std::vector<CharacterEntry> load_character_table(std::istream& in,
                                                 std::string_view source_name) {
  TsvReader reader(in, source_name, kCharacterHeader);
  std::vector<CharacterEntry> out;
  std::set<std::string> seen;
  TsvRow row;
  while (reader.next(&row)) {
    const auto& f = row.fields;
    if (f.size() != kCharacterHeader.size()) {
      reader.fail(row, "expected 6 columns, got " + std::to_string(f.size()));
    }
    CharacterEntry c;
    c.glyph = f[0];
    if (c.glyph.empty() || utf8::length(c.glyph) != 1) {
      reader.fail(row, "glyph must be a single character: \"" + f[0] + "\"");
    }
    if (!seen.insert(c.glyph).second) {
      throw Error(ErrorKind::kDuplicateGlyph,
                  std::string(source_name) + ":" + std::to_string(row.line) +
                      ": character " + c.glyph + " listed twice");
    }
    try {
      for (const std::string& r : split(f[1], '|')) {
        c.readings.push_back(parse_syllable(r));
      }
      if (!is_absent(f[4])) c.component_reading = parse_syllable(f[4]);
    } catch (const Error& err) {
      reader.fail(row, err.what());
    }

    if (!is_absent(f[2])) {
      for (const std::string& item : split(f[2], ',')) {
        RadicalCandidate cand;
        const size_t colon = item.find(':');
        cand.glyph = item.substr(0, colon);
        if (colon != std::string::npos) {
          bool ok;
          cand.position = parse_position(item.substr(colon + 1), &ok);
          if (!ok) reader.fail(row, "bad radical position in \"" + item + "\"");
        }
        if (cand.glyph.empty() || utf8::length(cand.glyph) != 1) {
          reader.fail(row, "bad radical candidate \"" + item + "\"");
        }
        c.radical_candidates.push_back(std::move(cand));
      }
    }

    const std::string& freq = f[3];
    auto [ptr, ec] =
        std::from_chars(freq.data(), freq.data() + freq.size(), c.frequency);
    if (ec != std::errc() || ptr != freq.data() + freq.size() ||
        !std::isfinite(c.frequency) || c.frequency < 0) {
      reader.fail(row, "frequency must be a non-negative number: \"" + freq + "\"");
    }

    if (!is_absent(f[5])) {
      for (const std::string& flag : split(f[5], ',')) {
        if (flag == "numeral") {
          c.is_numeral = true;
        } else if (flag == "bare") {
          c.bare = true;
        } else {
          reader.fail(row, "unknown flag \"" + flag + "\"");
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

const RadicalEntry& resolve_radical(const CharacterEntry& c,
                                    const RadicalTable& t) {
  return resolve_radical(c.radical_candidates, t, c.glyph);
}

std::string_view form_kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::kBare: return "bare";
    case FormKind::kPrefixed: return "prefixed";
    case FormKind::kFallback: return "fallback";
  }
  return "?";
}

VirtualForm::VirtualForm(FormKind kind, std::optional<Syllable> radical,
                         std::optional<Syllable> infix, Syllable body)
    : kind_(kind),
      radical_(std::move(radical)),
      infix_(std::move(infix)),
      body_(std::move(body)) {
  if (radical_) {
    rendered_ = render_syllable(*radical_);
    if (infix_) rendered_ += "'" + render_syllable(*infix_);
    rendered_ += kMiddleDot;
  }
  rendered_ += render_syllable(body_);
}

VirtualForm VirtualForm::bare(Syllable body) {
  return VirtualForm(FormKind::kBare, std::nullopt, std::nullopt,
                     std::move(body));
}

VirtualForm VirtualForm::prefixed(Syllable radical, Syllable body) {
  return VirtualForm(FormKind::kPrefixed, std::move(radical), std::nullopt,
                     std::move(body));
}

VirtualForm VirtualForm::fallback(Syllable radical, Syllable infix,
                                  Syllable body) {
  return VirtualForm(FormKind::kFallback, std::move(radical), std::move(infix),
                     std::move(body));
}

VirtualForm VirtualForm::parse(std::string_view text) {
  auto malformed = [&](std::string_view why) -> Error {
    return Error(ErrorKind::kMalformedToken,
                 "\"" + std::string(text) + "\": " + std::string(why));
  };
  size_t dots = 0;
  for (size_t p = text.find(kMiddleDot); p != std::string_view::npos;
       p = text.find(kMiddleDot, p + kMiddleDot.size())) {
    ++dots;
  }
  const size_t apostrophes = std::count(text.begin(), text.end(), '\'');
  if (dots > 1) throw malformed("more than one \"·\"");
  if (apostrophes > 1) throw malformed("more than one \"'\"");

  if (dots == 0) {
    if (apostrophes) throw malformed("\"'\" outside a radical prefix");
    return bare(parse_syllable(text));
  }
  const size_t dot = text.find(kMiddleDot);
  const std::string_view head = text.substr(0, dot);
  const std::string_view body = text.substr(dot + kMiddleDot.size());
  if (apostrophes == 0) {
    return prefixed(parse_syllable(head), parse_syllable(body));
  }
  const size_t apos = head.find('\'');
  if (apos == std::string_view::npos) throw malformed("\"'\" after \"·\"");
  return fallback(parse_syllable(head.substr(0, apos)),
                  parse_syllable(head.substr(apos + 1)), parse_syllable(body));
}

Lexicon::Lexicon(Forward forward, std::map<std::string, double> frequency,
                 CompileReport report)
    : forward_(std::move(forward)),
      frequency_(std::move(frequency)),
      report_(std::move(report)) {
  for (const auto& [glyph, form] : forward_) {
    auto [it, inserted] = reverse_.emplace(form.rendered(), glyph);
    if (!inserted) {
      throw Error(ErrorKind::kIntegrityFailure,
                  "\"" + form.rendered() + "\" is used by both " + it->second +
                      " and " + glyph);
    }
  }
}

const VirtualForm* Lexicon::find(std::string_view glyph) const {
  auto it = forward_.find(glyph);
  return it == forward_.end() ? nullptr : &it->second;
}

const std::string* Lexicon::glyph_for(std::string_view rendered) const {
  auto it = reverse_.find(rendered);
  return it == reverse_.end() ? nullptr : &it->second;
}

double Lexicon::frequency(std::string_view glyph) const {
  auto it = frequency_.find(std::string(glyph));
  return it == frequency_.end() ? 0.0 : it->second;
}

std::map<std::string, std::vector<std::string>> find_collisions(
    const Lexicon::Forward& forward) {
  std::map<std::string, std::vector<std::string>> by_form;
  for (const auto& [glyph, form] : forward) {
    by_form[form.rendered()].push_back(glyph);
  }
  std::erase_if(by_form, [](const auto& kv) { return kv.second.size() < 2; });
  return by_form;
}

Lexicon compile_lexicon(std::span<const CharacterEntry> chars,
                        const RadicalTable& table) {
  if (chars.empty()) {
    throw Error(ErrorKind::kEmptyInventory, "no characters to compile");
  }

  std::vector<Work> work;
  work.reserve(chars.size());
  std::set<std::string> seen;
  for (const CharacterEntry& c : chars) {
    if (!seen.insert(c.glyph).second) {
      throw Error(ErrorKind::kDuplicateGlyph, "character " + c.glyph +
                                                  " listed twice");
    }
    if (c.readings.empty()) {
      throw Error(ErrorKind::kMalformedInput, c.glyph + " has no reading");
    }
    const RadicalEntry* radical = nullptr;
    if (!c.radical_candidates.empty() || !c.wants_bare()) {
      radical = &resolve_radical(c, table);
    }
    const Syllable& body = c.readings.front();
    if (c.wants_bare()) {
      work.push_back({&c, radical, VirtualForm::bare(body)});
    } else {
      work.push_back(
          {&c, radical,
           VirtualForm::prefixed(*radical->prefix_at(radical->base_tone()),
                                 body)});
    }
  }

  CompileReport report;
  {
    std::map<std::string, int> sizes;
    for (const Work& w : work) ++sizes[w.form.rendered()];
    for (const Work& w : work) {
      report.records[w.entry->glyph] = {w.form.rendered(),
                                        sizes[w.form.rendered()]};
    }
  }

  Occupancy occupied;
  for (const Work& w : work) occupied.add(w.form.rendered());

  // Tries the radical tones in assignment order; returns true on success.
  auto retone = [&](Work& w, bool with_infix) {
    for (Tone t : kToneOrder) {
      std::optional<Syllable> prefix = w.radical->prefix_at(t);
      if (!prefix) continue;
      VirtualForm candidate =
          with_infix
              ? VirtualForm::fallback(
                    *prefix,
                    Syllable(w.entry->component_reading->base(), Tone::kNeutral),
                    w.form.body())
              : VirtualForm::prefixed(*prefix, w.form.body());
      if (occupied.free(candidate.rendered())) {
        occupied.move(w.form.rendered(), candidate.rendered());
        w.form = std::move(candidate);
        return true;
      }
    }
    return false;
  };

  for (int pass = 1;; ++pass) {
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < work.size(); ++i) {
      groups[work[i].form.rendered()].push_back(i);
    }
    std::erase_if(groups, [](const auto& kv) { return kv.second.size() < 2; });
    if (groups.empty()) {
      report.passes = pass - 1;
      break;
    }
    if (pass > kMaxResolutionPasses) {
      throw Error(ErrorKind::kUnresolvableCollision,
                  "\"" + groups.begin()->first + "\" still shared after " +
                      std::to_string(kMaxResolutionPasses) + " passes");
    }

    for (auto& [rendered, members] : groups) {
      std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
        const CharacterEntry& ca = *work[a].entry;
        const CharacterEntry& cb = *work[b].entry;
        if (ca.frequency != cb.frequency) return ca.frequency > cb.frequency;
        return ca.glyph < cb.glyph;
      });
      // The most frequent member keeps its form.
      for (size_t k = 1; k < members.size(); ++k) {
        Work& w = work[members[k]];
        switch (w.form.kind()) {
          case FormKind::kBare: {
            if (w.radical == nullptr) {
              throw Error(ErrorKind::kUnresolvableCollision,
                          w.entry->glyph + " collides on bare \"" + rendered +
                              "\" and has no radical to fall back on");
            }
            VirtualForm demoted = VirtualForm::prefixed(
                *w.radical->prefix_at(w.radical->base_tone()), w.form.body());
            occupied.move(w.form.rendered(), demoted.rendered());
            w.form = std::move(demoted);
            break;
          }
          case FormKind::kPrefixed:
            if (retone(w, false)) break;
            if (!w.entry->component_reading) {
              throw Error(ErrorKind::kFallbackDataMissing,
                          w.entry->glyph + " overflows the five tones of \"" +
                              rendered + "\" and has no component reading");
            }
            retone(w, true);  // a clash left here is retried next pass
            break;
          case FormKind::kFallback:
            retone(w, true);
            break;
        }
      }
    }
  }

  Lexicon::Forward forward;
  std::map<std::string, double> frequency;
  for (Work& w : work) {
    frequency[w.entry->glyph] = w.entry->frequency;
    forward.emplace(w.entry->glyph, std::move(w.form));
  }
  return Lexicon(std::move(forward), std::move(frequency), std::move(report));
}

Lexicon compress_lexicon(const Lexicon& lexicon,
                         const CompressOptions& options) {
  Lexicon::Forward forward = lexicon.forward();
  std::vector<std::string> order;
  for (const auto& [glyph, form] : forward) order.push_back(glyph);
  std::sort(order.begin(), order.end(),
            ByFrequency{&forward, &lexicon.frequencies()});

  Occupancy occupied;
  for (const auto& [glyph, form] : forward) occupied.add(form.rendered());
  auto try_move = [&](VirtualForm& current, VirtualForm candidate) {
    if (candidate.rendered() == current.rendered() ||
        !occupied.free(candidate.rendered())) {
      return false;
    }
    occupied.move(current.rendered(), candidate.rendered());
    current = std::move(candidate);
    return true;
  };

  if (options.abbreviate_finals) {
    for (const std::string& glyph : order) {
      VirtualForm& form = forward.at(glyph);
      auto abbr = [](const std::optional<Syllable>& s) {
        return abbreviate_syllable(*s);
      };
      const Syllable body = abbreviate_syllable(form.body());
      switch (form.kind()) {
        case FormKind::kBare:
          try_move(form, VirtualForm::bare(body));
          break;
        case FormKind::kPrefixed:
          try_move(form, VirtualForm::prefixed(abbr(form.radical()), body));
          break;
        case FormKind::kFallback:
          try_move(form, VirtualForm::fallback(abbr(form.radical()),
                                               abbr(form.infix()), body));
          break;
      }
    }
  }

  if (options.shorten_radicals) {
    for (const std::string& glyph : order) {
      VirtualForm& form = forward.at(glyph);
      if (form.kind() != FormKind::kPrefixed) continue;
      const Syllable& radical = *form.radical();
      const std::u32string base = utf8::decode(radical.base());
      for (size_t len = 1; len < base.size(); ++len) {
        const std::string prefix = utf8::encode(base.substr(0, len));
        if (!is_valid_base(prefix)) continue;
        Syllable shorter(prefix, Tone::kNeutral);
        if (shorter.has_vowel()) shorter = shorter.with_tone(radical.tone());
        if (try_move(form, VirtualForm::prefixed(shorter, form.body()))) break;
      }
    }
  }

  return Lexicon(std::move(forward), lexicon.frequencies(), lexicon.report());
}

LexiconAudit audit_lexicon(const Lexicon& lexicon) {
  LexiconAudit audit;
  const auto& records = lexicon.report().records;
  for (const auto& [glyph, form] : lexicon.forward()) {
    LexiconAuditRow row{glyph, form.rendered(), form.kind(), std::nullopt};
    if (auto it = records.find(glyph); it != records.end()) {
      row.compile = it->second;
      audit.max_group_size = std::max(audit.max_group_size, it->second.group_size);
    }
    switch (form.kind()) {
      case FormKind::kBare: ++audit.bare; break;
      case FormKind::kPrefixed: ++audit.prefixed; break;
      case FormKind::kFallback: ++audit.fallback; break;
    }
    audit.rows.push_back(std::move(row));
  }
  audit.residual_collisions = find_collisions(lexicon.forward());
  return audit;
}

std::string LexiconAudit::to_text() const {
  std::string out = "glyph\tform\tkind\tinitial\trepetitions\n";
  for (const LexiconAuditRow& r : rows) {
    out += r.glyph + "\t" + r.form + "\t" + std::string(form_kind_name(r.kind)) +
           "\t" + (r.compile ? r.compile->initial : "-") + "\t" +
           (r.compile ? std::to_string(r.compile->group_size) : "-") + "\n";
  }
  for (const auto& [form, glyphs] : residual_collisions) {
    out += "collision\t" + form + "\t";
    for (size_t i = 0; i < glyphs.size(); ++i) out += (i ? " " : "") + glyphs[i];
    out += "\n";
  }
  out += "entries: " + std::to_string(rows.size()) + "\n";
  out += "bare: " + std::to_string(bare) + "\n";
  out += "prefixed: " + std::to_string(prefixed) + "\n";
  out += "fallback: " + std::to_string(fallback) + "\n";
  out += "max-group-size: " + std::to_string(max_group_size) + "\n";
  out += "residual-collisions: " + std::to_string(residual_collisions.size()) +
         "\n";
  out += std::string("injectivity: ") + (injective() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace vcc
