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

#include <gtest/gtest.h>

#include "test_data.h"
#include "vcc/error.h"

namespace vcc {
namespace {

using testing::kRadicalHeader;
using testing::radicals_from;

ErrorKind kind_of(const std::string& tsv) {
  try {
    radicals_from(tsv);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::kIo;
}

TEST(LoadRadicalTable, ActiveRow) {
  const RadicalTable t =
      radicals_from(std::string(kRadicalHeader) + "51\t尸\tshi1\tactive\tpo\n");
  const RadicalEntry* e = t.find("尸");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->active());
  EXPECT_EQ(e->index, 51);
  EXPECT_EQ(e->revised->base(), "po");
  EXPECT_EQ(e->rendered_revised(), "po");
  EXPECT_EQ(e->original, Syllable("shi", Tone::kFirst));
}

TEST(LoadRadicalTable, OptionalColumnsMayBeOmitted) {
  const RadicalTable t = radicals_from(
      "index\tglyph\toriginal_pinyin\tstatus\trevised_or_redirect\n"
      "# comment\n\n"
      "1\t一\theng2\tactive\th|heng\r\n");
  const RadicalEntry* e = t.find("一");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->rendered_revised(), "h");
  EXPECT_EQ(render_syllable(*e->prefix_at(Tone::kFirst)), "hēng");
  EXPECT_EQ(render_syllable(*e->prefix_at(Tone::kNeutral)), "h");
}

TEST(LoadRadicalTable, DanglingRedirect) {
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) + "89\t氏\tti\tabolished\t-\n"),
            ErrorKind::kDanglingRedirect);
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) + "89\t氏\tshi4\tabolished\t乙\n"),
            ErrorKind::kDanglingRedirect);
  // A redirect to another abolished radical is not followed.
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) +
                    "5\t乙\tzhe2\tabolished\t己\n52\t己\tji3\tabolished\t乙\n"),
            ErrorKind::kDanglingRedirect);
}

TEST(LoadRadicalTable, SynonymsShareAPronunciation) {
  const RadicalTable t = radicals_from(std::string(kRadicalHeader) +
                                       "10\t讠\tyan2\tactive\tyan\tyan\n"
                                       "124\t言\tyan2\tactive\tyan\tyan\n");
  EXPECT_EQ(t.entries().size(), 2u);
}

TEST(LoadRadicalTable, PronunciationClash) {
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) +
                    "10\t讠\tyan2\tactive\tyan\n124\t言\tyan2\tactive\tyan\n"),
            ErrorKind::kPronunciationClash);
  // Different groups do not help.
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) +
                    "10\t讠\tyan2\tactive\tyan\ta\n124\t言\tyan2\tactive\tyan\tb\n"),
            ErrorKind::kPronunciationClash);
  // The default tone is part of the pronunciation.
  EXPECT_NO_THROW(radicals_from(std::string(kRadicalHeader) +
                                "14\t人\tren2\tactive\tren\t-\t2\n"
                                "15\t亻\tren2\tactive\tren\n"));
}

TEST(LoadRadicalTable, DuplicateGlyph) {
  EXPECT_EQ(kind_of(std::string(kRadicalHeader) +
                    "51\t尸\tshi1\tactive\tpo\n52\t尸\tshi1\tactive\tpa\n"),
            ErrorKind::kDuplicateGlyph);
}

TEST(LoadRadicalTable, MalformedRows) {
  const std::string h = kRadicalHeader;
  for (const std::string& row : {
           std::string("x\t尸\tshi1\tactive\tpo\n"),         // index
           std::string("0\t尸\tshi1\tactive\tpo\n"),         // index
           std::string("1\t尸尸\tshi1\tactive\tpo\n"),       // glyph
           std::string("1\t尸\tsh!\tactive\tpo\n"),          // original
           std::string("1\t尸\tshi1\tmaybe\tpo\n"),          // status
           std::string("1\t尸\tshi1\tactive\tpō\n"),         // toned name
           std::string("1\t尸\tshi1\tactive\tshuan\n"),      // too long
           std::string("1\t尸\tshi1\tactive\tpo\t-\t7\n"),   // tone
           std::string("1\t一\theng2\tactive\th\t-\t1\n"),   // unwritable tone
           std::string("1\t尸\tshi1\tactive\tpo\t-\t-\tyes\n"),
           std::string("1\t尸\tshi1\n"),
       }) {
    SCOPED_TRACE(row);
    EXPECT_EQ(kind_of(h + row), ErrorKind::kMalformedInput);
  }
  EXPECT_EQ(kind_of("glyph\tindex\n"), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of(""), ErrorKind::kMalformedInput);
}

TEST(ResolveRadical, OverrideBeatsPosition) {
  const RadicalTable& t = testing::bundled_radicals();
  const std::vector<RadicalCandidate> yingc = {{"广", RadicalPosition::kTop},
                                               {"鸟", RadicalPosition::kOther}};
  EXPECT_EQ(resolve_radical(yingc, t).glyph, "鸟");
}

TEST(ResolveRadical, FollowsRedirect) {
  const RadicalTable& t = testing::bundled_radicals();
  const std::vector<RadicalCandidate> c = {{"巳", RadicalPosition::kOther}};
  EXPECT_EQ(resolve_radical(c, t).glyph, "衣");
}

TEST(ResolveRadical, PositionPreference) {
  const RadicalTable& t = testing::bundled_radicals();
  const std::vector<RadicalCandidate> only = {{"口", RadicalPosition::kOther}};
  EXPECT_EQ(resolve_radical(only, t).glyph, "口");
  const std::vector<RadicalCandidate> left_then_top = {
      {"木", RadicalPosition::kLeft}, {"日", RadicalPosition::kTop}};
  EXPECT_EQ(resolve_radical(left_then_top, t).glyph, "日");
  const std::vector<RadicalCandidate> other_then_left = {
      {"木", RadicalPosition::kOther}, {"日", RadicalPosition::kLeft}};
  EXPECT_EQ(resolve_radical(other_then_left, t).glyph, "日");
  const std::vector<RadicalCandidate> unknown_first = {
      {"开", RadicalPosition::kLeft}, {"彡", RadicalPosition::kOther}};
  EXPECT_EQ(resolve_radical(unknown_first, t).glyph, "彡");
}

TEST(ResolveRadical, NoActiveRadical) {
  const RadicalTable& t = testing::bundled_radicals();
  try {
    const std::vector<RadicalCandidate> c = {{"开", RadicalPosition::kTop}};
    resolve_radical(c, t, "开");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoActiveRadical);
  }
  EXPECT_THROW(resolve_radical(std::span<const RadicalCandidate>{}, t), Error);
}

TEST(ResolveRadical, Deterministic) {
  const RadicalTable& t = testing::bundled_radicals();
  for (const CharacterEntry& c : testing::bundled_characters()) {
    if (c.radical_candidates.empty()) continue;
    EXPECT_EQ(&resolve_radical(c, t), &resolve_radical(c, t));
  }
}

TEST(BundledRadicals, NoClashOutsideSynonymGroups) {
  const auto& entries = testing::bundled_radicals().entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      const RadicalEntry& a = entries[i];
      const RadicalEntry& b = entries[j];
      if (!a.active() || !b.active()) continue;
      if (!a.synonym_group.empty() && a.synonym_group == b.synonym_group) continue;
      EXPECT_NE(a.rendered_revised(), b.rendered_revised()) << a.glyph << b.glyph;
    }
  }
}

TEST(BundledRadicals, RedirectsAreOneHop) {
  const RadicalTable& t = testing::bundled_radicals();
  for (const RadicalEntry& e : t.entries()) {
    if (e.active()) continue;
    const RadicalEntry* target = t.find(e.redirect_to);
    ASSERT_NE(target, nullptr) << e.glyph;
    EXPECT_TRUE(target->active());
  }
}

TEST(BundledRadicals, SampleRows) {
  const RadicalTable& t = testing::bundled_radicals();
  EXPECT_EQ(t.find("十")->rendered_revised(), "shì");
  EXPECT_EQ(t.find("士")->rendered_revised(), "do");
  EXPECT_EQ(t.find("尸")->rendered_revised(), "po");
  EXPECT_EQ(t.find("石")->rendered_revised(), "bo");
  EXPECT_EQ(t.find("矢")->rendered_revised(), "ro");
  EXPECT_EQ(t.find("广")->rendered_revised(), "en");
  EXPECT_EQ(t.find("𠂇")->rendered_revised(), "wan");
  EXPECT_EQ(t.find("人")->rendered_revised(), "rén");
  EXPECT_FALSE(t.find("氏")->active());
  EXPECT_FALSE(t.find("卨")->active());
  EXPECT_FALSE(t.find("己")->active());
}

TEST(AuditRadicals, SampleRowsHaveNoClash) {
  const RadicalTable t = radicals_from(std::string(kRadicalHeader) +
                                       "6\t十\tshi2\tactive\tshi\n"
                                       "29\t士\tshi4\tactive\tdo\n"
                                       "51\t尸\tshi1\tactive\tpo\n"
                                       "102\t石\tshi2\tactive\tbo\n"
                                       "110\t矢\tshi3\tactive\tro\n");
  const RadicalAudit a = audit_radicals(t);
  EXPECT_TRUE(a.pass);
  for (const RadicalAuditRow& r : a.rows) {
    EXPECT_EQ(r.clashes, 0);
    EXPECT_EQ(r.repetitions, 1);
  }
  // Every original reading is "shi".
  ASSERT_EQ(a.original_collisions.size(), 1u);
  EXPECT_EQ(a.original_collisions[0].first, "shi");
  EXPECT_EQ(a.original_collisions[0].second.size(), 5u);
  EXPECT_NE(a.to_text().find("revised-clashes: 0\n"), std::string::npos);
}

TEST(AuditRadicals, SynonymGroupCountsTwo) {
  const RadicalTable t = radicals_from(std::string(kRadicalHeader) +
                                       "100\t示\tshi4\tactive\ti\ti\n"
                                       "100\t禘\tdi4\tactive\ti\ti\n");
  const RadicalAudit a = audit_radicals(t);
  EXPECT_TRUE(a.pass);
  ASSERT_EQ(a.rows.size(), 2u);
  EXPECT_EQ(a.rows[0].repetitions, 2);
  EXPECT_EQ(a.rows[1].repetitions, 2);
  EXPECT_EQ(a.rows[0].clashes, 0);
}

TEST(AuditRadicals, ReportOnlyTableShowsClash) {
  std::istringstream in(std::string(kRadicalHeader) +
                        "10\t讠\tyan2\tactive\tyan\n124\t言\tyan2\tactive\tyan\n");
  const RadicalTable t =
      load_radical_table(in, "test", RadicalTable::Validation::kReportOnly);
  const RadicalAudit a = audit_radicals(t);
  EXPECT_FALSE(a.pass);
  EXPECT_EQ(a.rows[0].clashes, 1);
  EXPECT_NE(a.to_text().find("radical-audit: FAIL"), std::string::npos);
}

TEST(AuditRadicals, EmptyTable) {
  const RadicalAudit a = audit_radicals(RadicalTable{});
  EXPECT_TRUE(a.rows.empty());
  EXPECT_TRUE(a.pass);
}

}  // namespace
}  // namespace vcc
