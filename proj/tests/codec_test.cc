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

#include "vcc/codec.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_data.h"
#include "vcc/codepage.h"
#include "vcc/error.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

using testing::bundled_lexicon;
using testing::bundled_words;

WordList words_of(std::initializer_list<const char*> list) {
  WordList w;
  for (const char* s : list) w.add(s);
  return w;
}

WordToken word(std::initializer_list<const char*> glyphs) {
  WordToken t;
  for (const char* g : glyphs) t.glyphs.emplace_back(g);
  return t;
}

std::string encode(std::string_view text) {
  return encode_text(text, bundled_lexicon(), bundled_words()).text;
}

ErrorKind decode_error(std::string_view v) {
  try {
    decode_text(v, bundled_lexicon());
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted " << v;
  return ErrorKind::kIo;
}

// Brute force: at each position try every length from the longest down and
// keep the first listed word; otherwise a single character.
std::vector<std::vector<std::string>> oracle_segment(
    const std::vector<std::string>& glyphs, const WordList& words) {
  std::vector<std::vector<std::string>> out;
  size_t i = 0;
  while (i < glyphs.size()) {
    size_t take = 1;
    for (size_t len = glyphs.size() - i; len >= 2; --len) {
      std::string s;
      for (size_t k = i; k < i + len; ++k) s += glyphs[k];
      if (words.contains(s)) {
        take = len;
        break;
      }
    }
    out.emplace_back(glyphs.begin() + i, glyphs.begin() + i + take);
    i += take;
  }
  return out;
}

TEST(WordList, RejectsShortWords) {
  WordList w;
  EXPECT_THROW(w.add("再"), Error);
  EXPECT_THROW(w.add(""), Error);
  w.add("布娃娃");
  EXPECT_EQ(w.max_length(), 3u);
  EXPECT_TRUE(w.contains("布娃娃"));
  EXPECT_FALSE(w.contains("娃娃"));
}

TEST(WordList, LoadsTsv) {
  std::istringstream in("word\tfrequency\n再见\t10\n狐狸\t-\n");
  const WordList w = load_word_list(in);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_TRUE(w.contains("狐狸"));
  std::istringstream bad("word\n再\n");
  EXPECT_THROW(load_word_list(bad), Error);
}

TEST(Segment, Examples) {
  const Lexicon& lex = bundled_lexicon();
  EXPECT_EQ(segment("再见!", lex, words_of({"再见"})),
            (TokenStream{word({"再", "见"}), Passthrough{"!"}}));
  EXPECT_TRUE(segment("", lex, words_of({})).empty());
  EXPECT_EQ(segment("布娃娃", lex, words_of({"布娃娃", "娃娃"})),
            (TokenStream{word({"布", "娃", "娃"})}));
  EXPECT_EQ(segment("布娃娃", lex, words_of({"娃娃"})),
            (TokenStream{word({"布"}), word({"娃", "娃"})}));
}

TEST(Segment, NumeralRuns) {
  const Lexicon& lex = bundled_lexicon();
  EXPECT_EQ(segment("二十一岁", lex, words_of({})),
            (TokenStream{word({"二", "十", "一"}), word({"岁"})}));
  // A listed word wins a tie with a numeral run.
  EXPECT_EQ(segment("一一", lex, words_of({"一一"})),
            (TokenStream{word({"一", "一"})}));
  // A longer numeral run beats a shorter word.
  EXPECT_EQ(segment("十一万", lex, words_of({"十一"})),
            (TokenStream{word({"十", "一", "万"})}));
  EXPECT_TRUE(is_numeral_glyph("两"));
  EXPECT_FALSE(is_numeral_glyph("协"));
}

TEST(Segment, MatchesBruteForceOracle) {
  const WordList& words = bundled_words();
  std::vector<std::string> pool;
  for (const auto& [w, f] : words.words()) {
    for (const std::string& g : utf8::split_code_points(w)) {
      if (!is_numeral_glyph(g)) pool.push_back(g);
    }
  }
  std::mt19937 rng(20260418);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> glyphs;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int k = 0; k < n; ++k) {
      glyphs.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
    }
    std::string text;
    for (const auto& g : glyphs) text += g;
    const TokenStream got = segment(text, bundled_lexicon(), words);
    std::vector<std::vector<std::string>> got_words;
    for (const Token& t : got) {
      ASSERT_TRUE(std::holds_alternative<WordToken>(t));
      got_words.push_back(std::get<WordToken>(t).glyphs);
    }
    EXPECT_EQ(got_words, oracle_segment(glyphs, words)) << text;
    EXPECT_EQ(join_tokens(got), text);
  }
}

TEST(Encode, Examples) {
  EXPECT_EQ(encode("协"), "shì·xié");
  EXPECT_EQ(encode("再见"), "h·zài-ti·jiàn");
  EXPECT_EQ(encode("喂"), "kou·wèi");
  EXPECT_EQ(encode("狐狸"), "a·hú-a·lí");
  EXPECT_EQ(encode("二十一"), "èr-shí-yī");
  EXPECT_EQ(encode(""), "");
  EXPECT_EQ(encode("再见!"), "h·zài-ti·jiàn!");
  EXPECT_EQ(encode("协协"), "shì·xié shì·xié");
}

TEST(Encode, VocabularyTable) {
  // Written elsewhere as "mu·xiàng·pí·pí"; "-" joins characters of a word.
  EXPECT_EQ(encode("橡皮"), "mu·xiàng-pí·pí");
  EXPECT_EQ(encode("为了"), "d·wéi-z·le");
  EXPECT_EQ(encode("嗨"), "kou·hāi");
  EXPECT_EQ(encode("礼帽"), "i·lî-nin·mào");
  EXPECT_EQ(encode("多少"), "zo·duō-âo·shâo");
  EXPECT_EQ(encode("布娃娃"), "wan·bù-nū·wá-nū·wá");
  // The table has "bà·xīng"; nothing in the sample pushes 兴 off "ba".
  EXPECT_EQ(encode("高兴"), "gao·gāo-ba·xīng");
}

TEST(Encode, PassthroughSpacing) {
  EXPECT_EQ(encode("协 协"), "shì·xié  shì·xié");
  EXPECT_EQ(encode("协，协"), "shì·xié，shì·xié");
  EXPECT_EQ(encode(" 协 "), " shì·xié ");
}

TEST(Encode, EscapesFormSymbols) {
  EXPECT_EQ(encode("a-b"), "\\a\\-\\b");
  EXPECT_EQ(encode("·'\\"), "\\·\\'\\\\");
  EXPECT_EQ(encode("1+1"), "1+1");
  EXPECT_EQ(encode("⟦x⟧"), "\\⟦\\x\\⟧");
  EXPECT_TRUE(is_form_symbol(U'é'));
  EXPECT_TRUE(is_form_symbol(U'Z'));
  EXPECT_FALSE(is_form_symbol(U'5'));
  EXPECT_FALSE(is_form_symbol(U'，'));
}

TEST(Encode, UnknownCharacter) {
  try {
    encode("协龘");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownCharacter);
    EXPECT_NE(std::string(e.what()).find("at character 1"), std::string::npos);
  }
}

TEST(Encode, MarkMode) {
  const EncodeResult r = encode_text("协龘再见龘", bundled_lexicon(), bundled_words(),
                                     UnknownPolicy::kMark);
  EXPECT_EQ(r.text, "shì·xié⟦龘⟧h·zài-ti·jiàn⟦龘⟧");
  EXPECT_EQ(r.unknown, 2u);
  EXPECT_EQ(decode_text(r.text, bundled_lexicon()), "协龘再见龘");
}

TEST(Decode, Examples) {
  const Lexicon& lex = bundled_lexicon();
  EXPECT_EQ(decode_text("shì·xié", lex), "协");
  EXPECT_EQ(decode_text("h·zài-ti·jiàn", lex), "再见");
  EXPECT_EQ(decode_text("", lex), "");
  // Carons are read as the third tone.
  EXPECT_EQ(decode_text("ji·jǐ-sa·sui", lex), "几岁");
}

TEST(Decode, Errors) {
  EXPECT_EQ(decode_error("xyz·q"), ErrorKind::kUnknownToken);
  EXPECT_EQ(decode_error("shi·xie"), ErrorKind::kUnknownToken);
  EXPECT_EQ(decode_error("shì·xié--shì·xié"), ErrorKind::kMalformedToken);
  EXPECT_EQ(decode_error("shì·xié-"), ErrorKind::kMalformedToken);
  EXPECT_EQ(decode_error("a·b·c"), ErrorKind::kMalformedToken);
  EXPECT_EQ(decode_error("⟦龘"), ErrorKind::kMalformedToken);
  EXPECT_EQ(decode_error("\\"), ErrorKind::kMalformedToken);
}

TEST(Codec, SentenceRoundTrip) {
  const std::string v = encode(testing::kSentence);
  EXPECT_EQ(decode_text(v, bundled_lexicon()), testing::kSentence);
  const Lexicon c = compress_lexicon(bundled_lexicon());
  const std::string vc = encode_text(testing::kSentence, c, bundled_words()).text;
  EXPECT_NE(vc.find("s·zhōg"), std::string::npos);
  EXPECT_EQ(decode_text(vc, c), testing::kSentence);
}

std::string random_text(std::mt19937& rng, const std::vector<std::string>& glyphs) {
  static const std::vector<std::string> kExtra = {
      "，", "。", "、", "！", "？", "“", "”", " ", " ", "!", "a", "Z",
      "1", "-", "·", "'", "\\", "⟦", "⟧", "é", "\n", "\t"};
  std::string s;
  const int n = std::uniform_int_distribution<int>(0, 40)(rng);
  for (int k = 0; k < n; ++k) {
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      s += kExtra[std::uniform_int_distribution<size_t>(0, kExtra.size() - 1)(rng)];
    } else {
      s += glyphs[std::uniform_int_distribution<size_t>(0, glyphs.size() - 1)(rng)];
    }
  }
  return s;
}

std::vector<std::string> lexicon_glyphs() {
  std::vector<std::string> g;
  for (const auto& [glyph, f] : bundled_lexicon().forward()) g.push_back(glyph);
  return g;
}

TEST(Codec, RandomRoundTrip) {
  const std::vector<std::string> glyphs = lexicon_glyphs();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string t = random_text(rng, glyphs);
    const std::string v = encode(t);
    ASSERT_EQ(decode_text(v, bundled_lexicon()), t) << v;
  }
}

TEST(Codec, EncodedTextStaysInCodePage) {
  const std::vector<std::string> glyphs = lexicon_glyphs();
  const Alphabet& cp = Alphabet::vcc8();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::string t = random_text(rng, glyphs);
    std::erase(t, '\t');
    const std::string v = encode(t);
    const std::vector<uint8_t> bytes = cp.encode_bytes(v);
    EXPECT_EQ(bytes.size(), utf8::length(v));
    EXPECT_EQ(cp.decode_bytes(bytes), v);
  }
}

TEST(Codec, SeparatorDiscipline) {
  const std::vector<std::string> glyphs = lexicon_glyphs();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string t;
    const int n = std::uniform_int_distribution<int>(1, 15)(rng);
    for (int k = 0; k < n; ++k) {
      t += glyphs[std::uniform_int_distribution<size_t>(0, glyphs.size() - 1)(rng)];
    }
    const std::string v = encode(t);
    const TokenStream tokens = segment(t, bundled_lexicon(), bundled_words());
    // Words are split by single spaces and characters by single hyphens.
    size_t spaces = 0, hyphens = 0, chars = 0;
    for (const Token& tok : tokens) chars += std::get<WordToken>(tok).glyphs.size();
    for (char ch : v) {
      spaces += ch == ' ';
      hyphens += ch == '-';
    }
    EXPECT_EQ(spaces, tokens.size() - 1) << v;
    EXPECT_EQ(hyphens, chars - tokens.size()) << v;
    EXPECT_EQ(v.find("  "), std::string::npos);
    EXPECT_EQ(v.find("--"), std::string::npos);
    EXPECT_NE(v.front(), ' ');
    EXPECT_NE(v.back(), ' ');
  }
}

}  // namespace
}  // namespace vcc
