// Copyright 2026 The NNexus Authors.
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

#include "nnexus/normalizer.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "nnexus/error.h"
#include "test_util.h"

namespace nnexus {
namespace {

using ::testing::ElementsAre;

std::vector<std::string> Surfaces(const std::vector<TokenSpan> &tokens) {
  std::vector<std::string> out;
  for (const TokenSpan &t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> Norms(const std::vector<TokenSpan> &tokens) {
  std::vector<std::string> out;
  for (const TokenSpan &t : tokens) out.push_back(t.norm);
  return out;
}

TEST(NormalizerTest, TokenizesLetGBeAGroup) {
  Normalizer n;
  auto tokens = n.Tokenize("Let $G$ be a group");
  EXPECT_EQ(Surfaces(tokens),
            (std::vector<std::string>{"Let", "G", "be", "a", "group"}));
  EXPECT_EQ(Norms(tokens),
            (std::vector<std::string>{"", "g", "", "", "group"}));
  EXPECT_EQ(tokens[1].start, 5u);
  EXPECT_EQ(tokens[4].start, 13u);
  EXPECT_EQ(tokens[4].end, 18u);
}

TEST(NormalizerTest, EmptyTextHasNoTokens) {
  EXPECT_TRUE(Normalizer().Tokenize("").empty());
  EXPECT_TRUE(Normalizer().Tokenize("  ,;$ -- ").empty());
}

TEST(NormalizerTest, KeepsInternalHyphens) {
  Normalizer n;
  EXPECT_EQ(Surfaces(n.Tokenize("well-defined map")),
            (std::vector<std::string>{"well-defined", "map"}));
  EXPECT_EQ(Surfaces(n.Tokenize("-x- a--b c-")),
            (std::vector<std::string>{"x", "a", "b", "c"}));
}

TEST(NormalizerTest, UnicodeLettersAndCase) {
  Normalizer n;
  auto tokens = n.Tokenize("Ωmega CAFÉ naïve");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].norm, "ωmega");
  EXPECT_EQ(tokens[1].norm, "café");
  EXPECT_EQ(tokens[2].surface, "naïve");
  // Decomposed "e" + U+0301 composes to the same norm as precomposed "é".
  EXPECT_EQ(n.NormalizeToken("cafe\xCC\x81"), "café");
}

TEST(NormalizerTest, InvalidUtf8SeparatesTokens) {
  Normalizer n;
  std::string text = "ring\xFF" "field";
  auto tokens = n.Tokenize(text);
  EXPECT_EQ(Surfaces(tokens), (std::vector<std::string>{"ring", "field"}));
}

TEST(NormalizerTest, PluralRules) {
  Normalizer n;
  EXPECT_EQ(n.NormalizeToken("Groups"), "group");
  EXPECT_EQ(n.NormalizeToken("matrices"), "matrice");
  EXPECT_EQ(n.NormalizeToken("the"), "");
  EXPECT_EQ(n.NormalizeToken("THE"), "");
  // Rule-by-rule expectations, worked out by hand.
  EXPECT_EQ(StemPlural("categories"), "category");   // ies -> y
  EXPECT_EQ(StemPlural("ties"), "tie");              // too short for ies
  EXPECT_EQ(StemPlural("classes"), "class");         // sses -> ss
  EXPECT_EQ(StemPlural("boxes"), "box");             // es after x
  EXPECT_EQ(StemPlural("branches"), "branch");       // es after ch
  EXPECT_EQ(StemPlural("meshes"), "mesh");           // es after sh
  EXPECT_EQ(StemPlural("buzzes"), "buzz");           // es after z
  EXPECT_EQ(StemPlural("torus"), "torus");           // us kept
  EXPECT_EQ(StemPlural("basis"), "basis");           // is kept
  EXPECT_EQ(StemPlural("class"), "class");           // ss kept
  EXPECT_EQ(StemPlural("gas"), "gas");               // too short
  EXPECT_EQ(StemPlural("rings"), "ring");
  EXPECT_EQ(StemPlural("spaces"), "space");
}

TEST(NormalizerTest, NormalizePhraseExamples) {
  Normalizer n;
  EXPECT_THAT(n.NormalizePhrase("fundamental groupoid functor"),
              ElementsAre("fundamental", "groupoid", "functor"));
  EXPECT_THAT(n.NormalizePhrase("Chain in a graph"), ElementsAre("chain", "graph"));
  try {
    n.NormalizePhrase("of the");
    FAIL() << "expected EmptyPhrase";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPhrase);
  }
  EXPECT_TRUE(n.TryNormalizePhrase("of the").empty());
}

TEST(NormalizerTest, ShippedListIsVersionedAndLowercase) {
  const auto &words = ShippedStopwords();
  EXPECT_GE(words.size(), 100u);
  for (const std::string &w : words) {
    for (char c : w) EXPECT_FALSE(c >= 'A' && c <= 'Z') << w;
  }
  Normalizer n;
  EXPECT_TRUE(n.IsStopword("let"));
  EXPECT_TRUE(n.IsStopword("be"));
  EXPECT_FALSE(n.IsStopword("group"));
  EXPECT_FALSE(n.IsStopword("chain"));
}

TEST(NormalizerTest, CustomStopwordFile) {
  testing::ScratchDir dir;
  std::string path = dir.File("stop.txt");
  testing::WriteFile(path, "# custom\nfoo\n\nbar\n");
  Normalizer n = Normalizer::FromStopwordFile(path);
  EXPECT_EQ(n.stopword_count(), 2u);
  EXPECT_EQ(n.NormalizeToken("Foo"), "");
  EXPECT_EQ(n.NormalizeToken("the"), "the");
  EXPECT_THROW(Normalizer::FromStopwordFile(dir.File("missing.txt")), Error);
}

std::string RandomWord(std::mt19937 &rng) {
  static const char *kPieces[] = {"a",  "e",  "i",  "o",  "u",  "s",  "ss",
                                  "es", "ies", "x", "ch", "sh", "z",  "r",
                                  "t",  "n",  "us", "is", "y",  "S",  "IES"};
  std::uniform_int_distribution<int> len(1, 6), piece(0, 20);
  std::string word;
  for (int i = len(rng); i > 0; --i) word += kPieces[piece(rng)];
  return word;
}

TEST(NormalizerPropertyTest, NormalizeTokenIsIdempotent) {
  Normalizer n;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    std::string word = RandomWord(rng);
    std::string once = n.NormalizeToken(word);
    if (once.empty()) continue;
    EXPECT_EQ(n.NormalizeToken(once), once) << word;
  }
}

TEST(NormalizerPropertyTest, OffsetFidelity) {
  Normalizer n;
  std::mt19937 rng(11);
  const std::vector<std::string> kGlue = {" ", ", ", "$", "-", "--", "\n",
                                          "é", " (", ")", "\xE2\x80\x94"};
  std::uniform_int_distribution<size_t> glue(0, kGlue.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    for (int i = 0; i < 12; ++i) text += RandomWord(rng) + kGlue[glue(rng)];
    auto tokens = n.Tokenize(text);
    std::string joined;
    size_t last_end = 0;
    for (const TokenSpan &t : tokens) {
      ASSERT_LT(t.start, t.end);
      ASSERT_GE(t.start, last_end);
      ASSERT_EQ(text.substr(t.start, t.end - t.start), t.surface);
      last_end = t.end;
      for (char c : t.surface) {
        if (c != '-') joined += c;
      }
    }
    std::string expected;
    for (char c : text) {
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) expected += c;
    }
    // "é" is alphabetic too; count it separately.
    std::string joined_ascii;
    for (char c : joined) {
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) joined_ascii += c;
    }
    EXPECT_EQ(joined_ascii, expected) << text;
  }
}

TEST(NormalizerPropertyTest, BothSidesIdentity) {
  Normalizer n;
  std::mt19937 rng(13);
  const std::vector<std::string> kWords = {"the", "Group", "of", "a", "Rings",
                                           "matrices", "in", "well-defined",
                                           "Classes", "be", "torus"};
  std::uniform_int_distribution<size_t> pick(0, kWords.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string phrase;
    for (int i = 0; i < 5; ++i) phrase += kWords[pick(rng)] + " ";
    std::vector<std::string> from_stream;
    for (const TokenSpan &t : n.Tokenize(phrase)) {
      if (!t.is_stopword()) from_stream.push_back(t.norm);
    }
    EXPECT_EQ(n.TryNormalizePhrase(phrase), from_stream) << phrase;
  }
}

}  // namespace
}  // namespace nnexus
