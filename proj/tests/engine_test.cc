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

#include "nnexus/engine.h"

#include <gtest/gtest.h>

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "nnexus/error.h"
#include "test_util.h"

namespace nnexus {
namespace {

class EngineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    engine_.LoadCorpus(testing::FixturePath("overloaded_corpus.jsonl"));
  }
  Engine engine_;
};

TEST_F(EngineTest, AnnotatesAndCaches) {
  bool hit = true;
  CachedResult first = engine_.Annotate("Let $G$ be a group", {}, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(first.annotations.size(), 1u);
  CachedResult second = engine_.Annotate("Let $G$ be a group", {}, &hit);
  EXPECT_TRUE(hit);
  EXPECT_EQ(first, second);
  EngineStatus status = engine_.Status();
  EXPECT_EQ(status.concepts, 5u);
  EXPECT_EQ(status.sources, std::vector<std::string>{"planetmath"});
  EXPECT_EQ(status.cache.hits, 1u);
  EXPECT_EQ(status.cache.entries, 1u);
}

TEST_F(EngineTest, PolicyAndSourcesArePartOfTheKey) {
  bool hit = false;
  engine_.Annotate("group and group", {}, &hit);
  AnnotateOptions all;
  all.policy = LinkPolicy::kAll;
  CachedResult r = engine_.Annotate("group and group", all, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(testing::CountOccurrences(r.html, "nnexus_concept"), 2u);
  AnnotateOptions filtered;
  filtered.sources = std::set<std::string>{"dlmf"};
  r = engine_.Annotate("group and group", filtered, &hit);
  EXPECT_FALSE(hit);
  EXPECT_TRUE(r.annotations.empty());
  EXPECT_EQ(r.html, "group and group");
}

TEST_F(EngineTest, DocIdKeysReplaceStaleContent) {
  AnnotateOptions opts;
  opts.doc_id = "page-1";
  bool hit = true;
  engine_.Annotate("a group", opts, &hit);
  CachedResult r = engine_.Annotate("a chain", opts, &hit);
  EXPECT_FALSE(hit);
  EXPECT_NE(r.html.find("chain</a>"), std::string::npos);
  engine_.Annotate("a chain", opts, &hit);
  EXPECT_TRUE(hit);
}

TEST_F(EngineTest, MutationsExpireAffectedEntriesOnly) {
  bool hit = false;
  engine_.Annotate("the fundamental theorem", {}, &hit);
  engine_.Annotate("a chain", {}, &hit);
  std::string id = engine_.AddConcept(Concept{
      "", "fundamental domain", {}, {}, "planetmath", "https://planetmath.org/fd", {}});
  EXPECT_EQ(engine_.Status().cache.expirations, 1u);
  engine_.Annotate("a chain", {}, &hit);
  EXPECT_TRUE(hit);
  CachedResult r = engine_.Annotate("the fundamental theorem", {}, &hit);
  EXPECT_FALSE(hit);
  EXPECT_TRUE(r.annotations.empty());
  r = engine_.Annotate("the fundamental domain", {}, &hit);
  ASSERT_EQ(r.annotations.size(), 1u);
  engine_.RemoveConcept(id);
  r = engine_.Annotate("the fundamental domain", {}, &hit);
  EXPECT_FALSE(hit);
  EXPECT_TRUE(r.annotations.empty());
}

TEST_F(EngineTest, HarvestFeedsTheIndex) {
  IndexerRegistry registry;
  registry.Register(DlmfRule());
  std::string page = testing::ReadFileOrDie(testing::FixturePath("dlmf_index.html"));
  HarvestReport report =
      engine_.Harvest(registry, "dlmf", page, "https://dlmf.nist.gov/idx/G");
  EXPECT_EQ(report.added, 5u);
  CachedResult r = engine_.AnnotateFresh("the incomplete gamma function of x");
  ASSERT_EQ(r.annotations.size(), 1u);
  EXPECT_EQ(r.annotations[0].href, "https://dlmf.nist.gov/8.2#i");
}

TEST_F(EngineTest, SaveCorpusRoundTrip) {
  testing::ScratchDir dir;
  EXPECT_EQ(engine_.SaveCorpus(dir.File("c.jsonl")), 5u);
  Engine other;
  EXPECT_TRUE(other.LoadCorpus(dir.File("c.jsonl")).empty());
  EXPECT_EQ(other.store().Snapshot(), engine_.store().Snapshot());
}

TEST_F(EngineTest, OptionParsing) {
  EXPECT_EQ(ParseOutputFormat("embed"), OutputFormat::kEmbed);
  EXPECT_EQ(ParseOutputFormat("standoff"), OutputFormat::kStandoff);
  EXPECT_FALSE(ParseOutputFormat("xml").has_value());
  EXPECT_EQ(ParseLinkPolicy("first"), LinkPolicy::kFirstOccurrence);
  EXPECT_EQ(ParseLinkPolicy("all"), LinkPolicy::kAll);
  EXPECT_FALSE(ParseLinkPolicy("some").has_value());
  EXPECT_STREQ(LinkPolicyName(LinkPolicy::kAll), "all");
}

// Readers and a writer run together; every result must be one a fresh run
// could produce before or after the concurrent mutation.
TEST_F(EngineTest, ConcurrentReadersAndWriter) {
  const std::string doc = "a permanent chain in the fundamental groupoid functor";
  CachedResult without = engine_.AnnotateFresh(doc);
  Concept extra{"", "chain", {}, {}, "mathworld", "https://mathworld.example/chain", {}};
  std::string id = engine_.AddConcept(extra);
  CachedResult with = engine_.AnnotateFresh(doc);
  engine_.RemoveConcept(id);

  std::atomic<bool> stop{false};
  std::atomic<int> bad{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 3; ++t) {
    readers.emplace_back([&] {
      while (!stop) {
        CachedResult r = engine_.Annotate(doc);
        if (!(r == without || r == with)) ++bad;
      }
    });
  }
  for (int i = 0; i < 200; ++i) {
    std::string added = engine_.AddConcept(extra);
    engine_.RemoveConcept(added);
  }
  stop = true;
  for (std::thread &t : readers) t.join();
  EXPECT_EQ(bad.load(), 0);
  EXPECT_EQ(engine_.Annotate(doc), without);
}

}  // namespace
}  // namespace nnexus
