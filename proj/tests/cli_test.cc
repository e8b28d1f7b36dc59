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

#include "nnexus/cli.h"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.h"

namespace nnexus {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Nnexus(std::vector<std::string> args, const std::string &input = "") {
  args.insert(args.begin(), "nnexus");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = dir_.File("tiny.jsonl");
    testing::WriteFile(corpus_, testing::ReadFileOrDie(testing::FixturePath("tiny.jsonl")));
    page_ = dir_.File("page.html");
    testing::WriteFile(page_, "<p>Let $G$ be an abelian group.</p>\n");
  }

  testing::ScratchDir dir_;
  std::string corpus_;
  std::string page_;
};

TEST_F(CliTest, AnnotateFileToStdout) {
  CliRun r = Nnexus({"annotate", "--corpus", corpus_, page_});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(">abelian group</a>"), std::string::npos) << r.out;
  EXPECT_EQ(testing::StripConceptLinks(r.out), "<p>Let $G$ be an abelian group.</p>\n");
}

TEST_F(CliTest, AnnotateStdinStandoff) {
  CliRun r = Nnexus({"annotate", "--corpus", corpus_, "--format", "standoff"},
                 "groups of groups");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["surface"], "groups");
}

TEST_F(CliTest, AnnotateToOutputDir) {
  std::string out_dir = dir_.File("out");
  CliRun r = Nnexus({"annotate", "--corpus", corpus_, "--policy", "all",
                  "--output-dir", out_dir, page_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::string written = testing::ReadFileOrDie(out_dir + "/page.html");
  EXPECT_NE(written.find("nnexus_concept"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Nnexus({"annotate", "--corpus", dir_.File("missing.jsonl"), page_}).code,
            kExitUsage);
  EXPECT_EQ(Nnexus({"annotate", page_}).code, kExitUsage);
  EXPECT_EQ(Nnexus({"annotate", "--corpus", corpus_, "--format", "xml", page_}).code,
            kExitUsage);
  EXPECT_EQ(Nnexus({}).code, kExitUsage);
  EXPECT_EQ(Nnexus({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Nnexus({"index", "--corpus", corpus_, page_}).code, kExitUsage);
  EXPECT_EQ(Nnexus({"index", "--source", "nlab", "--corpus", corpus_, page_}).code,
            kExitUsage);
  EXPECT_EQ(Nnexus({"serve", "--corpus", dir_.File("missing.jsonl")}).code, kExitUsage);
  EXPECT_EQ(Nnexus({"stats"}).code, kExitUsage);
  CliRun r = Nnexus({"annotate"});
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(Nnexus({"annotate", "--corpus", corpus_, dir_.File("nope.html")}).code,
            kExitData);
  std::string bad_rules = dir_.File("bad.json");
  testing::WriteFile(bad_rules, "{not json");
  EXPECT_EQ(Nnexus({"index", "--rules", bad_rules, "--source", "dlmf", "--corpus",
                 corpus_, page_})
                .code,
            kExitData);
  std::string bad_config = dir_.File("bad_config.json");
  testing::WriteFile(bad_config, "{\"port\": \"many\"}");
  EXPECT_EQ(Nnexus({"stats", "--corpus", corpus_, "--config", bad_config}).code,
            kExitData);
}

TEST_F(CliTest, IndexThenStats) {
  std::string corpus = dir_.File("harvested.jsonl");
  std::string page = testing::FixturePath("dlmf_index.html");
  CliRun r = Nnexus({"index", "--rules", testing::FixturePath("../../rules/dlmf.json"),
                  "--source", "dlmf", "--corpus", corpus, "--base-url",
                  "https://dlmf.nist.gov/idx/", page});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("added 5"), std::string::npos) << r.out;
  r = Nnexus({"stats", "--corpus", corpus});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "dlmf\t5\ntotal\t5\n");

  // Harvesting again adds nothing and keeps the corpus stable.
  std::string before = testing::ReadFileOrDie(corpus);
  r = Nnexus({"index", "--source", "dlmf", "--corpus", corpus, "--base-url",
           "https://dlmf.nist.gov/idx/", page});
  EXPECT_NE(r.out.find("added 0\tskipped 5"), std::string::npos) << r.out;
  EXPECT_EQ(testing::ReadFileOrDie(corpus), before);
}

TEST_F(CliTest, IndexUsesFileUrlsByDefault) {
  std::string corpus = dir_.File("pm.jsonl");
  CliRun r = Nnexus({"index", "--source", "planetmath", "--corpus", corpus,
                  testing::FixturePath("planetmath_group.html")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(testing::ReadFileOrDie(corpus).find("\"url\":\"file:///"),
            std::string::npos);
}

TEST_F(CliTest, StatsValidate) {
  std::string corpus = dir_.File("dup.jsonl");
  testing::WriteFile(corpus,
                     "{\"label\":\"classical logic\",\"source\":\"pm\",\"url\":\"https://a/1\"}\n"
                     "{\"label\":\"classical logic\",\"source\":\"pm\",\"url\":\"https://a/2\"}\n"
                     "{\"label\":\"x\",\"source\":\"pm\"}\n");
  CliRun r = Nnexus({"stats", "--corpus", corpus, "--validate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "pm\t2\ntotal\t2\n");
  EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos) << r.err;
}

TEST_F(CliTest, ConfigSuppliesCorpusAndPriority) {
  std::string config = dir_.File("config.json");
  testing::WriteFile(config, "{\"corpus\": \"" + corpus_ + "\"}");
  CliRun r = Nnexus({"annotate", "--config", config}, "a group");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("nnexus_concept"), std::string::npos);
  setenv("NNEXUS_CONFIG", config.c_str(), 1);
  r = Nnexus({"stats"});
  unsetenv("NNEXUS_CONFIG");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "dlmf\t1\nplanetmath\t2\ntotal\t3\n");
}

TEST_F(CliTest, HelpExitsCleanly) {
  CliRun r = Nnexus({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("annotate"), std::string::npos);
}

}  // namespace
}  // namespace nnexus
