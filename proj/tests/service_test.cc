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

#include "nnexus/service.h"

#include <gtest/gtest.h>
#include <httplib.h>

#include <nlohmann/json.hpp>
#include <string>

#include "nnexus/config.h"
#include "nnexus/error.h"
#include "test_util.h"

namespace nnexus {
namespace {

using Json = nlohmann::json;

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    engine_.LoadCorpus(testing::FixturePath("overloaded_corpus.jsonl"));
  }

  HttpReply Post(std::string_view body, QueryParams params = {},
                 size_t limit = kDefaultRequestSizeLimit) {
    return HandleAnnotate(engine_, body, params, limit);
  }

  Engine engine_;
};

TEST_F(ServiceTest, EmbedWrapper) {
  HttpReply reply = Post("Let $G$ be a group", {{"format", "embed"}});
  EXPECT_EQ(reply.status, 200);
  EXPECT_EQ(reply.content_type, "application/json");
  Json j = Json::parse(reply.body);
  EXPECT_EQ(j["status"], "OK");
  std::string payload = j["payload"];
  EXPECT_TRUE(payload.starts_with("Let $G$ be a <a class=\"nnexus_concept\" "
                                  "href=\"https://planetmath.org/group\""));
  EXPECT_TRUE(payload.ends_with(">group</a>"));
  EXPECT_EQ(testing::StripConceptLinks(payload), "Let $G$ be a group");
}

TEST_F(ServiceTest, StandoffWrapper) {
  HttpReply reply = Post("a chain and a group", {{"format", "standoff"}});
  ASSERT_EQ(reply.status, 200);
  Json j = Json::parse(reply.body);
  ASSERT_TRUE(j["payload"].is_array());
  ASSERT_EQ(j["payload"].size(), 2u);
  EXPECT_EQ(j["payload"][0]["surface"], "chain");
  EXPECT_EQ(j["payload"][1]["start"], 14);
}

TEST_F(ServiceTest, EmptyBody) {
  Json j = Json::parse(Post("", {{"format", "embed"}}).body);
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(j["payload"], "");
  j = Json::parse(Post("", {{"format", "standoff"}}).body);
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(j["payload"], Json::array());
}

TEST_F(ServiceTest, InvalidParameters) {
  HttpReply reply = Post("group", {{"format", "xml"}});
  EXPECT_EQ(reply.status, 400);
  Json j = Json::parse(reply.body);
  EXPECT_EQ(j["status"], "error");
  EXPECT_FALSE(j["message"].get<std::string>().empty());
  EXPECT_EQ(Post("group", {{"policy", "some"}}).status, 400);
}

TEST_F(ServiceTest, SizeLimit) {
  EXPECT_EQ(Post(std::string(11, 'x'), {}, 10).status, 413);
  EXPECT_EQ(Post(std::string(10, 'x'), {}, 10).status, 200);
}

TEST_F(ServiceTest, SourcesFilter) {
  Json j = Json::parse(Post("a group", {{"sources", "dlmf, nlab"}}).body);
  EXPECT_EQ(j["payload"], "a group");
  j = Json::parse(Post("a group", {{"sources", "planetmath"}}).body);
  EXPECT_NE(j["payload"].get<std::string>(), "a group");
}

TEST_F(ServiceTest, IdenticalRequestsGiveIdenticalPayloads) {
  std::string body = "<p>the fundamental groupoid functor of a group</p>";
  EXPECT_EQ(Post(body).body, Post(body).body);
}

TEST_F(ServiceTest, StatusCounters) {
  Json j = Json::parse(HandleStatus(engine_).body);
  EXPECT_EQ(j["concepts"], 5);
  EXPECT_EQ(j["sources"], Json::array({"planetmath"}));
  Post("a group");
  Post("a group");
  j = Json::parse(HandleStatus(engine_).body);
  EXPECT_GE(j["cache"]["hits"].get<int>(), 1);
  EXPECT_EQ(j["cache"]["entries"], 1);
  engine_.AddConcept(Concept{"", "group action", {}, {}, "planetmath",
                             "https://planetmath.org/groupaction", {}});
  j = Json::parse(HandleStatus(engine_).body);
  EXPECT_EQ(j["cache"]["expirations"], 1);
  EXPECT_EQ(j["concepts"], 6);
}

TEST(ConfigTest, ParsesEveryKey) {
  ServiceConfig config = ParseServiceConfig(R"({
    "host": "0.0.0.0", "port": 8080, "corpus": "c.jsonl",
    "source_priority": ["dlmf", "planetmath"], "cache_capacity": 7,
    "size_limit": 100, "stopwords": "stop.txt"})");
  EXPECT_EQ(config.host, "0.0.0.0");
  EXPECT_EQ(config.port, 8080);
  EXPECT_EQ(config.corpus_path, "c.jsonl");
  EXPECT_EQ(config.source_priority, (std::vector<std::string>{"dlmf", "planetmath"}));
  EXPECT_EQ(config.cache_capacity, 7u);
  EXPECT_EQ(config.size_limit, 100u);
  EXPECT_EQ(config.stopwords_path, "stop.txt");
  ServiceConfig defaults = ParseServiceConfig("{}");
  EXPECT_EQ(defaults.size_limit, 2u * 1024 * 1024);
  EXPECT_EQ(defaults.source_priority, DefaultSourcePriority());
  EXPECT_THROW(ParseServiceConfig("{\"port\": \"x\"}"), Error);
  EXPECT_THROW(ParseServiceConfig("[1]"), Error);
  EXPECT_THROW(ParseServiceConfig("{"), Error);
}

TEST(ConfigTest, PathFromEnvironment) {
  EXPECT_EQ(ConfigPath("explicit.json"), "explicit.json");
  setenv("NNEXUS_CONFIG", "/etc/nnexus.json", 1);
  EXPECT_EQ(ConfigPath(""), "/etc/nnexus.json");
  EXPECT_EQ(ConfigPath("explicit.json"), "explicit.json");
  unsetenv("NNEXUS_CONFIG");
  EXPECT_FALSE(ConfigPath("").has_value());
}

class HttpServiceTest : public ServiceTest {
 protected:
  void SetUp() override {
    ServiceTest::SetUp();
    ServiceConfig config;
    config.port = 0;
    config.size_limit = 1024;
    service_ = std::make_unique<AnnotationService>(engine_, config);
    port_ = service_->Start();
    ASSERT_GT(port_, 0);
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override { service_->Stop(); }

  std::unique_ptr<AnnotationService> service_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = -1;
};

TEST_F(HttpServiceTest, RoundTripsOverHttp) {
  auto res = client_->Post("/annotate?format=embed", "Let $G$ be a group", "text/html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  Json j = Json::parse(res->body);
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(testing::CountOccurrences(j["payload"].get<std::string>(), "<a "), 1u);

  res = client_->Post("/annotate?format=xml", "group", "text/html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = client_->Get("/status");
  ASSERT_TRUE(res);
  EXPECT_EQ(Json::parse(res->body)["concepts"], 5);
}

TEST_F(HttpServiceTest, OversizedBodiesAreRefused) {
  auto res = client_->Post("/annotate", std::string(1025, 'a'), "text/html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 413);
  EXPECT_EQ(Json::parse(res->body)["status"], "error");
  res = client_->Post("/annotate", std::string(5000, 'a'), "text/html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 413);
  EXPECT_EQ(Json::parse(res->body)["status"], "error");
}

TEST_F(HttpServiceTest, UnknownRoutesGetJsonErrors) {
  auto res = client_->Get("/nowhere");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(Json::parse(res->body)["status"], "error");
}

}  // namespace
}  // namespace nnexus
