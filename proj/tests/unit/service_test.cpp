// Copyright 2026 The R3 Authors
// SPDX-License-Identifier: Apache-2.0
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

#include <gtest/gtest.h>

#include <sstream>
#include <thread>

#include "httplib.h"
#include "r3/cli/cli.hpp"
#include "r3/common/error.hpp"
#include "r3/common/text.hpp"
#include "r3/service/api.hpp"
#include "r3/service/config.hpp"
#include "r3/service/server.hpp"
#include "test_support.hpp"

namespace {

using namespace r3::service;
using nlohmann::json;
using r3::testing::corpus_dir;
using r3::testing::fixture;

ServiceConfig test_config(const std::filesystem::path& corpus = corpus_dir()) {
  ServiceConfig c;
  c.corpus_path = corpus;
  c.bind_address = "127.0.0.1:0";
  return c;
}

std::vector<std::string> match_ids(const json& body) {
  std::vector<std::string> out;
  for (const auto& m : body.at("matches")) out.push_back(m.at("id").get<std::string>());
  return out;
}

std::string cli_stdout(const std::vector<std::string>& args, int expected_exit = 0) {
  std::ostringstream out, err;
  const int code = r3::cli::run_cli(args, out, err);
  EXPECT_EQ(code, expected_exit) << err.str();
  return out.str();
}

// ---- configuration ----

TEST(Config, Defaults) {
  const ServiceConfig c;
  EXPECT_EQ(c.bind_address, "127.0.0.1:8080");
  EXPECT_EQ(c.default_threshold, 0.7);
  EXPECT_EQ(c.step_unit, r3::StepUnit::kTask);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, FromJsonAndErrors) {
  const auto c = ServiceConfig::from_json(
      {{"corpus_path", "/data/c"}, {"bind_address", "0.0.0.0:9000"}, {"default_threshold", 0.8},
       {"step_unit", "instruction"}, {"max_upload_bytes", 1024}});
  EXPECT_EQ(c.corpus_path, "/data/c");
  EXPECT_EQ(c.step_unit, r3::StepUnit::kInstruction);
  EXPECT_EQ(c.max_upload_bytes, 1024);
  EXPECT_EQ(ServiceConfig::from_json(config_to_json(c)).bind_address, "0.0.0.0:9000");
  EXPECT_THROW(ServiceConfig::from_json({{"colour", "blue"}}), r3::Error);
  EXPECT_THROW(ServiceConfig::from_json({{"step_unit", "paragraph"}}), r3::Error);
  EXPECT_THROW(ServiceConfig::from_json({{"default_threshold", "high"}}), r3::Error);
  EXPECT_THROW(ServiceConfig::load("/nonexistent/r3.json"), r3::Error);
}

TEST(Config, EnvironmentOverrides) {
  ServiceConfig c;
  c.apply_env([](const char* name) -> std::optional<std::string> {
    if (std::string(name) == "R3_CORPUS") return "/env/corpus";
    if (std::string(name) == "R3_THRESHOLD") return "0.9";
    return std::nullopt;
  });
  EXPECT_EQ(c.corpus_path, "/env/corpus");
  EXPECT_EQ(c.default_threshold, 0.9);
  EXPECT_EQ(c.bind_address, "127.0.0.1:8080");
  ServiceConfig bad;
  EXPECT_THROW(bad.apply_env([](const char* name) -> std::optional<std::string> {
    return std::string(name) == "R3_THRESHOLD" ? std::optional<std::string>("lots") : std::nullopt;
  }), r3::Error);
}

TEST(Config, Validation) {
  auto expect_invalid = [](ServiceConfig c) { EXPECT_THROW(c.validate(), r3::Error); };
  ServiceConfig c;
  c.default_threshold = 0.0;
  expect_invalid(c);
  c = {};
  c.default_threshold = 1.2;
  expect_invalid(c);
  c = {};
  c.max_upload_bytes = 0;
  expect_invalid(c);
  c = {};
  c.bind_address = "localhost";
  expect_invalid(c);
  EXPECT_EQ(parse_bind_address("127.0.0.1:0").port, 0);
  EXPECT_EQ(parse_bind_address("example.org:8443").host, "example.org");
  EXPECT_THROW(parse_bind_address("host:70000"), r3::Error);
  EXPECT_THROW(parse_bind_address(":80"), r3::Error);
}

// ---- handlers without HTTP ----

TEST(Api, HealthAndRecipes) {
  Api api(test_config());
  auto h = json::parse(api.health().body);
  EXPECT_EQ(h["status"], "ok");
  EXPECT_EQ(h["corpus_size"], 13);
  const auto list = json::parse(api.list_recipes().body);
  EXPECT_EQ(list["count"], 13);
  const auto& card = list["recipes"][0];
  for (const char* key : {"id", "name", "cuisine", "image_ref", "allergens", "ingredients", "step_count",
                          "total_time", "servings"}) {
    EXPECT_TRUE(card.contains(key)) << key;
  }
  const auto one = api.get_recipe("shakshuka");
  EXPECT_EQ(one.status, 200);
  EXPECT_EQ(one.body, r3::text::read_file(corpus_dir() / "recipes" / "shakshuka.json"));
  const auto missing = api.get_recipe("nope");
  EXPECT_EQ(missing.status, 404);
  const auto err = json::parse(missing.body);
  EXPECT_EQ(err["code"], "NOT_FOUND");
  EXPECT_TRUE(err.contains("message"));
  EXPECT_EQ(err["detail"], "nope");
}

TEST(Api, QueryErrorsMapToStatus) {
  Api api(test_config());
  EXPECT_EQ(api.query_json("{").status, 400);
  EXPECT_EQ(json::parse(api.query_json("{").body)["code"], "PARSE_ERROR");
  EXPECT_EQ(api.query_json(R"({"utterance": "tell me a joke"})").status, 400);
  EXPECT_EQ(json::parse(api.query_json(R"({"kind": "Bogus"})").body)["code"], "UNKNOWN_KIND");
  EXPECT_EQ(api.query_json(R"({"kind": "TimeAtMost", "numeric_param": -3})").status, 400);
  EXPECT_EQ(api.query_json("[]").status, 400);
  EXPECT_EQ(api.query_json(R"({"kind": "ImageDish", "image_ref": "media/none.png"})").status, 404);
  EXPECT_EQ(http_status(r3::ErrorCode::kUnsupported), 501);
  EXPECT_EQ(http_status(r3::ErrorCode::kIo), 500);
}

TEST(Api, StructuredAndImageRefQueries) {
  Api api(test_config());
  const auto by_ref = api.query_json(R"({"kind": "ImageIngredient", "image_ref": "media/ingredients/bacon.png"})");
  ASSERT_EQ(by_ref.status, 200) << by_ref.body;
  EXPECT_EQ(match_ids(json::parse(by_ref.body)),
            (std::vector<std::string>{"bacon-and-egg-fried-rice", "bacon-cheddar-quiche", "spaghetti-carbonara"}));
  const auto conj = json::parse(
      api.query_json(R"([{"kind": "IngredientInclude", "text_param": "bacon"}, {"kind": "TimeAtMost", "numeric_param": 30}])")
          .body);
  EXPECT_EQ(match_ids(conj), (std::vector<std::string>{"bacon-and-egg-fried-rice", "spaghetti-carbonara"}));
  EXPECT_EQ(conj["query"].size(), 2u);
}

TEST(Api, MultipartUploadLimits) {
  auto cfg = test_config();
  cfg.max_upload_bytes = 100;
  Api api(cfg);
  const UploadedImage big{r3::text::read_file(fixture("images/bacon.png")), "bacon.png"};
  const auto r = api.query_multipart(std::nullopt, big);
  EXPECT_EQ(r.status, 413);
  EXPECT_EQ(json::parse(r.body)["code"], "PAYLOAD_TOO_LARGE");
  const UploadedImage junk{"not an image at all", "x.png"};
  EXPECT_EQ(api.query_multipart(std::nullopt, junk).status, 400);
  EXPECT_EQ(api.query_multipart(std::nullopt, std::nullopt).status, 400);
}

TEST(Api, MediaTraversalGuard) {
  Api api(test_config());
  const auto ok = api.media("ingredients/bacon.png");
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(ok.content_type, "image/png");
  EXPECT_EQ(ok.body, r3::text::read_file(corpus_dir() / "media/ingredients/bacon.png"));
  for (const char* bad : {"../recipes/shakshuka.json", "ingredients/../../lexicon/verbs.txt", "/etc/passwd",
                          "..\\recipes", "", "ingredients/none.png", "ingredients"}) {
    EXPECT_EQ(api.media(bad).status, 404) << bad;
  }
}

TEST(Api, ReloadSwapsAndKeepsOldOnFailure) {
  r3::testing::TempDir dir;
  const auto root = dir.path() / "c";
  r3::testing::copy_corpus(root);
  Api api(test_config(root));
  const auto before = api.snapshot();
  std::filesystem::remove(root / "recipes" / "tamagoyaki.json");
  const auto ok = api.reload();
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(json::parse(ok.body)["corpus_size"], 12);
  EXPECT_EQ(before->size(), 13u);  // an in-flight snapshot is untouched
  EXPECT_EQ(api.snapshot()->size(), 12u);
  dir.write("c/recipes/broken.json", "{");
  const auto failed = api.reload();
  EXPECT_EQ(failed.status, 500);
  EXPECT_EQ(api.snapshot()->size(), 12u);
}

TEST(Api, ConstructionFailsOnBadCorpus) {
  EXPECT_THROW(Api(test_config(fixture("corpora/noodles"))), r3::CorpusError);
  auto cfg = test_config();
  cfg.default_threshold = 2.0;
  EXPECT_THROW(Api{cfg}, r3::Error);
}

TEST(Api, CliParityForUtterance) {
  Api api(test_config());
  const auto http = api.query_json(R"({"utterance": "Give me a recipe without maize allergen", "threshold": 0.7})");
  ASSERT_EQ(http.status, 200);
  const auto cli = cli_stdout({"query", "--corpus", corpus_dir().string(), "--text",
                               "Give me a recipe without maize allergen", "--json"});
  EXPECT_EQ(cli, http.body);
  EXPECT_EQ(json::parse(http.body)["count"], 10);
}

// ---- real HTTP ----

class HttpFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<Server>(test_config());
    port_ = server_->bind();
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    for (int i = 0; i < 200 && !server_->running(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) thread_.join();
  }

  std::unique_ptr<Server> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpFixture, HealthAndRecipes) {
  auto res = client_->Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, server_->api().health().body);
  res = client_->Get("/recipes/scotch-eggs");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->body, r3::text::read_file(corpus_dir() / "recipes" / "scotch-eggs.json"));
  res = client_->Get("/recipes/unknown-id");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["code"], "NOT_FOUND");
  res = client_->Get("/no/such/route");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(json::parse(res->body).contains("code"));
}

TEST_F(HttpFixture, JsonQueryMatchesApiBytes) {
  const std::string body = R"({"utterance": "without maize allergen"})";
  auto res = client_->Post("/query", body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(res->body, server_->api().query_json(body).body);
  res = client_->Post("/query", "{oops", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
}

TEST_F(HttpFixture, MultipartImageMatchesCli) {
  const auto bytes = r3::text::read_file(fixture("images/bacon.png"));
  httplib::MultipartFormDataItems items = {{"image", bytes, "bacon.png", "image/png"}};
  auto res = client_->Post("/query", items);
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const auto doc = json::parse(res->body);
  EXPECT_EQ(match_ids(doc),
            (std::vector<std::string>{"bacon-and-egg-fried-rice", "bacon-cheddar-quiche", "spaghetti-carbonara"}));
  const auto cli = cli_stdout({"query", "--corpus", corpus_dir().string(), "--image",
                               fixture("images/bacon.png").string(), "--json"});
  EXPECT_EQ(cli, res->body);

  httplib::MultipartFormDataItems with_text = {
      {"query", R"({"utterance": "recipes with bacon and in 30 minutes"})", "", "application/json"},
      {"image", bytes, "bacon.png", "image/png"}};
  res = client_->Post("/query", with_text);
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(match_ids(json::parse(res->body)),
            (std::vector<std::string>{"bacon-and-egg-fried-rice", "spaghetti-carbonara"}));
}

TEST_F(HttpFixture, MediaAndReload) {
  auto res = client_->Get("/media/dishes/shakshuka.png");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "image/png");
  res = client_->Get("/media/..%2Frecipes%2Fshakshuka.json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  res = client_->Post("/admin/reload", "", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["corpus_size"], 13);
}

TEST(Server, BindFailureIsIoError) {
  Server first(test_config());
  const int port = first.bind();
  auto cfg = test_config();
  cfg.bind_address = "127.0.0.1:" + std::to_string(port);
  Server second(cfg);
  try {
    second.bind();
    FAIL();
  } catch (const r3::Error& e) {
    EXPECT_EQ(e.code(), r3::ErrorCode::kIo);
  }
}

}  // namespace
