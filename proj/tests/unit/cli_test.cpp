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

#include "r3/cli/cli.hpp"
#include "r3/common/text.hpp"
#include "r3/core/json_io.hpp"
#include "r3/eval/ground_truth.hpp"
#include "test_support.hpp"

namespace {

using nlohmann::json;
using r3::testing::corpus_dir;
using r3::testing::fixture;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = r3::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string& corpus() {
  static const std::string c = corpus_dir().string();
  return c;
}

TEST(Cli, ValidateCorpus) {
  const auto r = cli({"validate", corpus()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ok: 13 recipes valid\n");
  const auto j = json::parse(cli({"validate", corpus(), "--json"}).out);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["recipes"], 13);
}

TEST(Cli, ValidateSingleFiles) {
  EXPECT_EQ(cli({"validate", (corpus_dir() / "recipes" / "shakshuka.json").string()}).code, 0);
  EXPECT_EQ(cli({"validate", fixture("recipes/cheese_omelette.json").string()}).code, 0);
  const auto bad = cli({"validate", fixture("corpora/noodles").string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("UNDECLARED_INGREDIENT"), std::string::npos);
  EXPECT_NE(bad.err.find("noodles"), std::string::npos);
  const auto broken = cli({"validate", fixture("corpora/broken").string(), "--json"});
  EXPECT_EQ(broken.code, 1);
  EXPECT_EQ(json::parse(broken.out)["issues"].size(), 4u);
}

TEST(Cli, UsageErrors) {
  auto r = cli({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("validate"), std::string::npos);  // usage lists subcommands
  r = cli({});
  EXPECT_EQ(r.code, 2);
  r = cli({"query", "--corpus", corpus(), "--threshold", "3"});
  EXPECT_EQ(r.code, 2);
  r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("export-plan"), std::string::npos);
}

TEST(Cli, MaizeQueryEqualsTruth) {
  const auto r = cli({"query", "--corpus", corpus(), "--text", "without maize allergen", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  std::set<std::string> got;
  for (const auto& m : j["matches"]) got.insert(m["id"].get<std::string>());
  const auto truth = r3::eval::GroundTruth::load(corpus_dir() / "truth" / "ground_truth.json");
  EXPECT_EQ(got, truth.at("AllergenExcludeExplicit:maize"));
}

TEST(Cli, HumanQueryOutput) {
  const auto r = cli({"query", "--corpus", corpus(), "--text", "recipes with bacon"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("query: IngredientInclude:bacon"), std::string::npos);
  EXPECT_NE(r.out.find("3 match(es)"), std::string::npos);
  EXPECT_NE(r.out.find("1.0000  bacon-cheddar-quiche  Bacon Cheddar Quiche"), std::string::npos);
}

TEST(Cli, QueryDomainErrors) {
  auto r = cli({"query", "--corpus", corpus(), "--text", "tell me a joke"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NO_TEMPLATE"), std::string::npos);
  r = cli({"query", "--corpus", corpus(), "--structured", R"({"kind": "Nope"})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("UNKNOWN_KIND"), std::string::npos);
  r = cli({"query", "--corpus", corpus(), "--image", fixture("images/not_an_image.png").string()});
  EXPECT_EQ(r.code, 1);
  r = cli({"query", "--corpus", fixture("corpora/missing").string(), "--text", "with egg"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, StructuredQueryAndStepUnit) {
  const auto by_task = cli({"query", "--corpus", corpus(), "--structured",
                            R"({"kind": "LengthAtMost", "numeric_param": 4})", "--json"});
  ASSERT_EQ(by_task.code, 0) << by_task.err;
  EXPECT_EQ(json::parse(by_task.out)["count"], 0);
  const auto by_ins = cli({"query", "--corpus", corpus(), "--structured",
                           R"({"kind": "LengthAtMost", "numeric_param": 4})", "--step-unit", "instruction", "--json"});
  ASSERT_EQ(by_ins.code, 0) << by_ins.err;
  EXPECT_EQ(json::parse(by_ins.out)["count"], 6);
}

TEST(Cli, AllergenLookup) {
  auto r = cli({"allergen", "cornstarch"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exact:"), std::string::npos);
  EXPECT_NE(r.out.find("9 maize"), std::string::npos);
  r = cli({"allergen", "egg yolk", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["inferred"][0]["category"], "egg");
  r = cli({"allergen", "zzxqv"});
  EXPECT_NE(r.out.find("OUT_OF_VOCABULARY"), std::string::npos);
}

TEST(Cli, IngestWritesUniqueDrafts) {
  r3::testing::TempDir dir;
  const auto out_dir = (dir.path() / "drafts").string();
  auto r = cli({"ingest", fixture("raw/meringue.json").string(), "--out", out_dir});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("meringues.json"), std::string::npos);
  EXPECT_NE(r.out.find("unresolved"), std::string::npos);
  r = cli({"ingest", fixture("raw/meringue.json").string(), "--out", out_dir, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["draft"]["id"], "meringues-2");
  const auto draft = r3::parse_recipe(r3::text::read_file(dir.path() / "drafts" / "meringues-2.json"));
  EXPECT_EQ(draft.name, "Meringues");
  r = cli({"ingest", fixture("raw/no_steps.json").string(), "--out", out_dir});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ExportPlan) {
  auto r = cli({"export-plan", fixture("recipes/whisked_eggs.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 10), "0: (crack ");
  r = cli({"export-plan", corpus(), "--id", "tamagoyaki", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["steps"].size(), 7u);
  EXPECT_EQ(cli({"export-plan", corpus()}).code, 2);
  EXPECT_EQ(cli({"export-plan", corpus(), "--id", "nope"}).code, 1);
  r3::testing::TempDir dir;
  r = cli({"export-plan", corpus(), "--id", "french-toast", "--out", (dir.path() / "p.txt").string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "wrote 6 steps to " + (dir.path() / "p.txt").string() + "\n");
}

TEST(Cli, FmtCheck) {
  r3::testing::TempDir dir;
  const auto canonical = (corpus_dir() / "recipes" / "shakshuka.json").string();
  EXPECT_EQ(cli({"fmt", "--check", canonical}).code, 0);
  auto doc = json::parse(r3::text::read_file(canonical));
  const auto messy = dir.write("messy.json", doc.dump());
  auto r = cli({"fmt", "--check", messy.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not canonical"), std::string::npos);
  EXPECT_EQ(cli({"fmt", messy.string()}).code, 0);
  EXPECT_EQ(r3::text::read_file(messy), r3::text::read_file(canonical));
  EXPECT_EQ(cli({"fmt", "--check", messy.string()}).code, 0);
}

TEST(Cli, EvalReport) {
  r3::testing::TempDir dir;
  const auto report = (dir.path() / "report.json").string();
  auto r = cli({"eval", "--corpus", corpus(), "--seed", "1", "--queries", "50", "--report", report});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Representation comparison"), std::string::npos);
  const auto j = json::parse(r3::text::read_file(report));
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["generated"], 50);
  EXPECT_TRUE(j["reports"].contains("proposed"));
  EXPECT_TRUE(j["reports"].contains("baseline"));
  r = cli({"eval", "--corpus", corpus(), "--queries", "500", "--retriever", "proposed", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto big = json::parse(r.out);
  EXPECT_EQ(big["generated"], 189);
  EXPECT_EQ(big["warnings"].size(), 1u);
  EXPECT_TRUE(big["reports"]["baseline"].is_null() || !big["reports"].contains("baseline"));
}

}  // namespace
