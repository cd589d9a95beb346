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

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"
#include "r3/core/corpus.hpp"
#include "r3/core/json_io.hpp"
#include "r3/core/plan.hpp"
#include "test_support.hpp"

namespace {

using r3::testing::fixture;

r3::Recipe load(const std::string& rel) { return r3::parse_recipe(r3::text::read_file(fixture(rel))); }

TEST(Plan, CrackThenWhiskIsTwoSteps) {
  const auto plan = r3::export_plan(load("recipes/whisked_eggs.json"));
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.steps[0].action, "crack");
  EXPECT_EQ(plan.steps[1].action, "whisk");
  EXPECT_EQ(plan.steps[1].index, 1u);
  EXPECT_EQ(plan.steps[0].parameters, std::vector<std::string>{"egg"});
  EXPECT_EQ(plan.steps[0].preconditions, std::vector<std::string>{"whole(egg)"});
  EXPECT_EQ(plan.steps[1].effects, std::vector<std::string>{"beaten(egg)"});
}

TEST(Plan, StepCountEqualsTaskCountOverCorpus) {
  const auto corpus = r3::Corpus::load(r3::testing::corpus_dir());
  for (const auto& r : corpus.recipes()) {
    EXPECT_EQ(r3::export_plan(r).steps.size(), r.task_count()) << r.id;
    EXPECT_EQ(r3::step_count(r, r3::StepUnit::kTask), r.task_count());
    EXPECT_EQ(r3::step_count(r, r3::StepUnit::kInstruction), r.instructions.size());
  }
}

TEST(Plan, FormatParseRoundTrip) {
  const auto plan = r3::export_plan(load("recipes/cheese_omelette.json"));
  ASSERT_EQ(plan.steps.size(), 8u);
  const auto text = r3::format_plan(plan);
  EXPECT_EQ(r3::parse_plan(text), plan);
  EXPECT_EQ(r3::format_plan(r3::parse_plan(text)), text);
}

TEST(Plan, QuotedAtomsSurvive) {
  r3::PlanTrace plan;
  plan.steps.push_back({0, "pour", {"chicken broth", "a \"quoted\" \\ thing"}, {"hot(pan)"}, {"line\nbreak", ""}});
  plan.steps.push_back({1, "rest", {}, {}, {}});
  EXPECT_EQ(r3::parse_plan(r3::format_plan(plan)), plan);
}

TEST(Plan, InvalidRecipeIsRejected) {
  auto r = load("recipes/whisked_eggs.json");
  r.instructions[0].tasks[0].objects[0].name = "milk";
  try {
    r3::export_plan(r);
    FAIL();
  } catch (const r3::Error& e) {
    EXPECT_EQ(e.code(), r3::ErrorCode::kValidation);
    EXPECT_NE(e.detail().find("UNDECLARED_INGREDIENT"), std::string::npos);
  }
}

TEST(Plan, MalformedTextIsParseError) {
  for (const char* bad : {"0 (crack egg)", "x: (crack)", "0: (crack \"egg) pre {} eff {}", "0: crack"}) {
    try {
      r3::parse_plan(bad);
      ADD_FAILURE() << bad;
    } catch (const r3::Error& e) {
      EXPECT_EQ(e.code(), r3::ErrorCode::kParse) << bad;
    }
  }
  EXPECT_TRUE(r3::parse_plan("").steps.empty());
}

}  // namespace
