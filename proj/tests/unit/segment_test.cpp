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

#include <random>

#include "r3/core/corpus.hpp"
#include "r3/ingest/segment.hpp"
#include "fuzz_support.hpp"
#include "test_support.hpp"

namespace r3::ingest {
void PrintTo(const Unresolved& u, std::ostream* os) { *os << "{" << u.field_path << ", " << u.reason << "}"; }
}  // namespace r3::ingest

namespace {

using namespace r3::ingest;

const std::set<std::string>& verbs() {
  static const auto v = r3::load_verb_lexicon(r3::testing::corpus_dir() / "lexicon" / "verbs.txt");
  return v;
}

std::vector<std::string> actions(const std::string& paragraph) {
  const std::vector<std::string> ps{paragraph};
  const auto seg = segment_instructions(ps, verbs());
  std::vector<std::string> out;
  for (const auto& ins : seg.instructions) {
    for (const auto& t : ins.tasks) out.push_back(t.action);
  }
  return out;
}

struct Case {
  const char* paragraph;
  std::vector<std::string> actions;
};

// Expected splits derived by hand: sentence ends, semicolons and "then" always
// split; a bare "and" splits only when the next word is a lexicon verb.
const std::vector<Case>& cases() {
  static const std::vector<Case> kCases = {
      {"Crack the eggs into a bowl and whisk them.", {"crack", "whisk"}},
      {"Preheat the oven to 180 C.", {"preheat"}},
      {"Boil the pasta, then drain it.", {"boil", "drain"}},
      {"Chop the onion; dice the tomatoes.", {"chop", "dice"}},
      {"Salt and pepper the steak.", {"unknown"}},
      {"Melted butter goes in next.", {"melt"}},
      {"Stirring constantly, add the milk.", {"stir"}},
      {"Bake for 20 minutes! Serve warm.", {"bake", "serve"}},
      {"Whisk the eggs and milk together.", {"whisk"}},
      {"Heat the oil and then fry the bacon.", {"heat", "fry"}},
      {"Enjoy!", {"unknown"}},
      {"Dices the carrots.", {"dice"}},
      {"Place the pan in the oven. Roast until golden. Let it rest for 5 minutes.", {"place", "roast", "let"}},
      {"Mix well", {"mix"}},
      {"Add the flour, and stir until smooth.", {"add", "stir"}},
      {"Sift the flour and the sugar.", {"sift"}},
      {"Grate the cheese...Sprinkle it over the top.", {"grate"}},
      {"Toss the salad; season to taste; serve.", {"toss", "season", "serve"}},
      {"Poached eggs are best served immediately.", {"poach"}},
      {"Then simmer for ten minutes.", {"simmer"}},
  };
  return kCases;
}

TEST(Segment, OracleParagraphs) {
  ASSERT_EQ(cases().size(), 20u);
  for (const auto& c : cases()) EXPECT_EQ(actions(c.paragraph), c.actions) << c.paragraph;
}

std::string rebuild(const std::vector<Fragment>& fs) {
  std::string out;
  for (const auto& f : fs) out += f.text + f.delimiter;
  return out;
}

TEST(Segment, FragmentsConcatenateToParagraph) {
  for (const auto& c : cases()) EXPECT_EQ(rebuild(split_fragments(c.paragraph, verbs())), c.paragraph);
  for (const char* s : {"", ".", ";;", ". . .", "  and then  ", "Stir. ", "then stir", ", and whisk"}) {
    EXPECT_EQ(rebuild(split_fragments(s, verbs())), s) << '"' << s << '"';
  }
  r3::testing::RawRecipeFuzzer fuzz(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = fuzz.utf8_string(30);
    ASSERT_EQ(rebuild(split_fragments(s, verbs())), s);
  }
}

TEST(Segment, EmptyParagraphYieldsNothing) {
  EXPECT_TRUE(split_fragments("", verbs()).empty());
  const std::vector<std::string> ps{"", "   "};
  const auto seg = segment_instructions(ps, verbs());
  EXPECT_TRUE(seg.instructions.empty());
  EXPECT_TRUE(seg.unresolved.empty());
}

TEST(Segment, UnknownStepIsFlagged) {
  const std::vector<std::string> ps{"Enjoy!"};
  const auto seg = segment_instructions(ps, verbs());
  ASSERT_EQ(seg.instructions.size(), 1u);
  const auto& t = seg.instructions[0].tasks.at(0);
  EXPECT_EQ(t.action, kUnknownAction);
  ASSERT_EQ(t.objects.size(), 1u);
  EXPECT_EQ(t.objects[0].name, kUnresolvedObject);
  EXPECT_EQ(seg.unresolved,
            (std::vector<Unresolved>{{"instructions[0].tasks[0].action", "no lexicon verb in 'Enjoy'"},
                                     {"instructions[0].tasks[0].objects", "no ingredient named in 'Enjoy'"}}));
}

TEST(Segment, ObjectsPreferLongestNameAndMarkWith) {
  const std::vector<std::string> names{"egg", "milk", "egg yolk"};
  const std::vector<std::string> ps{"Whisk the egg yolk with the milk. Pour into the pan."};
  const auto seg = segment_instructions(ps, verbs(), names);
  ASSERT_EQ(seg.instructions.size(), 1u);
  const auto& tasks = seg.instructions[0].tasks;
  ASSERT_EQ(tasks.size(), 2u);
  EXPECT_EQ(tasks[0].objects,
            (std::vector<r3::TaskObject>{{"object", "egg yolk"}, {"with", "milk"}}));
  // No ingredient named in the second sentence: objects carry over.
  EXPECT_EQ(tasks[1].objects, tasks[0].objects);
  EXPECT_TRUE(seg.unresolved.empty());
}

TEST(Segment, ObjectsMatchWholeWordsOnly) {
  const std::vector<std::string> names{"egg", "eggplant"};
  const std::vector<std::string> ps{"Slice the eggplant."};
  const auto seg = segment_instructions(ps, verbs(), names);
  EXPECT_EQ(seg.instructions.at(0).tasks.at(0).objects, (std::vector<r3::TaskObject>{{"object", "eggplant"}}));
  const std::vector<std::string> only_egg{"egg"};
  const std::vector<std::string> ps2{"Slice the eggplant."};
  const auto seg2 = segment_instructions(ps2, verbs(), only_egg);
  EXPECT_EQ(seg2.instructions.at(0).tasks.at(0).objects[0].name, kUnresolvedObject);
}

TEST(Segment, FindVerbUsesLemmas) {
  EXPECT_EQ(find_verb("Chopped onions", verbs()), "chop");
  EXPECT_EQ(find_verb("whisking", verbs()), "whisk");
  EXPECT_EQ(find_verb("baked", verbs()), "bake");
  EXPECT_EQ(find_verb("serves four", verbs()), "serve");
  EXPECT_EQ(find_verb("nothing here", verbs()), "");
}

}  // namespace
