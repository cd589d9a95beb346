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

#include "r3/ingest/segment.hpp"

#include <algorithm>
#include <regex>

#include "r3/common/text.hpp"

namespace r3::ingest {

namespace {

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || u >= 0x80 || c == '\'';
}

std::string next_word(std::string_view s, std::size_t from) {
  while (from < s.size() && !is_word_char(s[from])) ++from;
  std::size_t end = from;
  while (end < s.size() && is_word_char(s[end])) ++end;
  return text::casefold(s.substr(from, end - from));
}

std::string lemma_in(const std::string& token, const std::set<std::string>& verbs) {
  if (verbs.contains(token)) return token;
  static constexpr std::string_view kSuffixes[] = {"ing", "ed", "es", "s", "d"};
  for (auto suffix : kSuffixes) {
    if (token.size() <= suffix.size() + 1 || !token.ends_with(suffix)) continue;
    std::string stem = token.substr(0, token.size() - suffix.size());
    if (verbs.contains(stem)) return stem;
    if (suffix == "ing" || suffix == "ed") {
      if (verbs.contains(stem + "e")) return stem + "e";
      if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2] && verbs.contains(stem.substr(0, stem.size() - 1))) {
        return stem.substr(0, stem.size() - 1);
      }
    }
  }
  return {};
}

struct Hit {
  std::size_t pos;
  std::size_t len;
  std::string name;
};

std::vector<TaskObject> find_objects(std::string_view fragment, std::span<const std::string> names) {
  const std::string hay = text::casefold(fragment);
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<Hit> hits;
  std::vector<bool> covered(hay.size(), false);
  for (const auto& name : sorted) {
    if (name.empty()) continue;
    for (auto pos = hay.find(name); pos != std::string::npos; pos = hay.find(name, pos + 1)) {
      const bool free = std::none_of(covered.begin() + static_cast<std::ptrdiff_t>(pos),
                                     covered.begin() + static_cast<std::ptrdiff_t>(pos + name.size()),
                                     [](bool b) { return b; });
      const bool whole_word = (pos == 0 || !is_word_char(hay[pos - 1])) &&
                              (pos + name.size() == hay.size() || !is_word_char(hay[pos + name.size()]));
      if (!free || !whole_word) continue;
      std::fill(covered.begin() + static_cast<std::ptrdiff_t>(pos),
                covered.begin() + static_cast<std::ptrdiff_t>(pos + name.size()), true);
      hits.push_back(Hit{pos, name.size(), name});
      break;
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.pos < b.pos; });
  std::vector<TaskObject> objects;
  for (const auto& h : hits) {
    const auto with = hay.rfind("with ", h.pos);
    const bool after_with = with != std::string::npos && with + 5 <= h.pos &&
                            (with == 0 || !is_word_char(hay[with - 1])) &&
                            hay.find_first_of(",.;", with) > h.pos;
    objects.push_back(TaskObject{std::string(after_with ? role::kWith : role::kObject), h.name});
  }
  return objects;
}

}  // namespace

std::vector<Fragment> split_fragments(std::string_view paragraph, const std::set<std::string>& verbs) {
  static const std::regex delimiter(R"((?:[.!?]+(?:\s+|$))|(?:\s*;\s*)|(?:,?\s+(?:and\s+then|then|and)\s+))",
                                    std::regex::icase);
  std::vector<Fragment> out;
  const std::string p(paragraph);
  std::size_t start = 0;
  std::size_t pending_from = 0;  // start of text not yet assigned to a fragment
  for (std::sregex_iterator it(p.begin(), p.end(), delimiter), end; it != end; ++it) {
    const auto& m = *it;
    const auto mpos = static_cast<std::size_t>(m.position(0));
    const auto mlen = static_cast<std::size_t>(m.length(0));
    if (mpos < start) continue;
    const std::string lowered = text::casefold(m.str(0));
    const bool bare_and = lowered.find("then") == std::string::npos && lowered.find("and") != std::string::npos &&
                          lowered.find_first_of(".!?;") == std::string::npos;
    if (bare_and && !lemma_in(next_word(p, mpos + mlen), verbs).size()) continue;
    out.push_back(Fragment{p.substr(pending_from, mpos - pending_from), m.str(0)});
    pending_from = mpos + mlen;
    start = pending_from;
  }
  if (pending_from < p.size()) out.push_back(Fragment{p.substr(pending_from), ""});
  // Leading or doubled delimiters produce empty fragments; fold their
  // delimiter into the previous fragment so reconstruction stays exact.
  std::vector<Fragment> merged;
  std::string carry;
  for (auto& f : out) {
    if (text::normalize_space(f.text).empty()) {
      if (!merged.empty()) {
        merged.back().delimiter += f.text + f.delimiter;
      } else {
        carry += f.text + f.delimiter;
      }
      continue;
    }
    f.text = carry + f.text;
    carry.clear();
    merged.push_back(std::move(f));
  }
  if (!carry.empty()) merged.push_back(Fragment{"", carry});
  return merged;
}

std::string find_verb(std::string_view fragment, const std::set<std::string>& verbs) {
  for (const auto& token : text::tokenize(fragment)) {
    auto verb = lemma_in(token, verbs);
    if (!verb.empty()) return verb;
  }
  return {};
}

SegmentResult segment_instructions(std::span<const std::string> paragraphs, const std::set<std::string>& verbs,
                                   std::span<const std::string> ingredient_names) {
  SegmentResult result;
  std::vector<TaskObject> previous;
  for (const auto& paragraph : paragraphs) {
    if (text::normalize_space(paragraph).empty()) continue;
    Instruction ins;
    ins.original_text = paragraph;
    const std::string ipath = "instructions[" + std::to_string(result.instructions.size()) + "]";
    for (const auto& fragment : split_fragments(paragraph, verbs)) {
      if (text::normalize_space(fragment.text).empty()) continue;
      Task task;
      const std::string tpath = ipath + ".tasks[" + std::to_string(ins.tasks.size()) + "]";
      task.action = find_verb(fragment.text, verbs);
      if (task.action.empty()) {
        task.action = kUnknownAction;
        result.unresolved.push_back({tpath + ".action", "no lexicon verb in '" + text::normalize_space(fragment.text) + "'"});
      }
      task.objects = find_objects(fragment.text, ingredient_names);
      if (task.objects.empty()) task.objects = previous;
      if (task.objects.empty()) {
        task.objects.push_back(TaskObject{std::string(role::kObject), std::string(kUnresolvedObject)});
        result.unresolved.push_back({tpath + ".objects", "no ingredient named in '" + text::normalize_space(fragment.text) + "'"});
      } else {
        previous = task.objects;
      }
      ins.tasks.push_back(std::move(task));
    }
    if (ins.tasks.empty()) {
      Task task;
      task.action = kUnknownAction;
      task.objects.push_back(TaskObject{std::string(role::kObject), std::string(kUnresolvedObject)});
      result.unresolved.push_back({ipath + ".tasks[0]", "paragraph has no actionable text"});
      ins.tasks.push_back(std::move(task));
    }
    result.instructions.push_back(std::move(ins));
  }
  return result;
}

}  // namespace r3::ingest
