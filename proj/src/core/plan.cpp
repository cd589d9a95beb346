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

#include "r3/core/plan.hpp"

#include <sstream>

#include "r3/common/error.hpp"

namespace r3 {

namespace {

bool is_bare(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

std::string atom(std::string_view s) {
  if (is_bare(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string atom_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += atom(items[i]);
  }
  return out + "}";
}

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "plan line " + std::to_string(line_no_) + ": " + what,
                "column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool at(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }

  std::size_t number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected step index");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  std::string atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("expected atom");
    if (s_[pos_] != '"') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_bare(s_.substr(pos_, 1))) ++pos_;
      if (start == pos_) fail("expected atom");
      return std::string(s_.substr(start, pos_ - start));
    }
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c == '\\') {
        if (pos_ >= s_.size()) fail("dangling escape");
        c = s_[pos_++];
        if (c == 'n') c = '\n';
      }
      out.push_back(c);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::vector<std::string> atom_set() {
    expect('{');
    std::vector<std::string> out;
    if (at('}')) {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(atom());
      if (at(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

}  // namespace

PlanTrace export_plan(const Recipe& recipe, const ValidationContext& context) {
  const auto violations = validate_recipe(recipe, context);
  if (!violations.empty()) {
    throw Error(ErrorCode::kValidation, "cannot export plan for invalid recipe '" + recipe.id + "'",
                std::string(to_string(violations.front().code)) + " at " + violations.front().path);
  }
  PlanTrace plan;
  for (const auto& ins : recipe.instructions) {
    for (const auto& task : ins.tasks) {
      PlanStep step;
      step.index = plan.steps.size();
      step.action = task.action;
      for (const auto& o : task.objects) step.parameters.push_back(o.name);
      step.preconditions = ins.input_condition;
      step.effects = ins.output_condition;
      plan.steps.push_back(std::move(step));
    }
  }
  return plan;
}

std::string format_plan(const PlanTrace& plan) {
  std::string out;
  for (const auto& step : plan.steps) {
    out += std::to_string(step.index) + ": (" + atom(step.action);
    for (const auto& p : step.parameters) out += " " + atom(p);
    out += ") ; pre=" + atom_list(step.preconditions) + " post=" + atom_list(step.effects) + "\n";
  }
  return out;
}

PlanTrace parse_plan(std::string_view text) {
  PlanTrace plan;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(' ') == std::string_view::npos || line.front() == ';') continue;

    LineReader r(line, line_no);
    PlanStep step;
    step.index = r.number();
    r.expect(':');
    r.expect('(');
    step.action = r.atom();
    while (!r.at(')')) step.parameters.push_back(r.atom());
    r.expect(')');
    r.expect(';');
    r.expect_word("pre=");
    step.preconditions = r.atom_set();
    r.expect_word("post=");
    step.effects = r.atom_set();
    if (!r.done()) r.fail("trailing characters");
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

}  // namespace r3
