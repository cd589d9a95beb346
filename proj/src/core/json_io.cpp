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

#include "r3/core/json_io.hpp"

#include <initializer_list>
#include <set>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3 {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, what + " at " + (path.empty() ? "<root>" : path), path);
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected object");
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) fail(child(path, key), "unknown field");
  }
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(child(path, key), "missing field");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected integer");
  return j.get<std::int64_t>();
}

std::optional<std::string> opt_string(const json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return as_string(*it, child(path, key));
}

template <typename Fn>
auto list_of(const json& obj, std::string_view key, const std::string& path, bool required, Fn&& element) {
  using T = decltype(element(json{}, std::string{}));
  std::vector<T> out;
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    if (required) fail(child(path, key), "missing field");
    return out;
  }
  const std::string p = child(path, key);
  if (!it->is_array()) fail(p, "expected array");
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(element((*it)[i], index(p, i)));
  return out;
}

std::vector<std::string> key_list(const json& obj, std::string_view key, const std::string& path) {
  return list_of(obj, key, path, false,
                 [](const json& j, const std::string& p) { return text::normalize_key(as_string(j, p)); });
}

std::vector<std::string> text_list(const json& obj, std::string_view key, const std::string& path) {
  return list_of(obj, key, path, false,
                 [](const json& j, const std::string& p) { return text::normalize_space(as_string(j, p)); });
}

std::optional<std::string> opt_key(const json& obj, std::string_view key, const std::string& path) {
  auto v = opt_string(obj, key, path);
  if (v) *v = text::normalize_key(*v);
  return v;
}

Rational parse_measure(const json& j, const std::string& path) {
  std::optional<Rational> r;
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<std::int64_t>());
  } else if (j.is_number_float()) {
    r = Rational::parse(j.dump());
  }
  if (!r) fail(path, "expected rational measure (\"2\", \"1/2\", 0.5)");
  return *r;
}

Quantity parse_quantity_field(const json& j, const std::string& path) {
  expect_object(j, path, {"measure", "unit"});
  Quantity q;
  q.measure = parse_measure(require(j, "measure", path), child(path, "measure"));
  const std::string unit = text::normalize_key(as_string(require(j, "unit", path), child(path, "unit")));
  q.unit = resolve_unit_alias(unit).value_or(unit);
  return q;
}

AllergenInfo parse_allergen(const json& j, const std::string& path) {
  expect_object(j, path, {"allergen_id", "category", "source_ref", "kg_ref"});
  AllergenInfo a;
  a.allergen_id = static_cast<int>(as_int(require(j, "allergen_id", path), child(path, "allergen_id")));
  a.category = text::normalize_key(as_string(require(j, "category", path), child(path, "category")));
  a.source_ref = opt_string(j, "source_ref", path).value_or("");
  a.kg_ref = opt_string(j, "kg_ref", path).value_or("");
  return a;
}

Ingredient parse_ingredient(const json& j, const std::string& path) {
  expect_object(j, path,
                {"name", "quantity", "allergens", "alternatives", "quality_characteristic", "image_ref"});
  Ingredient ing;
  ing.name = text::normalize_key(as_string(require(j, "name", path), child(path, "name")));
  ing.quantity = parse_quantity_field(require(j, "quantity", path), child(path, "quantity"));
  ing.allergens = list_of(j, "allergens", path, false, parse_allergen);
  ing.alternatives = key_list(j, "alternatives", path);
  ing.quality_characteristic = opt_key(j, "quality_characteristic", path);
  ing.image_ref = opt_string(j, "image_ref", path);
  return ing;
}

TaskObject parse_object(const json& j, const std::string& path) {
  expect_object(j, path, {"role", "name"});
  TaskObject o;
  o.role = text::normalize_key(as_string(require(j, "role", path), child(path, "role")));
  o.name = text::normalize_key(as_string(require(j, "name", path), child(path, "name")));
  return o;
}

Failure parse_failure(const json& j, const std::string& path) {
  expect_object(j, path, {"description", "workaround"});
  Failure f;
  f.description = text::normalize_space(as_string(require(j, "description", path), child(path, "description")));
  f.workaround = opt_string(j, "workaround", path);
  if (f.workaround) *f.workaround = text::normalize_space(*f.workaround);
  return f;
}

Task parse_task(const json& j, const std::string& path) {
  expect_object(j, path, {"action", "objects", "output_quality", "tools", "failures"});
  Task t;
  t.action = text::normalize_key(as_string(require(j, "action", path), child(path, "action")));
  t.objects = list_of(j, "objects", path, true, parse_object);
  t.output_quality = opt_key(j, "output_quality", path);
  t.tools = key_list(j, "tools", path);
  t.failures = list_of(j, "failures", path, false, parse_failure);
  return t;
}

Instruction parse_instruction(const json& j, const std::string& path) {
  expect_object(j, path, {"original_text", "input_condition", "output_condition", "tasks", "modality"});
  Instruction ins;
  ins.original_text = as_string(require(j, "original_text", path), child(path, "original_text"));
  ins.input_condition = text_list(j, "input_condition", path);
  ins.output_condition = text_list(j, "output_condition", path);
  ins.tasks = list_of(j, "tasks", path, true, parse_task);
  ins.modality = list_of(j, "modality", path, false,
                         [](const json& m, const std::string& p) { return as_string(m, p); });
  return ins;
}

json string_list(const std::vector<std::string>& v) { return json(v); }

}  // namespace

Recipe recipe_from_json(const json& doc) {
  const std::string root;
  expect_object(doc, root,
                {"r3_version", "id", "name", "cuisine", "prep_time", "cook_time", "servings", "ingredients",
                 "instructions"});
  const auto version = as_int(require(doc, "r3_version", root), "r3_version");
  if (version != kR3Version) fail("r3_version", "unsupported r3_version " + std::to_string(version));
  Recipe r;
  r.id = text::normalize_key(as_string(require(doc, "id", root), "id"));
  r.name = text::normalize_space(as_string(require(doc, "name", root), "name"));
  r.cuisine = opt_key(doc, "cuisine", root);
  r.prep_time = as_int(require(doc, "prep_time", root), "prep_time");
  r.cook_time = as_int(require(doc, "cook_time", root), "cook_time");
  r.servings = as_int(require(doc, "servings", root), "servings");
  r.ingredients = list_of(doc, "ingredients", root, true, parse_ingredient);
  r.instructions = list_of(doc, "instructions", root, true, parse_instruction);
  return r;
}

json recipe_to_json(const Recipe& r) {
  json doc = json::object();
  doc["r3_version"] = kR3Version;
  doc["id"] = r.id;
  doc["name"] = r.name;
  if (r.cuisine) doc["cuisine"] = *r.cuisine;
  doc["prep_time"] = r.prep_time;
  doc["cook_time"] = r.cook_time;
  doc["servings"] = r.servings;

  json ingredients = json::array();
  for (const auto& ing : r.ingredients) {
    json j = json::object();
    j["name"] = ing.name;
    j["quantity"] = {{"measure", ing.quantity.measure.to_string()}, {"unit", ing.quantity.unit}};
    json allergens = json::array();
    for (const auto& a : ing.allergens) {
      allergens.push_back(
          {{"allergen_id", a.allergen_id}, {"category", a.category}, {"source_ref", a.source_ref}, {"kg_ref", a.kg_ref}});
    }
    j["allergens"] = std::move(allergens);
    j["alternatives"] = string_list(ing.alternatives);
    if (ing.quality_characteristic) j["quality_characteristic"] = *ing.quality_characteristic;
    if (ing.image_ref) j["image_ref"] = *ing.image_ref;
    ingredients.push_back(std::move(j));
  }
  doc["ingredients"] = std::move(ingredients);

  json instructions = json::array();
  for (const auto& ins : r.instructions) {
    json j = json::object();
    j["original_text"] = ins.original_text;
    j["input_condition"] = string_list(ins.input_condition);
    j["output_condition"] = string_list(ins.output_condition);
    j["modality"] = string_list(ins.modality);
    json tasks = json::array();
    for (const auto& t : ins.tasks) {
      json tj = json::object();
      tj["action"] = t.action;
      json objects = json::array();
      for (const auto& o : t.objects) objects.push_back({{"role", o.role}, {"name", o.name}});
      tj["objects"] = std::move(objects);
      if (t.output_quality) tj["output_quality"] = *t.output_quality;
      tj["tools"] = string_list(t.tools);
      json failures = json::array();
      for (const auto& f : t.failures) {
        json fj = {{"description", f.description}};
        if (f.workaround) fj["workaround"] = *f.workaround;
        failures.push_back(std::move(fj));
      }
      tj["failures"] = std::move(failures);
      tasks.push_back(std::move(tj));
    }
    j["tasks"] = std::move(tasks);
    instructions.push_back(std::move(j));
  }
  doc["instructions"] = std::move(instructions);
  return doc;
}

Recipe parse_recipe(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what(), "<root>");
  }
  return recipe_from_json(doc);
}

std::string serialize_recipe(const Recipe& recipe) { return recipe_to_json(recipe).dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

}  // namespace r3
