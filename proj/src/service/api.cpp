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

#include "r3/service/api.hpp"

#include <algorithm>
#include <set>
#include <span>

#include "r3/common/text.hpp"
#include "r3/core/json_io.hpp"
#include "r3/media/image.hpp"
#include "r3/query/text_query.hpp"

namespace r3::service {

using nlohmann::json;
using query::Query;
using query::QueryKind;

namespace {

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

Response json_response(int status, const json& body) { return Response{status, "application/json", dump(body)}; }

Response error_response(const Error& e) { return json_response(http_status(e.code()), error_to_json(e)); }

bool is_image_kind(QueryKind k) { return query::required_param(k) == query::Param::kImage; }

std::string content_type_for(const std::filesystem::path& p) {
  const std::string ext = text::casefold(p.extension().string());
  if (ext == ".png") return "image/png";
  if (ext == ".jpg" || ext == ".jpeg") return "image/jpeg";
  if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") return "image/x-portable-anymap";
  if (ext == ".json") return "application/json";
  return "application/octet-stream";
}

}  // namespace

json recipe_card(const Recipe& recipe, StepUnit unit) {
  std::set<std::string> allergens;
  json ingredients = json::array();
  for (const auto& ing : recipe.ingredients) {
    ingredients.push_back(ing.name);
    for (const auto& a : ing.allergens) allergens.insert(a.category);
  }
  const auto& dish = recipe.dish_images();
  json card = {{"id", recipe.id},
               {"name", recipe.name},
               {"cuisine", recipe.cuisine ? json(*recipe.cuisine) : json(nullptr)},
               {"image_ref", dish.empty() ? json(nullptr) : json(dish.front())},
               {"allergens", allergens},
               {"ingredients", std::move(ingredients)},
               {"step_count", step_count(recipe, unit)},
               {"total_time", recipe.total_time()},
               {"servings", recipe.servings}};
  return card;
}

json result_to_json(const query::RetrievalResult& result, const Corpus& corpus, StepUnit unit) {
  json matches = json::array();
  json cards = json::array();
  for (const auto& m : result.matches) {
    matches.push_back({{"id", m.id}, {"score", m.score}});
    if (const Recipe* r = corpus.find(m.id)) {
      json card = recipe_card(*r, unit);
      card["score"] = m.score;
      cards.push_back(std::move(card));
    }
  }
  json echo = json::array();
  for (const auto& q : result.query_echo) echo.push_back(query::query_to_json(q));
  return {{"count", result.matches.size()},
          {"matches", std::move(matches)},
          {"cards", std::move(cards)},
          {"query", std::move(echo)},
          {"notes", result.notes}};
}

json error_to_json(std::string_view code, std::string_view message, std::string_view detail) {
  return {{"code", code}, {"message", message}, {"detail", detail}};
}

json error_to_json(const Error& error) { return error_to_json(to_string(error.code()), error.what(), error.detail()); }

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidQuery:
    case ErrorCode::kUnknownKind:
    case ErrorCode::kNoTemplate:
    case ErrorCode::kImageDecode:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kUnsupported:
      return 501;
    default:
      return 500;
  }
}

std::vector<Query> build_queries(const std::optional<json>& body, const std::optional<UploadedImage>& image,
                                 double default_threshold, const Corpus* corpus, QueryKind image_kind) {
  std::vector<Query> queries;
  if (body && !body->is_null()) {
    if (body->is_object() && body->contains("utterance")) {
      const auto& u = (*body)["utterance"];
      if (!u.is_string()) throw Error(ErrorCode::kInvalidQuery, "utterance must be a string");
      double threshold = default_threshold;
      if (const auto it = body->find("threshold"); it != body->end() && !it->is_null()) {
        if (!it->is_number()) throw Error(ErrorCode::kInvalidQuery, "threshold must be a number");
        threshold = it->get<double>();
      }
      const std::string utterance = u.get<std::string>();
      if (!text::normalize_space(utterance).empty()) queries = query::parse_text_query(utterance, threshold);
    } else {
      queries = query::queries_from_json(*body, default_threshold);
    }
  }

  std::shared_ptr<const media::Image> uploaded;
  if (image) {
    const auto* data = reinterpret_cast<const std::uint8_t*>(image->bytes.data());
    uploaded = std::make_shared<const media::Image>(media::decode_image(std::span(data, image->bytes.size())));
  }

  bool bound = false;
  for (auto& q : queries) {
    if (!is_image_kind(q.kind) || q.image_param) continue;
    if (uploaded) {
      q.image_param = uploaded;
      if (!q.image_ref) q.image_ref = image->name;
      bound = true;
    } else if (q.image_ref && corpus != nullptr) {
      q.image_param = corpus->image_handle(*q.image_ref);
      if (!q.image_param) throw Error(ErrorCode::kNotFound, "image_ref is not a corpus media asset", *q.image_ref);
    }
  }
  if (uploaded && !bound) {
    double threshold = default_threshold;
    if (body && body->is_object() && body->contains("utterance")) {
      if (const auto it = body->find("threshold"); it != body->end() && it->is_number()) threshold = it->get<double>();
    }
    queries.push_back(Query::image(image_kind, uploaded, image->name, threshold));
  }
  if (queries.empty()) throw Error(ErrorCode::kInvalidQuery, "request carries no query");
  for (const auto& q : queries) query::validate_query(q);
  return queries;
}

Api::Api(ServiceConfig config) : config_(std::move(config)) {
  config_.validate();
  corpus_ = std::make_shared<const Corpus>(Corpus::load(config_.corpus_path));
}

std::shared_ptr<const Corpus> Api::snapshot() const {
  std::lock_guard lock(mu_);
  return corpus_;
}

Response Api::health() const {
  const auto corpus = snapshot();
  return json_response(200, {{"status", "ok"}, {"corpus_size", corpus->size()}});
}

Response Api::list_recipes() const {
  const auto corpus = snapshot();
  json cards = json::array();
  for (const auto& r : corpus->recipes()) cards.push_back(recipe_card(r, config_.step_unit));
  return json_response(200, {{"count", corpus->size()}, {"recipes", std::move(cards)}});
}

Response Api::get_recipe(const std::string& id) const {
  const auto corpus = snapshot();
  const Recipe* r = corpus->find(id);
  if (r == nullptr) return error_response(Error(ErrorCode::kNotFound, "no recipe with this id", id));
  return Response{200, "application/json", serialize_recipe(*r)};
}

Response Api::run(const std::optional<json>& body, const std::optional<UploadedImage>& image) const {
  const auto corpus = snapshot();
  try {
    const auto queries = build_queries(body, image, config_.default_threshold, corpus.get());
    query::ExecuteOptions options;
    options.step_unit = config_.step_unit;
    const auto result = query::execute(queries, *corpus, options);
    return json_response(200, result_to_json(result, *corpus, config_.step_unit));
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response Api::query_json(const std::string& body) const {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) return error_response(Error(ErrorCode::kParse, "request body is not valid JSON"));
  return run(doc, std::nullopt);
}

Response Api::query_multipart(const std::optional<std::string>& query_part,
                              const std::optional<UploadedImage>& image) const {
  if (image && static_cast<std::int64_t>(image->bytes.size()) > config_.max_upload_bytes) {
    return json_response(413, error_to_json("PAYLOAD_TOO_LARGE", "image exceeds max_upload_bytes",
                                            std::to_string(config_.max_upload_bytes)));
  }
  std::optional<json> body;
  if (query_part && !text::normalize_space(*query_part).empty()) {
    json doc = json::parse(*query_part, nullptr, false);
    if (doc.is_discarded()) return error_response(Error(ErrorCode::kParse, "query part is not valid JSON"));
    body = std::move(doc);
  }
  return run(body, image);
}

Response Api::reload() {
  try {
    auto fresh = std::make_shared<const Corpus>(Corpus::load(config_.corpus_path));
    const std::size_t n = fresh->size();
    {
      std::lock_guard lock(mu_);
      corpus_ = std::move(fresh);
    }
    return json_response(200, {{"status", "reloaded"}, {"corpus_size", n}});
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response Api::media(const std::string& relative_path) const {
  const auto corpus = snapshot();
  const std::filesystem::path rel(relative_path);
  bool bad = relative_path.empty() || rel.is_absolute() || relative_path.find('\\') != std::string::npos;
  for (const auto& part : rel) bad = bad || part == "..";
  if (bad || !corpus->root()) {
    return error_response(Error(ErrorCode::kNotFound, "no such media asset", relative_path));
  }
  std::error_code ec;
  const auto media_root = std::filesystem::weakly_canonical(*corpus->root() / "media", ec);
  const auto target = std::filesystem::weakly_canonical(media_root / rel, ec);
  const auto [root_end, _] = std::mismatch(media_root.begin(), media_root.end(), target.begin(), target.end());
  if (ec || root_end != media_root.end() || !std::filesystem::is_regular_file(target, ec)) {
    return error_response(Error(ErrorCode::kNotFound, "no such media asset", relative_path));
  }
  try {
    return Response{200, content_type_for(target), text::read_file(target)};
  } catch (const Error& e) {
    return error_response(e);
  }
}

}  // namespace r3::service
