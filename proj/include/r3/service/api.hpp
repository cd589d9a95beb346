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

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "r3/common/error.hpp"
#include "r3/core/corpus.hpp"
#include "r3/query/execute.hpp"
#include "r3/service/config.hpp"

namespace r3::service {

// Denormalized view of a recipe for result lists.
nlohmann::json recipe_card(const Recipe& recipe, StepUnit unit);

// {"count", "matches": [{id, score}], "cards": [...], "query": [...], "notes": [...]}.
// The CLI --json output and the HTTP response share this rendering.
nlohmann::json result_to_json(const query::RetrievalResult& result, const Corpus& corpus, StepUnit unit);

nlohmann::json error_to_json(std::string_view code, std::string_view message, std::string_view detail = {});
nlohmann::json error_to_json(const Error& error);

struct UploadedImage {
  std::string bytes;
  std::string name;  // echoed as the query's image_ref
};

/// Turns a request into a query conjunction. `body` may be a query object,
/// an array of them, or {"utterance": "...", "threshold": t}. Image kinds
/// without a payload are bound to `image`; an image with no image kind in
/// the body adds an ImageIngredient query. Image kinds that only carry an
/// image_ref are resolved against the corpus media. Throws
/// Error{kInvalidQuery} when nothing is left to execute.
std::vector<query::Query> build_queries(const std::optional<nlohmann::json>& body,
                                        const std::optional<UploadedImage>& image, double default_threshold,
                                        const Corpus* corpus = nullptr,
                                        query::QueryKind image_kind = query::QueryKind::kImageIngredient);

struct Response {
  int status = 200;
  std::string content_type{"application/json"};
  std::string body;
};

/// Request handlers over a swappable corpus snapshot, independent of the
/// HTTP transport. Every handler reads one snapshot for its whole run, so a
/// reload never changes the corpus under an in-flight request.
class Api {
 public:
  // Loads the corpus; throws when it fails to load.
  explicit Api(ServiceConfig config);

  Response health() const;
  Response list_recipes() const;
  Response get_recipe(const std::string& id) const;
  Response query_json(const std::string& body) const;
  Response query_multipart(const std::optional<std::string>& query_part,
                           const std::optional<UploadedImage>& image) const;
  Response reload();
  Response media(const std::string& relative_path) const;

  std::shared_ptr<const Corpus> snapshot() const;
  const ServiceConfig& config() const { return config_; }

 private:
  Response run(const std::optional<nlohmann::json>& body, const std::optional<UploadedImage>& image) const;

  ServiceConfig config_;
  mutable std::mutex mu_;
  std::shared_ptr<const Corpus> corpus_;
};

int http_status(ErrorCode code);

}  // namespace r3::service
