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

#include "r3/service/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::service {

BindAddress parse_bind_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bind address must be host:port", std::string(text));
  }
  BindAddress out;
  out.host = std::string(text.substr(0, colon));
  const auto port = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), out.port);
  if (ec != std::errc{} || ptr != port.data() + port.size() || out.port < 0 || out.port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "bad port in bind address", std::string(text));
  }
  return out;
}

ServiceConfig ServiceConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "service config must be an object");
  ServiceConfig c;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "corpus_path") {
        c.corpus_path = value.get<std::string>();
      } else if (key == "bind_address") {
        c.bind_address = value.get<std::string>();
      } else if (key == "default_threshold") {
        c.default_threshold = value.get<double>();
      } else if (key == "step_unit") {
        const auto unit = parse_step_unit(value.get<std::string>());
        if (!unit) throw Error(ErrorCode::kParse, "step_unit must be task or instruction", value.dump());
        c.step_unit = *unit;
      } else if (key == "max_upload_bytes") {
        c.max_upload_bytes = value.get<std::int64_t>();
      } else {
        throw Error(ErrorCode::kParse, "unknown service config key", key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed service config", e.what());
  }
  return c;
}

ServiceConfig ServiceConfig::load(const std::filesystem::path& path) {
  const std::string text = text::read_file(path);
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kParse, "service config is not valid JSON", path.string());
  return from_json(doc);
}

void ServiceConfig::apply_env(const EnvLookup& getenv) {
  if (auto v = getenv("R3_CORPUS")) corpus_path = *v;
  if (auto v = getenv("R3_BIND")) bind_address = *v;
  if (auto v = getenv("R3_THRESHOLD")) {
    char* end = nullptr;
    const double t = std::strtod(v->c_str(), &end);
    if (v->empty() || end != v->c_str() + v->size()) {
      throw Error(ErrorCode::kInvalidArgument, "R3_THRESHOLD is not a number", *v);
    }
    default_threshold = t;
  }
}

void ServiceConfig::apply_process_env() {
  apply_env([](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  });
}

void ServiceConfig::validate() const {
  if (!std::isfinite(default_threshold) || default_threshold <= 0.0 || default_threshold > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "default_threshold must lie in (0, 1]",
                std::to_string(default_threshold));
  }
  if (max_upload_bytes <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_upload_bytes must be positive", std::to_string(max_upload_bytes));
  }
  parse_bind_address(bind_address);
}

nlohmann::json config_to_json(const ServiceConfig& config) {
  return {{"corpus_path", config.corpus_path.string()},
          {"bind_address", config.bind_address},
          {"default_threshold", config.default_threshold},
          {"step_unit", std::string(to_string(config.step_unit))},
          {"max_upload_bytes", config.max_upload_bytes}};
}

}  // namespace r3::service
