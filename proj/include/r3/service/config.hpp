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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "r3/core/recipe.hpp"

namespace r3::service {

inline constexpr std::int64_t kDefaultMaxUploadBytes = 8 * 1024 * 1024;

struct BindAddress {
  std::string host;
  int port = 0;
};

// Splits "host:port"; throws Error{kInvalidArgument}.
BindAddress parse_bind_address(std::string_view text);

struct ServiceConfig {
  std::filesystem::path corpus_path{"corpus"};
  std::string bind_address{"127.0.0.1:8080"};
  double default_threshold = 0.7;
  StepUnit step_unit = StepUnit::kTask;
  std::int64_t max_upload_bytes = kDefaultMaxUploadBytes;

  // Keys: corpus_path, bind_address, default_threshold, step_unit,
  // max_upload_bytes. All optional; unknown keys are rejected.
  static ServiceConfig from_json(const nlohmann::json& doc);
  static ServiceConfig load(const std::filesystem::path& path);

  using EnvLookup = std::function<std::optional<std::string>(const char*)>;
  // R3_CORPUS, R3_BIND and R3_THRESHOLD win over file values.
  void apply_env(const EnvLookup& getenv);
  void apply_process_env();

  // Throws Error{kInvalidArgument} unless threshold is in (0,1],
  // max_upload_bytes > 0 and the bind address parses.
  void validate() const;
};

nlohmann::json config_to_json(const ServiceConfig& config);

}  // namespace r3::service
