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

#include <stdexcept>
#include <string>
#include <string_view>

namespace r3 {

enum class ErrorCode {
  kIo,
  kParse,
  kValidation,
  kDuplicateId,
  kInvalidArgument,
  kInvalidQuery,
  kUnknownKind,
  kNoTemplate,
  kImageDecode,
  kNotFound,
  kMissingTruth,
  kUnsupported,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code and an optional detail
/// string (file name, field path, offending value).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace r3
