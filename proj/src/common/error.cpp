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

#include "r3/common/error.hpp"

namespace r3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kValidation: return "VALIDATION_ERROR";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidQuery: return "INVALID_QUERY";
    case ErrorCode::kUnknownKind: return "UNKNOWN_KIND";
    case ErrorCode::kNoTemplate: return "NO_TEMPLATE";
    case ErrorCode::kImageDecode: return "IMAGE_DECODE_ERROR";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kMissingTruth: return "MISSING_TRUTH";
    case ErrorCode::kUnsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

}  // namespace r3
