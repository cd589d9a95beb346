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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace r3::text {

// ASCII case folding; bytes >= 0x80 pass through unchanged.
std::string casefold(std::string_view s);

// Trim and collapse runs of ASCII whitespace to one space.
std::string normalize_space(std::string_view s);

// casefold(normalize_space(s)): the form used for every matching key.
std::string normalize_key(std::string_view s);

// Lenient UTF-8 decode. Malformed sequences become U+FFFD, one per byte.
std::u32string decode_utf8(std::string_view s);

// Lowercased word tokens; splits on ASCII non-alphanumerics, keeps
// non-ASCII bytes inside tokens.
std::vector<std::string> tokenize(std::string_view s);

std::string slugify(std::string_view s);

bool starts_with_word(std::string_view haystack, std::string_view word);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string read_file(const std::filesystem::path& path);

}  // namespace r3::text
