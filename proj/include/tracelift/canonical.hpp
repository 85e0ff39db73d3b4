// Copyright 2026 The Tracelift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace tracelift {

using Json = nlohmann::json;

// Canonical JSON: UTF-8, object keys in byte-wise lexicographic order, no
// insignificant whitespace. Every persisted document and every --json output
// goes through this so identical state hashes identically.
std::string to_canonical(const Json& value);

// Parses JSON text; throws Error{kCorrupt, "json-parse"} on malformed input.
Json parse_json(std::string_view text, std::string_view what = "document");

// Lower-case hex SHA-256.
std::string sha256_hex(std::span<const std::byte> bytes);
std::string sha256_hex(std::string_view bytes);

std::vector<std::byte> read_file_bytes(const std::filesystem::path& path);
std::string read_file_text(const std::filesystem::path& path);
// Writes through a temporary sibling and renames into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace tracelift
