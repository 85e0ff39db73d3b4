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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tracelift {

// UTC instant with millisecond precision. Text form is
// "YYYY-MM-DDTHH:MM:SS.mmmZ".
class Timestamp {
 public:
  constexpr Timestamp() = default;
  constexpr explicit Timestamp(std::int64_t unix_millis) : millis_(unix_millis) {}

  static Timestamp now();
  // Throws Error{kValidation, "bad-timestamp"}.
  static Timestamp parse(std::string_view text);

  constexpr std::int64_t unix_millis() const { return millis_; }
  std::string to_string() const;

  friend constexpr auto operator<=>(Timestamp, Timestamp) = default;

 private:
  std::int64_t millis_ = 0;
};

}  // namespace tracelift
