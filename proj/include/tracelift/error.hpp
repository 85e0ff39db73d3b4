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

#include <stdexcept>
#include <string>
#include <vector>

namespace tracelift {

// Broad failure class; decides the CLI exit code.
enum class ErrorKind {
  kValidation,  // input violates a domain rule
  kNotFound,    // unknown id
  kConflict,    // state forbids the operation (already initialized, locked)
  kUsage,       // malformed request
  kIo,          // filesystem failure
  kCorrupt,     // persisted data cannot be parsed or replayed
};

// All library failures are reported as Error. `code()` is a stable
// kebab-case identifier ("hierarchy-mismatch", "cycle", ...) that tests and
// tooling match on; `details()` carries structured extras such as the
// offending cycle path or the list of unexplained deltas.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)),
        details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::vector<std::string> details_;
};

}  // namespace tracelift
