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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tracelift/canonical.hpp"
#include "tracelift/taxonomy.hpp"

namespace tracelift {

// A (category, characteristic) pair under one dimension.
struct Assignment {
  std::string category;
  std::string characteristic;

  auto operator<=>(const Assignment&) const = default;
};

// Per-dimension assignments. Serialized as
//   {"d1": [["cat1.2", "c1.2.1"]], ...}
// with dimensions and pairs in sorted order.
struct Classification {
  std::map<std::string, std::set<Assignment>> assignments;

  bool assigns(std::string_view dimension_id) const;
  bool has_characteristic(std::string_view characteristic_id) const;
  bool has_category(std::string_view category_id) const;
  void assign(const std::string& dimension_id, Assignment pair);

  bool operator==(const Classification&) const = default;
};

// kDraft accepts missing dimensions (ingestion before annotation is done);
// kDescriptive needs >=1 pair per dimension; kStrict exactly one.
enum class ClassificationMode { kStrict, kDescriptive, kDraft };

std::string_view to_string(ClassificationMode mode);
// Throws Error{kUsage, "bad-mode"}.
ClassificationMode parse_classification_mode(std::string_view text);

struct ClassificationIssue {
  std::string code;  // "hierarchy-mismatch", "dimension-unassigned", ...
  std::string dimension;
  std::string message;
};

// Checks every pair against the hierarchy of `taxonomy` and the multiplicity
// rule of `mode`. Issues are ordered by dimension id.
std::vector<ClassificationIssue> check_classification(
    const Classification& classification, const Taxonomy& taxonomy,
    ClassificationMode mode);

// Throws Error{kValidation, <first issue code>} listing all issues.
void validate_classification(const Classification& classification,
                             const Taxonomy& taxonomy, ClassificationMode mode);

Json to_json(const Classification& classification);
// Throws Error{kCorrupt, "classification-schema"}.
Classification classification_from_json(const Json& json);

}  // namespace tracelift
