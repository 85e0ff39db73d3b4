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
#include "tracelift/classification.hpp"

#include "tracelift/error.hpp"

namespace tracelift {

bool Classification::assigns(std::string_view dimension_id) const {
  auto it = assignments.find(std::string(dimension_id));
  return it != assignments.end() && !it->second.empty();
}

bool Classification::has_characteristic(std::string_view characteristic_id) const {
  for (const auto& [dim, pairs] : assignments) {
    for (const auto& p : pairs) {
      if (p.characteristic == characteristic_id) return true;
    }
  }
  return false;
}

bool Classification::has_category(std::string_view category_id) const {
  for (const auto& [dim, pairs] : assignments) {
    for (const auto& p : pairs) {
      if (p.category == category_id) return true;
    }
  }
  return false;
}

void Classification::assign(const std::string& dimension_id, Assignment pair) {
  assignments[dimension_id].insert(std::move(pair));
}

std::string_view to_string(ClassificationMode mode) {
  switch (mode) {
    case ClassificationMode::kStrict: return "strict";
    case ClassificationMode::kDescriptive: return "descriptive";
    case ClassificationMode::kDraft: return "draft";
  }
  return "?";
}

ClassificationMode parse_classification_mode(std::string_view text) {
  if (text == "strict") return ClassificationMode::kStrict;
  if (text == "descriptive") return ClassificationMode::kDescriptive;
  if (text == "draft") return ClassificationMode::kDraft;
  throw Error(ErrorKind::kUsage, "bad-mode",
              "unknown classification mode '" + std::string(text) + "'");
}

std::vector<ClassificationIssue> check_classification(
    const Classification& classification, const Taxonomy& taxonomy,
    ClassificationMode mode) {
  std::vector<ClassificationIssue> issues;
  for (const auto& [dim_id, pairs] : classification.assignments) {
    const Dimension* dim = taxonomy.find_dimension(dim_id);
    if (dim == nullptr) {
      issues.push_back({"unknown-dimension", dim_id,
                        "dimension '" + dim_id + "' is not in the taxonomy"});
      continue;
    }
    if (pairs.empty()) {
      issues.push_back({"empty-assignment", dim_id,
                        "dimension '" + dim_id + "' has an empty assignment set"});
    }
    if (mode == ClassificationMode::kStrict && pairs.size() > 1) {
      issues.push_back({"multiplicity", dim_id,
                        "strict mode allows one pair per dimension; '" + dim_id +
                            "' has " + std::to_string(pairs.size())});
    }
    for (const auto& p : pairs) {
      const Dimension* cat_owner = nullptr;
      const Category* cat = taxonomy.find_category(p.category, &cat_owner);
      auto loc = taxonomy.locate_characteristic(p.characteristic);
      if (cat == nullptr) {
        issues.push_back({"unknown-category", dim_id,
                          "category '" + p.category + "' is not in the taxonomy"});
        continue;
      }
      if (!loc) {
        issues.push_back({"unknown-characteristic", dim_id,
                          "characteristic '" + p.characteristic +
                              "' is not in the taxonomy"});
        continue;
      }
      if (cat_owner != dim || loc->category != cat) {
        issues.push_back({"hierarchy-mismatch", dim_id,
                          "(" + p.category + ", " + p.characteristic +
                              ") is not a path under dimension '" + dim_id + "'"});
      }
    }
  }
  if (mode != ClassificationMode::kDraft) {
    for (const auto& d : taxonomy.dimensions) {
      if (!classification.assignments.contains(d.id)) {
        issues.push_back({"dimension-unassigned", d.id,
                          "dimension '" + d.name + "' (" + d.id + ") is unassigned"});
      }
    }
  }
  return issues;
}

void validate_classification(const Classification& classification,
                             const Taxonomy& taxonomy, ClassificationMode mode) {
  auto issues = check_classification(classification, taxonomy, mode);
  if (issues.empty()) return;
  std::vector<std::string> details;
  for (const auto& i : issues) details.push_back(i.code + ": " + i.message);
  throw Error(ErrorKind::kValidation, issues.front().code, issues.front().message,
              std::move(details));
}

Json to_json(const Classification& classification) {
  Json out = Json::object();
  for (const auto& [dim, pairs] : classification.assignments) {
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back({p.category, p.characteristic});
    out[dim] = std::move(arr);
  }
  return out;
}

Classification classification_from_json(const Json& json) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::kCorrupt, "classification-schema", why);
  };
  if (!json.is_object()) throw fail("classification must be an object");
  Classification c;
  for (const auto& [dim, pairs] : json.items()) {
    if (!pairs.is_array()) throw fail("assignments for '" + dim + "' must be an array");
    auto& set = c.assignments[dim];
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw fail("assignment under '" + dim + "' must be [category, characteristic]");
      }
      set.insert({p[0].get<std::string>(), p[1].get<std::string>()});
    }
  }
  return c;
}

}  // namespace tracelift
