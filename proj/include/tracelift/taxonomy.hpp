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

// Taxonomy schema: dimensions -> categories -> characteristics.
//
// Ids follow the "d1" / "cat1.2" / "c1.2.1" scheme of the bundled AutoML
// artifact taxonomy but are otherwise opaque. A rename changes a name, never
// an id. Only the two-level hierarchy is modeled.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracelift/canonical.hpp"

namespace tracelift {

struct Characteristic {
  std::string id;
  std::string name;
  std::string description;

  bool operator==(const Characteristic&) const = default;
};

struct Category {
  std::string id;
  std::string name;
  std::vector<Characteristic> characteristics;

  bool operator==(const Category&) const = default;
};

struct Dimension {
  std::string id;
  std::string name;
  std::string question;
  std::vector<Category> categories;

  bool operator==(const Dimension&) const = default;
};

// Non-owning lookup result; pointers stay valid while the taxonomy lives and
// is not mutated.
struct CharacteristicLocation {
  const Dimension* dimension = nullptr;
  const Category* category = nullptr;
  const Characteristic* characteristic = nullptr;
};

struct Taxonomy {
  std::string version_label;
  std::string meta_characteristic;
  std::vector<Dimension> dimensions;

  const Dimension* find_dimension(std::string_view id) const;
  // Returns the owning dimension through `owner` when non-null.
  const Category* find_category(std::string_view id,
                                const Dimension** owner = nullptr) const;
  std::optional<CharacteristicLocation> locate_characteristic(
      std::string_view id) const;

  std::size_t category_count() const;
  std::size_t characteristic_count() const;
  std::vector<std::string> characteristic_ids() const;

  bool operator==(const Taxonomy&) const = default;
};

enum class ValidationMode { kStrict, kDescriptive };

struct Violation {
  std::string rule;  // e.g. "dim-min-categories"
  std::string path;  // slash-joined id path, "" for the taxonomy itself
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool operator==(const ValidationReport&) const = default;
};

// Strict mode enforces >=2 categories per dimension and >=2 characteristics
// per category on top of the uniqueness rules; descriptive mode only rejects
// empty containers and uniqueness violations. Never throws.
ValidationReport validate_taxonomy(const Taxonomy& taxonomy, ValidationMode mode);

// The AutoML artifact taxonomy shipped with the library (4 dimensions,
// 16 categories, 39 characteristics). Throws Error{kCorrupt} if the embedded
// data file fails to parse.
const Taxonomy& load_bundled_taxonomy();

Json to_json(const Taxonomy& taxonomy);
// Throws Error{kCorrupt, "taxonomy-schema"} on missing or mistyped fields.
Taxonomy taxonomy_from_json(const Json& json);
std::string serialize_taxonomy(const Taxonomy& taxonomy);
Taxonomy parse_taxonomy(std::string_view text);

enum class Level { kDimension, kCategory, kCharacteristic };
std::string_view to_string(Level level);

// One row of the flattened hierarchy. `parent` is empty for dimensions.
struct FlatEntry {
  Level level;
  std::string id;
  std::string parent;
  std::string name;

  auto operator<=>(const FlatEntry&) const = default;
};

std::vector<FlatEntry> flatten(const Taxonomy& taxonomy);

// Same elements, names and parent links, ignoring order and descriptions.
bool structurally_equal(const Taxonomy& a, const Taxonomy& b);

enum class DeltaKind { kAdded, kRemoved, kRenamed, kMoved };
std::string_view to_string(DeltaKind kind);

struct TaxonomyDelta {
  DeltaKind kind;
  Level level;
  std::string id;
  std::string name_before;
  std::string name_after;
  std::string parent_before;
  std::string parent_after;

  bool operator==(const TaxonomyDelta&) const = default;
};

// Keyed by id: an id present on one side only is added/removed, an id whose
// name differs is renamed, an id whose parent differs is moved. Each list is
// sorted by (level, id).
struct TaxonomyDiff {
  std::vector<TaxonomyDelta> added;
  std::vector<TaxonomyDelta> removed;
  std::vector<TaxonomyDelta> renamed;
  std::vector<TaxonomyDelta> moved;

  bool empty() const {
    return added.empty() && removed.empty() && renamed.empty() && moved.empty();
  }
  std::vector<TaxonomyDelta> all() const;

  bool operator==(const TaxonomyDiff&) const = default;
};

TaxonomyDiff diff_taxonomies(const Taxonomy& a, const Taxonomy& b);

Json to_json(const ValidationReport& report);
Json to_json(const TaxonomyDiff& diff);

}  // namespace tracelift
