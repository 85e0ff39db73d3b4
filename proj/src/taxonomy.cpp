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
#include "tracelift/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bundled_data.hpp"
#include "tracelift/error.hpp"

namespace tracelift {

const Dimension* Taxonomy::find_dimension(std::string_view id) const {
  for (const auto& d : dimensions) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const Category* Taxonomy::find_category(std::string_view id,
                                        const Dimension** owner) const {
  for (const auto& d : dimensions) {
    for (const auto& c : d.categories) {
      if (c.id == id) {
        if (owner != nullptr) *owner = &d;
        return &c;
      }
    }
  }
  return nullptr;
}

std::optional<CharacteristicLocation> Taxonomy::locate_characteristic(
    std::string_view id) const {
  for (const auto& d : dimensions) {
    for (const auto& c : d.categories) {
      for (const auto& ch : c.characteristics) {
        if (ch.id == id) return CharacteristicLocation{&d, &c, &ch};
      }
    }
  }
  return std::nullopt;
}

std::size_t Taxonomy::category_count() const {
  std::size_t n = 0;
  for (const auto& d : dimensions) n += d.categories.size();
  return n;
}

std::size_t Taxonomy::characteristic_count() const {
  std::size_t n = 0;
  for (const auto& d : dimensions) {
    for (const auto& c : d.categories) n += c.characteristics.size();
  }
  return n;
}

std::vector<std::string> Taxonomy::characteristic_ids() const {
  std::vector<std::string> ids;
  for (const auto& d : dimensions) {
    for (const auto& c : d.categories) {
      for (const auto& ch : c.characteristics) ids.push_back(ch.id);
    }
  }
  return ids;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

class ReportBuilder {
 public:
  void add(std::string rule, std::string path, std::string message) {
    report_.violations.push_back(
        {std::move(rule), std::move(path), std::move(message)});
  }
  ValidationReport finish() && {
    report_.ok = report_.violations.empty();
    return std::move(report_);
  }

 private:
  ValidationReport report_;
};

// Records `name` in `seen`; reports a duplicate when it was already there.
void check_unique(std::set<std::string>& seen, const std::string& value,
                  ReportBuilder& out, const char* rule, const std::string& path,
                  const std::string& what) {
  if (!seen.insert(value).second) {
    out.add(rule, path, "duplicate " + what + " '" + value + "'");
  }
}

}  // namespace

ValidationReport validate_taxonomy(const Taxonomy& taxonomy, ValidationMode mode) {
  ReportBuilder out;
  const bool strict = mode == ValidationMode::kStrict;

  if (taxonomy.dimensions.empty()) {
    out.add("taxonomy-empty", "", "taxonomy has no dimensions");
  }

  std::set<std::string> ids;
  std::set<std::string> dimension_names;
  for (const auto& d : taxonomy.dimensions) {
    const std::string dpath = d.id;
    if (d.id.empty()) out.add("empty-id", dpath, "dimension without id");
    check_unique(ids, d.id, out, "duplicate-id", dpath, "id");
    check_unique(dimension_names, d.name, out, "duplicate-dimension-name", dpath,
                 "dimension name");

    if (d.categories.empty()) {
      out.add("dim-empty", dpath, "dimension '" + d.name + "' has no categories");
    } else if (strict && d.categories.size() < 2) {
      out.add("dim-min-categories", dpath,
              "dimension '" + d.name + "' has " +
                  std::to_string(d.categories.size()) +
                  " category; at least 2 required");
    }

    std::set<std::string> category_names;
    for (const auto& c : d.categories) {
      const std::string cpath = dpath + "/" + c.id;
      if (c.id.empty()) out.add("empty-id", cpath, "category without id");
      check_unique(ids, c.id, out, "duplicate-id", cpath, "id");
      check_unique(category_names, c.name, out, "duplicate-category-name", cpath,
                   "category name");

      if (c.characteristics.empty()) {
        out.add("cat-empty", cpath,
                "category '" + c.name + "' has no characteristics");
      } else if (strict && c.characteristics.size() < 2) {
        out.add("cat-min-characteristics", cpath,
                "category '" + c.name + "' has " +
                    std::to_string(c.characteristics.size()) +
                    " characteristic; at least 2 required");
      }

      std::set<std::string> characteristic_names;
      for (const auto& ch : c.characteristics) {
        const std::string path = cpath + "/" + ch.id;
        if (ch.id.empty()) out.add("empty-id", path, "characteristic without id");
        check_unique(ids, ch.id, out, "duplicate-id", path, "id");
        check_unique(characteristic_names, ch.name, out,
                     "duplicate-characteristic-name", path,
                     "characteristic name");
      }
    }
  }
  return std::move(out).finish();
}

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Taxonomy& taxonomy) {
  Json dims = Json::array();
  for (const auto& d : taxonomy.dimensions) {
    Json cats = Json::array();
    for (const auto& c : d.categories) {
      Json chars = Json::array();
      for (const auto& ch : c.characteristics) {
        chars.push_back(
            {{"id", ch.id}, {"name", ch.name}, {"description", ch.description}});
      }
      cats.push_back({{"id", c.id}, {"name", c.name}, {"characteristics", chars}});
    }
    dims.push_back({{"id", d.id},
                    {"name", d.name},
                    {"question", d.question},
                    {"categories", cats}});
  }
  return {{"version_label", taxonomy.version_label},
          {"meta_characteristic", taxonomy.meta_characteristic},
          {"dimensions", dims}};
}

namespace {

std::string require_string(const Json& obj, const char* key, bool optional = false) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (optional) return {};
    throw Error(ErrorKind::kCorrupt, "taxonomy-schema",
                std::string("missing field '") + key + "'");
  }
  if (!it->is_string()) {
    throw Error(ErrorKind::kCorrupt, "taxonomy-schema",
                std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

const Json& require_array(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw Error(ErrorKind::kCorrupt, "taxonomy-schema",
                std::string("field '") + key + "' must be an array");
  }
  return *it;
}

}  // namespace

Taxonomy taxonomy_from_json(const Json& json) {
  if (!json.is_object()) {
    throw Error(ErrorKind::kCorrupt, "taxonomy-schema", "taxonomy must be an object");
  }
  Taxonomy t;
  t.version_label = require_string(json, "version_label");
  t.meta_characteristic = require_string(json, "meta_characteristic", true);
  for (const auto& dj : require_array(json, "dimensions")) {
    Dimension d;
    d.id = require_string(dj, "id");
    d.name = require_string(dj, "name");
    d.question = require_string(dj, "question", true);
    for (const auto& cj : require_array(dj, "categories")) {
      Category c;
      c.id = require_string(cj, "id");
      c.name = require_string(cj, "name");
      for (const auto& hj : require_array(cj, "characteristics")) {
        c.characteristics.push_back({require_string(hj, "id"),
                                     require_string(hj, "name"),
                                     require_string(hj, "description", true)});
      }
      d.categories.push_back(std::move(c));
    }
    t.dimensions.push_back(std::move(d));
  }
  return t;
}

std::string serialize_taxonomy(const Taxonomy& taxonomy) {
  return to_canonical(to_json(taxonomy));
}

Taxonomy parse_taxonomy(std::string_view text) {
  return taxonomy_from_json(parse_json(text, "taxonomy"));
}

const Taxonomy& load_bundled_taxonomy() {
  static const Taxonomy bundled = parse_taxonomy(detail::bundled_taxonomy_json());
  return bundled;
}

// ---------------------------------------------------------------------------
// Diff

std::string_view to_string(Level level) {
  switch (level) {
    case Level::kDimension: return "dimension";
    case Level::kCategory: return "category";
    case Level::kCharacteristic: return "characteristic";
  }
  return "?";
}

std::string_view to_string(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::kAdded: return "added";
    case DeltaKind::kRemoved: return "removed";
    case DeltaKind::kRenamed: return "renamed";
    case DeltaKind::kMoved: return "moved";
  }
  return "?";
}

std::vector<FlatEntry> flatten(const Taxonomy& taxonomy) {
  std::vector<FlatEntry> out;
  for (const auto& d : taxonomy.dimensions) {
    out.push_back({Level::kDimension, d.id, "", d.name});
    for (const auto& c : d.categories) {
      out.push_back({Level::kCategory, c.id, d.id, c.name});
      for (const auto& ch : c.characteristics) {
        out.push_back({Level::kCharacteristic, ch.id, c.id, ch.name});
      }
    }
  }
  return out;
}

bool structurally_equal(const Taxonomy& a, const Taxonomy& b) {
  auto fa = flatten(a);
  auto fb = flatten(b);
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

std::vector<TaxonomyDelta> TaxonomyDiff::all() const {
  std::vector<TaxonomyDelta> out;
  for (const auto* list : {&added, &removed, &renamed, &moved}) {
    out.insert(out.end(), list->begin(), list->end());
  }
  return out;
}

TaxonomyDiff diff_taxonomies(const Taxonomy& a, const Taxonomy& b) {
  using Key = std::pair<Level, std::string>;
  std::map<Key, FlatEntry> left;
  std::map<Key, FlatEntry> right;
  for (auto& e : flatten(a)) left.emplace(Key{e.level, e.id}, e);
  for (auto& e : flatten(b)) right.emplace(Key{e.level, e.id}, e);

  TaxonomyDiff diff;
  for (const auto& [key, before] : left) {
    auto it = right.find(key);
    if (it == right.end()) {
      diff.removed.push_back({DeltaKind::kRemoved, key.first, key.second,
                              before.name, "", before.parent, ""});
      continue;
    }
    const FlatEntry& after = it->second;
    if (before.name != after.name) {
      diff.renamed.push_back({DeltaKind::kRenamed, key.first, key.second,
                              before.name, after.name, before.parent, after.parent});
    }
    if (before.parent != after.parent) {
      diff.moved.push_back({DeltaKind::kMoved, key.first, key.second, before.name,
                            after.name, before.parent, after.parent});
    }
  }
  for (const auto& [key, after] : right) {
    if (!left.contains(key)) {
      diff.added.push_back({DeltaKind::kAdded, key.first, key.second, "",
                            after.name, "", after.parent});
    }
  }
  return diff;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"rule", v.rule}, {"path", v.path}, {"message", v.message}});
  }
  return {{"ok", report.ok}, {"violations", violations}};
}

Json to_json(const TaxonomyDiff& diff) {
  auto list = [](const std::vector<TaxonomyDelta>& deltas) {
    Json arr = Json::array();
    for (const auto& d : deltas) {
      arr.push_back({{"level", std::string(to_string(d.level))},
                     {"id", d.id},
                     {"name_before", d.name_before},
                     {"name_after", d.name_after},
                     {"parent_before", d.parent_before},
                     {"parent_after", d.parent_after}});
    }
    return arr;
  };
  return {{"added", list(diff.added)},
          {"removed", list(diff.removed)},
          {"renamed", list(diff.renamed)},
          {"moved", list(diff.moved)}};
}

}  // namespace tracelift
