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
#include "tracelift/evolution.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "tracelift/error.hpp"

namespace tracelift {

std::string_view to_string(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::kAdd: return "add";
    case ChangeKind::kRemove: return "remove";
    case ChangeKind::kRename: return "rename";
    case ChangeKind::kMerge: return "merge";
    case ChangeKind::kSplit: return "split";
    case ChangeKind::kReclassify: return "reclassify";
  }
  return "?";
}

ChangeKind parse_change_kind(std::string_view text) {
  for (auto k : {ChangeKind::kAdd, ChangeKind::kRemove, ChangeKind::kRename,
                 ChangeKind::kMerge, ChangeKind::kSplit, ChangeKind::kReclassify}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorKind::kCorrupt, "changelog-schema",
              "unknown change kind '" + std::string(text) + "'");
}

namespace {

constexpr std::string_view kObjectPrefix = "object:";

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    parts.emplace_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

Level level_of_depth(std::size_t depth) {
  return depth == 1 ? Level::kDimension
                    : depth == 2 ? Level::kCategory : Level::kCharacteristic;
}

// Resolves an id path, checking every parent link.
std::optional<FlatEntry> resolve(const Taxonomy& t, std::string_view path) {
  const auto parts = split_path(path);
  if (parts.empty() || parts.size() > 3) return std::nullopt;
  const Dimension* dim = t.find_dimension(parts[0]);
  if (dim == nullptr) return std::nullopt;
  if (parts.size() == 1) return FlatEntry{Level::kDimension, dim->id, "", dim->name};
  const Category* cat = nullptr;
  for (const auto& c : dim->categories) {
    if (c.id == parts[1]) cat = &c;
  }
  if (cat == nullptr) return std::nullopt;
  if (parts.size() == 2) return FlatEntry{Level::kCategory, cat->id, dim->id, cat->name};
  for (const auto& ch : cat->characteristics) {
    if (ch.id == parts[2]) {
      return FlatEntry{Level::kCharacteristic, ch.id, cat->id, ch.name};
    }
  }
  return std::nullopt;
}

std::string delta_key(DeltaKind kind, Level level, const std::string& id) {
  return std::string(to_string(kind)) + " " + std::string(to_string(level)) + " " + id;
}

bool has_level_id(const Taxonomy& t, Level level, const std::string& id) {
  switch (level) {
    case Level::kDimension: return t.find_dimension(id) != nullptr;
    case Level::kCategory: return t.find_category(id) != nullptr;
    case Level::kCharacteristic: return t.locate_characteristic(id).has_value();
  }
  return false;
}

// Removal keys for `entry` and every descendant (in `prev`) that is gone from
// `curr` at its level.
void removal_keys(const Taxonomy& prev, const Taxonomy& curr, const FlatEntry& entry,
                  std::vector<std::string>& keys) {
  keys.push_back(delta_key(DeltaKind::kRemoved, entry.level, entry.id));
  auto add_char = [&](const Characteristic& ch) {
    if (!curr.locate_characteristic(ch.id)) {
      keys.push_back(delta_key(DeltaKind::kRemoved, Level::kCharacteristic, ch.id));
    }
  };
  auto add_cat = [&](const Category& c, bool include_self) {
    if (include_self && !curr.find_category(c.id)) {
      keys.push_back(delta_key(DeltaKind::kRemoved, Level::kCategory, c.id));
    }
    for (const auto& ch : c.characteristics) add_char(ch);
  };
  if (entry.level == Level::kDimension) {
    for (const auto& c : prev.find_dimension(entry.id)->categories) add_cat(c, true);
  } else if (entry.level == Level::kCategory) {
    add_cat(*prev.find_category(entry.id), false);
  }
}

std::string describe(const ChangeOp& op, std::size_t index) {
  return "op #" + std::to_string(index + 1) + " " + std::string(to_string(op.kind)) +
         " " + op.subject;
}

}  // namespace

ChangelogCheck check_changelog(const TaxonomyRevision& prev,
                               const TaxonomyRevision& curr, bool lenient) {
  const Taxonomy& before = prev.taxonomy;
  const Taxonomy& after = curr.taxonomy;
  ChangelogCheck check;

  std::set<std::string> deltas;
  for (const auto& d : diff_taxonomies(before, after).all()) {
    deltas.insert(delta_key(d.kind, d.level, d.id));
  }
  std::set<std::string> explained;

  // (level, parent) -> {removes, adds} for the merge/split shape heuristic.
  std::map<std::pair<Level, std::string>, std::pair<int, int>> sibling_ops;

  for (std::size_t i = 0; i < curr.changelog.size(); ++i) {
    const ChangeOp& op = curr.changelog[i];
    const std::string who = describe(op, i);
    std::vector<std::string> keys;
    std::string problem;

    auto need = [&](const Taxonomy& t, std::string_view path,
                    const char* where) -> std::optional<FlatEntry> {
      auto e = resolve(t, path);
      if (!e && problem.empty()) {
        problem = "path '" + std::string(path) + "' does not resolve in the " + where +
                  " revision";
      }
      return e;
    };

    switch (op.kind) {
      case ChangeKind::kAdd: {
        if (auto e = need(after, op.subject, "current")) {
          keys.push_back(delta_key(DeltaKind::kAdded, e->level, e->id));
          ++sibling_ops[{e->level, e->parent}].second;
        }
        break;
      }
      case ChangeKind::kRemove: {
        if (auto e = need(before, op.subject, "previous")) {
          removal_keys(before, after, *e, keys);
          ++sibling_ops[{e->level, e->parent}].first;
        }
        break;
      }
      case ChangeKind::kRename: {
        if (auto e = need(before, op.subject, "previous")) {
          keys.push_back(delta_key(DeltaKind::kRenamed, e->level, e->id));
          auto now = resolve(after, op.subject);
          if (!now) {
            auto parts = split_path(op.subject);
            // The element may also have moved; look it up by id.
            for (const auto& f : flatten(after)) {
              if (f.level == e->level && f.id == parts.back()) now = f;
            }
          }
          if (now && now->name != op.name) {
            problem = "renames to '" + op.name + "' but current name is '" +
                      now->name + "'";
          }
        }
        break;
      }
      case ChangeKind::kMerge: {
        auto target = need(after, op.subject, "current");
        if (op.related.size() < 2) {
          problem = "merge needs at least two sources";
          break;
        }
        if (!target) break;
        for (const auto& src : op.related) {
          auto e = need(before, src.path, "previous");
          if (!e) break;
          if (e->level != target->level) {
            problem = "merge source '" + src.path + "' is at a different level";
            break;
          }
          if (e->id != target->id) removal_keys(before, after, *e, keys);
        }
        if (!has_level_id(before, target->level, target->id)) {
          keys.push_back(delta_key(DeltaKind::kAdded, target->level, target->id));
        }
        break;
      }
      case ChangeKind::kSplit: {
        auto source = need(before, op.subject, "previous");
        if (op.related.size() < 2) {
          problem = "split needs at least two targets";
          break;
        }
        if (!source) break;
        bool source_kept = false;
        for (const auto& dst : op.related) {
          auto e = need(after, dst.path, "current");
          if (!e) break;
          if (e->level != source->level) {
            problem = "split target '" + dst.path + "' is at a different level";
            break;
          }
          if (e->id == source->id) {
            source_kept = true;
          } else if (!has_level_id(before, e->level, e->id)) {
            keys.push_back(delta_key(DeltaKind::kAdded, e->level, e->id));
          }
        }
        if (!source_kept) removal_keys(before, after, *source, keys);
        break;
      }
      case ChangeKind::kReclassify: {
        if (op.subject.starts_with(kObjectPrefix)) {
          const std::string object = op.subject.substr(kObjectPrefix.size());
          auto a = prev.object_classifications.find(object);
          auto b = curr.object_classifications.find(object);
          if (a == prev.object_classifications.end() ||
              b == curr.object_classifications.end()) {
            problem = "object '" + object + "' is not present in both revisions";
          } else if (a->second == b->second) {
            problem = "object '" + object + "' classification did not change";
          }
          break;
        }
        auto e = need(before, op.subject, "previous");
        auto parent = need(after, op.parent, "current");
        if (!e || !parent) break;
        keys.push_back(delta_key(DeltaKind::kMoved, e->level, e->id));
        for (const auto& f : flatten(after)) {
          if (f.level == e->level && f.id == e->id && f.parent != parent->id) {
            problem = "current parent of '" + e->id + "' is '" + f.parent + "', not '" +
                      parent->id + "'";
          }
        }
        break;
      }
    }

    if (!problem.empty()) {
      check.spurious.push_back(who + ": " + problem);
      continue;
    }
    if (keys.empty() && op.kind != ChangeKind::kReclassify) {
      check.spurious.push_back(who + ": explains no structural change");
      continue;
    }
    for (const auto& key : keys) {
      if (!deltas.contains(key)) {
        check.spurious.push_back(who + ": no matching delta '" + key + "'");
      } else if (!explained.insert(key).second) {
        check.spurious.push_back(who + ": delta '" + key + "' already explained");
      }
    }
  }

  for (const auto& key : deltas) {
    if (!explained.contains(key)) check.unexplained.push_back(key);
  }

  if (!lenient) {
    for (const auto& [where, counts] : sibling_ops) {
      const auto [removes, adds] = counts;
      if ((removes >= 2 && adds >= 1) || (removes >= 1 && adds >= 2)) {
        check.ambiguous.push_back(
            std::to_string(removes) + " remove(s) and " + std::to_string(adds) +
            " add(s) of " + std::string(to_string(where.first)) + " elements under '" +
            where.second + "' look like an undeclared merge or split");
      }
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Applying a changelog

namespace {

Error inapplicable(const std::string& why) {
  return Error(ErrorKind::kValidation, "changelog-inapplicable", why);
}

Dimension* mutable_dimension(Taxonomy& t, std::string_view id) {
  for (auto& d : t.dimensions) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

Category* mutable_category(Taxonomy& t, std::string_view id) {
  for (auto& d : t.dimensions) {
    for (auto& c : d.categories) {
      if (c.id == id) return &c;
    }
  }
  return nullptr;
}

Characteristic* mutable_characteristic(Taxonomy& t, std::string_view id) {
  for (auto& d : t.dimensions) {
    for (auto& c : d.categories) {
      for (auto& ch : c.characteristics) {
        if (ch.id == id) return &ch;
      }
    }
  }
  return nullptr;
}

struct Creation {
  std::vector<std::string> parts;
  std::string name;
  std::string text;
};

void create(Taxonomy& t, const Creation& c) {
  const std::string& id = c.parts.back();
  const Level level = level_of_depth(c.parts.size());
  if (has_level_id(t, level, id)) return;
  switch (level) {
    case Level::kDimension:
      t.dimensions.push_back({id, c.name, c.text, {}});
      return;
    case Level::kCategory: {
      Dimension* parent = mutable_dimension(t, c.parts[c.parts.size() - 2]);
      if (!parent) throw inapplicable("no parent dimension for '" + id + "'");
      parent->categories.push_back({id, c.name, {}});
      return;
    }
    case Level::kCharacteristic: {
      Category* parent = mutable_category(t, c.parts[c.parts.size() - 2]);
      if (!parent) throw inapplicable("no parent category for '" + id + "'");
      parent->characteristics.push_back({id, c.name, c.text});
      return;
    }
  }
}

template <typename T>
std::optional<T> take(std::vector<T>& items, std::string_view id) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const T& x) { return x.id == id; });
  if (it == items.end()) return std::nullopt;
  T out = std::move(*it);
  items.erase(it);
  return out;
}

// Detaches an element (with its subtree) from wherever it currently sits.
template <typename T>
std::optional<T> detach(Taxonomy& t, std::string_view id);

template <>
std::optional<Dimension> detach(Taxonomy& t, std::string_view id) {
  return take(t.dimensions, id);
}

template <>
std::optional<Category> detach(Taxonomy& t, std::string_view id) {
  for (auto& d : t.dimensions) {
    if (auto c = take(d.categories, id)) return c;
  }
  return std::nullopt;
}

template <>
std::optional<Characteristic> detach(Taxonomy& t, std::string_view id) {
  for (auto& d : t.dimensions) {
    for (auto& c : d.categories) {
      if (auto ch = take(c.characteristics, id)) return ch;
    }
  }
  return std::nullopt;
}

void remove_element(Taxonomy& t, Level level, std::string_view id) {
  bool removed = false;
  switch (level) {
    case Level::kDimension: removed = detach<Dimension>(t, id).has_value(); break;
    case Level::kCategory: removed = detach<Category>(t, id).has_value(); break;
    case Level::kCharacteristic: removed = detach<Characteristic>(t, id).has_value(); break;
  }
  if (!removed) throw inapplicable("nothing to remove at '" + std::string(id) + "'");
}

}  // namespace

Taxonomy apply_changelog(const Taxonomy& base, const std::vector<ChangeOp>& changelog) {
  Taxonomy t = base;

  std::vector<Creation> creations;
  for (const auto& op : changelog) {
    if (op.kind == ChangeKind::kAdd) {
      creations.push_back({split_path(op.subject), op.name, op.text});
    } else if (op.kind == ChangeKind::kMerge) {
      creations.push_back({split_path(op.subject), op.name, op.text});
    } else if (op.kind == ChangeKind::kSplit) {
      for (const auto& dst : op.related) creations.push_back({split_path(dst.path), dst.name, {}});
    }
  }
  std::stable_sort(creations.begin(), creations.end(),
                   [](const Creation& a, const Creation& b) {
                     return a.parts.size() < b.parts.size();
                   });
  for (const auto& c : creations) create(t, c);

  for (const auto& op : changelog) {
    if (op.kind != ChangeKind::kRename) continue;
    const auto parts = split_path(op.subject);
    const Level level = level_of_depth(parts.size());
    const std::string& id = parts.back();
    std::string* name = nullptr;
    if (level == Level::kDimension) {
      if (auto* d = mutable_dimension(t, id)) name = &d->name;
    } else if (level == Level::kCategory) {
      if (auto* c = mutable_category(t, id)) name = &c->name;
    } else if (auto* ch = mutable_characteristic(t, id)) {
      name = &ch->name;
    }
    if (!name) throw inapplicable("nothing to rename at '" + op.subject + "'");
    *name = op.name;
  }

  for (const auto& op : changelog) {
    if (op.kind != ChangeKind::kReclassify || op.subject.starts_with(kObjectPrefix)) continue;
    const auto parts = split_path(op.subject);
    const auto parent = split_path(op.parent).back();
    const Level level = level_of_depth(parts.size());
    if (level == Level::kCategory) {
      auto moved = detach<Category>(t, parts.back());
      Dimension* dst = mutable_dimension(t, parent);
      if (!moved || !dst) throw inapplicable("cannot move '" + op.subject + "'");
      dst->categories.push_back(std::move(*moved));
    } else if (level == Level::kCharacteristic) {
      auto moved = detach<Characteristic>(t, parts.back());
      Category* dst = mutable_category(t, parent);
      if (!moved || !dst) throw inapplicable("cannot move '" + op.subject + "'");
      dst->characteristics.push_back(std::move(*moved));
    } else {
      throw inapplicable("dimensions have no parent to move to");
    }
  }

  for (const auto& op : changelog) {
    const auto subject = split_path(op.subject);
    const Level level = level_of_depth(subject.size());
    if (op.kind == ChangeKind::kRemove) {
      remove_element(t, level, subject.back());
    } else if (op.kind == ChangeKind::kMerge) {
      for (const auto& src : op.related) {
        const auto id = split_path(src.path).back();
        if (id != subject.back()) remove_element(t, level, id);
      }
    } else if (op.kind == ChangeKind::kSplit) {
      bool kept = std::any_of(op.related.begin(), op.related.end(), [&](const PathName& d) {
        return split_path(d.path).back() == subject.back();
      });
      if (!kept) remove_element(t, level, subject.back());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// History

const TaxonomyRevision& TaxonomyHistory::record_revision(
    Taxonomy taxonomy, std::vector<ChangeOp> changelog,
    std::map<std::string, Classification> objects, RecordOptions options) {
  auto report = validate_taxonomy(taxonomy, ValidationMode::kDescriptive);
  if (!report.ok) {
    std::vector<std::string> details;
    for (const auto& v : report.violations) details.push_back(v.rule + " at " + v.path);
    throw Error(ErrorKind::kValidation, "taxonomy-invalid",
                "revision taxonomy fails descriptive validation", std::move(details));
  }
  for (const auto& [object, classification] : objects) {
    auto issues = check_classification(classification, taxonomy, ClassificationMode::kDraft);
    if (!issues.empty()) {
      throw Error(ErrorKind::kValidation, issues.front().code,
                  "object '" + object + "': " + issues.front().message);
    }
  }

  TaxonomyRevision candidate{static_cast<int>(revisions_.size()) + 1, std::move(taxonomy),
                             std::move(changelog), std::move(objects)};

  if (revisions_.empty()) {
    if (!candidate.changelog.empty()) {
      throw Error(ErrorKind::kValidation, "changelog-spurious",
                  "the baseline revision cannot carry a changelog");
    }
  } else {
    const TaxonomyRevision& prev = revisions_.back();
    auto check = check_changelog(prev, candidate, options.lenient);
    if (!check.unexplained.empty()) {
      throw Error(ErrorKind::kValidation, "changelog-incomplete",
                  std::to_string(check.unexplained.size()) +
                      " structural change(s) are not explained by the changelog",
                  check.unexplained);
    }
    if (!check.spurious.empty()) {
      throw Error(ErrorKind::kValidation, "changelog-spurious",
                  std::to_string(check.spurious.size()) +
                      " changelog op(s) do not match a structural change",
                  check.spurious);
    }
    if (!check.ambiguous.empty()) {
      throw Error(ErrorKind::kValidation, "changelog-undeclared-merge-split",
                  "declare merges and splits explicitly or record leniently",
                  check.ambiguous);
    }
    if (!structurally_equal(apply_changelog(prev.taxonomy, candidate.changelog),
                            candidate.taxonomy)) {
      throw Error(ErrorKind::kValidation, "changelog-inconsistent",
                  "applying the changelog to the previous revision does not "
                  "reproduce this taxonomy");
    }
  }
  revisions_.push_back(std::move(candidate));
  return revisions_.back();
}

void TaxonomyHistory::restore(TaxonomyRevision revision) {
  if (revision.index != static_cast<int>(revisions_.size()) + 1) {
    throw Error(ErrorKind::kCorrupt, "revision-out-of-order",
                "expected taxonomy revision " + std::to_string(revisions_.size() + 1) +
                    ", got " + std::to_string(revision.index));
  }
  revisions_.push_back(std::move(revision));
}

const TaxonomyRevision& TaxonomyHistory::at(int index) const {
  if (index < 1 || index > static_cast<int>(revisions_.size())) {
    throw Error(ErrorKind::kNotFound, "unknown-revision",
                "taxonomy revision " + std::to_string(index) + " does not exist");
  }
  return revisions_[static_cast<std::size_t>(index - 1)];
}

// ---------------------------------------------------------------------------
// End conditions

std::map<std::string, std::size_t> coverage_report(const TaxonomyRevision& rev) {
  std::map<std::string, std::size_t> counts;
  for (const auto& id : rev.taxonomy.characteristic_ids()) counts[id] = 0;
  for (const auto& [object, classification] : rev.object_classifications) {
    std::set<std::string> seen;
    for (const auto& [dim, pairs] : classification.assignments) {
      for (const auto& p : pairs) seen.insert(p.characteristic);
    }
    for (const auto& id : seen) {
      if (auto it = counts.find(id); it != counts.end()) ++it->second;
    }
  }
  return counts;
}

EndConditionReport evaluate_end_conditions(const TaxonomyRevision& prev,
                                           const TaxonomyRevision& curr) {
  if (curr.index != prev.index + 1) {
    throw Error(ErrorKind::kValidation, "non-adjacent-revisions",
                "revisions " + std::to_string(prev.index) + " and " +
                    std::to_string(curr.index) + " are not adjacent");
  }
  EndConditionReport r;
  r.cond1_no_changes = diff_taxonomies(prev.taxonomy, curr.taxonomy).empty() &&
                       prev.object_classifications == curr.object_classifications;
  r.cond2_no_merge_split =
      std::none_of(curr.changelog.begin(), curr.changelog.end(), [](const ChangeOp& op) {
        return op.kind == ChangeKind::kMerge || op.kind == ChangeKind::kSplit;
      });
  const auto coverage = coverage_report(curr);
  for (const auto& id : curr.taxonomy.characteristic_ids()) {
    if (coverage.at(id) == 0) r.uncovered_characteristics.push_back(id);
  }
  r.cond3_full_coverage = r.uncovered_characteristics.empty();
  r.met = r.cond1_no_changes && r.cond2_no_merge_split && r.cond3_full_coverage;
  return r;
}

const std::vector<std::string>& subjective_end_conditions() {
  static const std::vector<std::string> kChecklist = {
      "concise", "robust", "comprehensive", "extensible", "explanatory"};
  return kChecklist;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const ChangeOp& op) {
  Json detail = Json::object();
  if (!op.name.empty()) detail["name"] = op.name;
  if (!op.text.empty()) detail["text"] = op.text;
  if (!op.parent.empty()) detail["parent"] = op.parent;
  if (!op.related.empty()) {
    Json related = Json::array();
    for (const auto& r : op.related) related.push_back({{"path", r.path}, {"name", r.name}});
    detail["related"] = std::move(related);
  }
  return {{"kind", std::string(to_string(op.kind))},
          {"subject", op.subject},
          {"detail", std::move(detail)}};
}

ChangeOp change_op_from_json(const Json& json) {
  try {
    ChangeOp op;
    op.kind = parse_change_kind(json.at("kind").get<std::string>());
    op.subject = json.at("subject").get<std::string>();
    const Json detail = json.value("detail", Json::object());
    op.name = detail.value("name", std::string());
    op.text = detail.value("text", std::string());
    op.parent = detail.value("parent", std::string());
    for (const auto& r : detail.value("related", Json::array())) {
      if (r.is_string()) {
        op.related.push_back({r.get<std::string>(), ""});
      } else {
        op.related.push_back({r.at("path").get<std::string>(), r.value("name", std::string())});
      }
    }
    return op;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kCorrupt, "changelog-schema", e.what());
  }
}

Json to_json(const TaxonomyRevision& revision) {
  Json changelog = Json::array();
  for (const auto& op : revision.changelog) changelog.push_back(to_json(op));
  Json objects = Json::object();
  for (const auto& [id, c] : revision.object_classifications) objects[id] = to_json(c);
  return {{"index", revision.index},
          {"taxonomy", to_json(revision.taxonomy)},
          {"changelog", std::move(changelog)},
          {"object_classifications", std::move(objects)}};
}

TaxonomyRevision taxonomy_revision_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("taxonomy")) {
    throw Error(ErrorKind::kCorrupt, "revision-schema", "revision needs a 'taxonomy'");
  }
  TaxonomyRevision rev;
  rev.index = json.value("index", 0);
  rev.taxonomy = taxonomy_from_json(json.at("taxonomy"));
  for (const auto& op : json.value("changelog", Json::array())) {
    rev.changelog.push_back(change_op_from_json(op));
  }
  const Json objects = json.value("object_classifications", Json::object());
  for (const auto& [id, c] : objects.items()) {
    rev.object_classifications.emplace(id, classification_from_json(c));
  }
  return rev;
}

Json to_json(const EndConditionReport& r) {
  return {{"cond1_no_changes", r.cond1_no_changes},
          {"cond2_no_merge_split", r.cond2_no_merge_split},
          {"cond3_full_coverage", r.cond3_full_coverage},
          {"uncovered_characteristics", r.uncovered_characteristics},
          {"met", r.met}};
}

}  // namespace tracelift
