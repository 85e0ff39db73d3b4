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
#include "tracelift/artifact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "bundled_data.hpp"
#include "tracelift/error.hpp"

namespace tracelift {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

Error corrupt(const std::string& what) {
  return Error(ErrorKind::kCorrupt, "artifact-schema", what);
}

std::string get_string(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw corrupt(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kPreparation: return "Preparation";
    case Phase::kAnalysis: return "Analysis";
    case Phase::kDeployment: return "Deployment";
    case Phase::kCommunication: return "Communication";
    case Phase::kInteractive: return "Interactive";
  }
  return "?";
}

Phase parse_phase(std::string_view text) {
  const auto key = lower(text);
  for (Phase p : kAllPhases) {
    if (lower(to_string(p)) == key) return p;
  }
  throw Error(ErrorKind::kUsage, "bad-phase", "unknown phase '" + std::string(text) + "'");
}

std::string_view to_string(Origin origin) {
  return origin == Origin::kHuman ? "human" : "machine";
}

Origin parse_origin(std::string_view text) {
  const auto key = lower(text);
  if (key == "human") return Origin::kHuman;
  if (key == "machine") return Origin::kMachine;
  throw Error(ErrorKind::kUsage, "bad-origin", "unknown origin '" + std::string(text) + "'");
}

std::string_view to_string(CaptureMethod method) {
  switch (method) {
    case CaptureMethod::kApiDump: return "api-dump";
    case CaptureMethod::kManualAnnotation: return "manual-annotation";
    case CaptureMethod::kScreenshot: return "screenshot";
  }
  return "?";
}

CaptureMethod parse_capture_method(std::string_view text) {
  if (text == "api-dump") return CaptureMethod::kApiDump;
  if (text == "manual-annotation") return CaptureMethod::kManualAnnotation;
  if (text == "screenshot") return CaptureMethod::kScreenshot;
  throw Error(ErrorKind::kUsage, "bad-capture-method",
              "unknown capture method '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Catalog

const ArtifactGroup* ArtifactCatalog::find_group(std::string_view id) const {
  auto it = std::find_if(groups.begin(), groups.end(),
                         [&](const ArtifactGroup& g) { return g.id == id; });
  return it == groups.end() ? nullptr : &*it;
}

const ArtifactType* ArtifactCatalog::find_type(std::string_view id) const {
  auto it = std::find_if(types.begin(), types.end(),
                         [&](const ArtifactType& t) { return t.id == id; });
  return it == types.end() ? nullptr : &*it;
}

Phase ArtifactCatalog::phase_of(std::string_view type_id) const {
  const ArtifactType* type = find_type(type_id);
  const ArtifactGroup* group = type ? find_group(type->group) : nullptr;
  if (group == nullptr) {
    throw Error(ErrorKind::kNotFound, "unknown-type",
                "artifact type '" + std::string(type_id) + "' is not in the catalog");
  }
  return group->phase;
}

ArtifactCatalog artifact_catalog_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("groups") || !json.contains("types")) {
    throw corrupt("catalog needs 'groups' and 'types'");
  }
  ArtifactCatalog catalog;
  for (const auto& g : json.at("groups")) {
    catalog.groups.push_back(
        {get_string(g, "id"), get_string(g, "name"), parse_phase(get_string(g, "phase"))});
  }
  for (const auto& t : json.at("types")) {
    ArtifactType type{get_string(t, "id"), get_string(t, "name"),
                      get_string(t, "group"), std::nullopt};
    if (auto it = t.find("default_classification"); it != t.end()) {
      type.default_classification = classification_from_json(*it);
    }
    if (catalog.find_group(type.group) == nullptr) {
      throw corrupt("type '" + type.id + "' references unknown group '" + type.group + "'");
    }
    catalog.types.push_back(std::move(type));
  }
  return catalog;
}

const ArtifactCatalog& load_artifact_catalog() {
  static const ArtifactCatalog catalog = artifact_catalog_from_json(
      parse_json(detail::bundled_catalog_json(), "artifact catalog"));
  return catalog;
}

// ---------------------------------------------------------------------------
// Records

ArtifactRecord create_artifact(const ArtifactCatalog& catalog,
                               const Taxonomy& taxonomy, ClassificationMode mode,
                               ArtifactDraft draft, std::string artifact_id) {
  if (catalog.find_type(draft.type_id) == nullptr) {
    throw Error(ErrorKind::kNotFound, "unknown-type",
                "artifact type '" + draft.type_id + "' is not in the catalog");
  }
  validate_classification(draft.classification, taxonomy, mode);
  return ArtifactRecord{std::move(artifact_id),
                        std::move(draft.type_id),
                        std::move(draft.title),
                        std::move(draft.classification),
                        mode,
                        std::move(draft.provenance),
                        std::move(draft.payload),
                        std::move(draft.notes)};
}

Origin derive_origin(const Classification& classification, const OriginRule& rule) {
  auto it = classification.assignments.find(std::string(source_ids::kDimension));
  if (it == classification.assignments.end() || it->second.empty()) {
    throw Error(ErrorKind::kValidation, "source-unassigned",
                "Source dimension is not assigned");
  }
  bool any_machine = false;
  for (const auto& pair : it->second) {
    Origin o;
    if (pair.category == source_ids::kHuman ||
        pair.category == source_ids::kOrganizational) {
      o = Origin::kHuman;
    } else if (pair.category == source_ids::kAutoml ||
               pair.category == source_ids::kSystem) {
      o = Origin::kMachine;
    } else if (pair.category == source_ids::kData &&
               pair.characteristic == source_ids::kDataInitial) {
      o = rule.data_initial;
    } else if (pair.category == source_ids::kData &&
               pair.characteristic == source_ids::kDataDerived) {
      o = rule.data_derived;
    } else {
      throw Error(ErrorKind::kValidation, "unknown-source",
                  "(" + pair.category + ", " + pair.characteristic +
                      ") is not a Source assignment");
    }
    any_machine = any_machine || o == Origin::kMachine;
  }
  return any_machine ? Origin::kMachine : Origin::kHuman;
}

std::string content_hash(const ArtifactRecord& record) {
  Json doc = {{"classification", to_json(record.classification)},
              {"payload_blob", record.payload ? record.payload->blob : ""},
              {"title", record.title}};
  return sha256_hex(to_canonical(doc));
}

std::string generate_uuid(std::mt19937_64& rng) {
  std::uint64_t hi = rng();
  std::uint64_t lo = rng();
  hi = (hi & 0xffffffffffff0fffULL) | 0x0000000000004000ULL;  // version 4
  lo = (lo & 0x3fffffffffffffffULL) | 0x8000000000000000ULL;  // variant 10
  char buf[37];
  std::snprintf(buf, sizeof buf, "%08x-%04x-%04x-%04x-%012llx",
                static_cast<unsigned>(hi >> 32),
                static_cast<unsigned>((hi >> 16) & 0xffff),
                static_cast<unsigned>(hi & 0xffff),
                static_cast<unsigned>(lo >> 48),
                static_cast<unsigned long long>(lo & 0xffffffffffffULL));
  return buf;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Provenance& p) {
  Json out = {{"actor_label", p.actor_label}};
  out["created_at"] = p.created_at ? Json(p.created_at->to_string()) : Json(nullptr);
  out["generator"] = p.generator ? Json(std::string(to_string(*p.generator))) : Json(nullptr);
  out["capture_method"] =
      p.capture_method ? Json(std::string(to_string(*p.capture_method))) : Json(nullptr);
  return out;
}

Provenance provenance_from_json(const Json& json) {
  Provenance p;
  if (!json.is_object()) throw corrupt("provenance must be an object");
  if (auto v = json.value("created_at", Json()); v.is_string()) {
    p.created_at = Timestamp::parse(v.get<std::string>());
  }
  if (auto v = json.value("generator", Json()); v.is_string()) {
    p.generator = parse_origin(v.get<std::string>());
  }
  if (auto v = json.value("capture_method", Json()); v.is_string()) {
    p.capture_method = parse_capture_method(v.get<std::string>());
  }
  p.actor_label = json.value("actor_label", std::string());
  return p;
}

Json to_json(const ArtifactRecord& r) {
  Json out = {{"artifact_id", r.artifact_id},
              {"type", r.type_id},
              {"title", r.title},
              {"classification", to_json(r.classification)},
              {"mode", std::string(to_string(r.mode))},
              {"provenance", to_json(r.provenance)},
              {"notes", r.notes}};
  out["payload_ref"] = r.payload ? Json{{"blob", r.payload->blob},
                                        {"selector", r.payload->selector}}
                                 : Json(nullptr);
  return out;
}

ArtifactRecord artifact_from_json(const Json& json) {
  if (!json.is_object()) throw corrupt("artifact record must be an object");
  ArtifactRecord r;
  r.artifact_id = get_string(json, "artifact_id");
  r.type_id = get_string(json, "type");
  r.title = get_string(json, "title");
  r.classification = classification_from_json(json.at("classification"));
  r.mode = parse_classification_mode(get_string(json, "mode"));
  r.provenance = provenance_from_json(json.at("provenance"));
  r.notes = json.value("notes", std::string());
  if (auto it = json.find("payload_ref"); it != json.end() && it->is_object()) {
    r.payload = PayloadRef{get_string(*it, "blob"), it->value("selector", std::string())};
  }
  return r;
}

Json to_json(const OriginRule& rule) {
  return {{"data_initial", std::string(to_string(rule.data_initial))},
          {"data_derived", std::string(to_string(rule.data_derived))}};
}

OriginRule origin_rule_from_json(const Json& json) {
  OriginRule rule;
  if (json.is_object()) {
    rule.data_initial = parse_origin(json.value("data_initial", "human"));
    rule.data_derived = parse_origin(json.value("data_derived", "machine"));
  }
  return rule;
}

}  // namespace tracelift
