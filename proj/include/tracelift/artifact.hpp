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

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tracelift/classification.hpp"
#include "tracelift/timestamp.hpp"

namespace tracelift {

enum class Phase { kPreparation, kAnalysis, kDeployment, kCommunication, kInteractive };

inline constexpr std::array<Phase, 5> kAllPhases = {
    Phase::kPreparation, Phase::kAnalysis, Phase::kDeployment,
    Phase::kCommunication, Phase::kInteractive};

std::string_view to_string(Phase phase);
// Case-insensitive. Throws Error{kUsage, "bad-phase"}.
Phase parse_phase(std::string_view text);

enum class Origin { kHuman, kMachine };
std::string_view to_string(Origin origin);
Origin parse_origin(std::string_view text);

enum class CaptureMethod { kApiDump, kManualAnnotation, kScreenshot };
std::string_view to_string(CaptureMethod method);
CaptureMethod parse_capture_method(std::string_view text);

struct ArtifactGroup {
  std::string id;
  std::string name;
  Phase phase;

  bool operator==(const ArtifactGroup&) const = default;
};

struct ArtifactType {
  std::string id;
  std::string name;
  std::string group;
  // Partial template; only present where the type fixes some dimensions.
  std::optional<Classification> default_classification;

  bool operator==(const ArtifactType&) const = default;
};

struct ArtifactCatalog {
  std::vector<ArtifactGroup> groups;
  std::vector<ArtifactType> types;

  const ArtifactGroup* find_group(std::string_view id) const;
  const ArtifactType* find_type(std::string_view id) const;
  // Phase of the group owning `type_id`; throws Error{kNotFound, "unknown-type"}.
  Phase phase_of(std::string_view type_id) const;
};

// The bundled catalog: 11 groups across 5 phases, 52 artifact types.
const ArtifactCatalog& load_artifact_catalog();
ArtifactCatalog artifact_catalog_from_json(const Json& json);

// Fields are optional so incomplete captures can be represented;
// traceability reports which ones are missing.
struct Provenance {
  std::optional<Timestamp> created_at;
  std::optional<Origin> generator;
  std::string actor_label;
  std::optional<CaptureMethod> capture_method;

  bool complete() const {
    return created_at.has_value() && generator.has_value() &&
           capture_method.has_value();
  }
  bool operator==(const Provenance&) const = default;
};

// Blob plus an optional selector inside it: a slash-delimited JSON key path
// ("/dataset/columns") or a pixel rectangle ("rect:x,y,w,h").
struct PayloadRef {
  std::string blob;
  std::string selector;

  bool operator==(const PayloadRef&) const = default;
};

struct ArtifactRecord {
  std::string artifact_id;
  std::string type_id;
  std::string title;
  Classification classification;
  ClassificationMode mode = ClassificationMode::kDescriptive;
  Provenance provenance;
  std::optional<PayloadRef> payload;
  std::string notes;

  bool operator==(const ArtifactRecord&) const = default;
};

// Everything create_artifact needs except the identity.
struct ArtifactDraft {
  std::string type_id;
  std::string title;
  Classification classification;
  Provenance provenance;
  std::optional<PayloadRef> payload;
  std::string notes;
};

// Validates `draft` against the catalog and taxonomy under `mode` and
// returns the record. Persisting it is the store's job.
ArtifactRecord create_artifact(const ArtifactCatalog& catalog,
                               const Taxonomy& taxonomy, ClassificationMode mode,
                               ArtifactDraft draft, std::string artifact_id);

// Source-dimension ids of the bundled taxonomy, used by derive_origin.
namespace source_ids {
inline constexpr std::string_view kDimension = "d1";
inline constexpr std::string_view kHuman = "cat1.1";
inline constexpr std::string_view kData = "cat1.2";
inline constexpr std::string_view kAutoml = "cat1.3";
inline constexpr std::string_view kSystem = "cat1.4";
inline constexpr std::string_view kOrganizational = "cat1.5";
inline constexpr std::string_view kDataInitial = "c1.2.1";
inline constexpr std::string_view kDataDerived = "c1.2.2";
}  // namespace source_ids

// How Data-sourced artifacts map onto Human/Machine. Per repository.
struct OriginRule {
  Origin data_initial = Origin::kHuman;
  Origin data_derived = Origin::kMachine;

  bool operator==(const OriginRule&) const = default;
};

// Human and Organizational Process sources are human, AutoML Process and
// System are machine, Data follows `rule`. Any machine source wins.
// Throws Error{kValidation, "source-unassigned"} without a Source assignment.
Origin derive_origin(const Classification& classification,
                     const OriginRule& rule = {});

// SHA-256 over the canonical JSON of {classification, payload blob, title}.
std::string content_hash(const ArtifactRecord& record);

// Random RFC 4122 version-4 UUID string.
std::string generate_uuid(std::mt19937_64& rng);

Json to_json(const Provenance& provenance);
Provenance provenance_from_json(const Json& json);
Json to_json(const ArtifactRecord& record);
ArtifactRecord artifact_from_json(const Json& json);
Json to_json(const OriginRule& rule);
OriginRule origin_rule_from_json(const Json& json);

}  // namespace tracelift
