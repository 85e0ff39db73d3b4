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

// Read-only queries over a replayed repository state, and the view bundle
// consumed by the explorer UI.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tracelift/store.hpp"

namespace tracelift {

inline constexpr std::string_view kViewSchema = "tracelift-view/1";

struct QueryContext {
  const RepoState& state;
  const ArtifactCatalog& catalog;
  const Taxonomy& taxonomy;
  OriginRule origin_rule;
};

// Bundled catalog and taxonomy plus the repository's origin rule.
QueryContext make_context(const Repository& repo);

// Conjunctive; unset fields match everything. The revision range keeps
// artifacts with a version in at least one revision of [from, to].
struct Filter {
  std::optional<Phase> phase;
  std::optional<std::string> group;
  std::optional<std::string> type;
  std::optional<Origin> origin;
  std::optional<std::string> dimension;
  std::optional<std::string> category;
  std::optional<std::string> characteristic;
  std::optional<int> revision_from;
  std::optional<int> revision_to;
};

struct ArtifactSummary {
  std::string artifact_id;
  std::string title;
  std::string type_id;
  std::string group;
  Phase phase = Phase::kPreparation;
  std::optional<Origin> origin;
  std::int64_t seq = 0;

  bool operator==(const ArtifactSummary&) const = default;
};

// Origin from the Source assignment, else the recorded generator.
std::optional<Origin> artifact_origin(const QueryContext& ctx, const ArtifactRecord& record);

ArtifactSummary summarize_record(const QueryContext& ctx, const ArtifactRecord& record);

// Ordered by creation seq. Errors: "unknown-id" for filter ids not in the
// catalog or taxonomy, "unknown-revision".
std::vector<ArtifactSummary> locate(const QueryContext& ctx, const Filter& filter);

struct InfoCard {
  ArtifactSummary summary;
  Classification classification;
  Provenance provenance;
  std::vector<std::string> upstream;    // direct
  std::vector<std::string> downstream;  // direct
  // Characteristic id -> other artifacts sharing it, creation order.
  std::map<std::string, std::vector<std::string>> peers;
};

// Errors: "unknown-artifact".
InfoCard summarize(const QueryContext& ctx, std::string_view artifact_id);

struct ClassificationDelta {
  std::set<Assignment> removed;
  std::set<Assignment> added;

  bool operator==(const ClassificationDelta&) const = default;
};

struct HistoryComparison {
  std::string artifact_id;
  std::pair<int, int> revisions;
  std::pair<VersionStatus, VersionStatus> status;
  std::pair<std::string, std::string> content_hash;
  std::pair<std::optional<Origin>, std::optional<Origin>> generator;
  std::map<std::string, ClassificationDelta> classification;  // changed dimensions only

  bool empty() const {
    return content_hash.first == content_hash.second && classification.empty() &&
           generator.first == generator.second;
  }
};

// Generators are derived from each version's Source assignment. Errors:
// "unknown-artifact", "missing-version".
HistoryComparison compare_history(const QueryContext& ctx, std::string_view artifact_id,
                                  int rev_a, int rev_b);

// Errors: "empty-repository" when nothing has been snapshotted.
Json build_view_bundle(const QueryContext& ctx);

// Writes canonical JSON to `out` (default exports/view-bundle.json) and
// returns the path.
std::filesystem::path export_view_bundle(const Repository& repo,
                                         std::optional<std::filesystem::path> out = {});

// Referential-integrity problems; empty when the bundle is well formed.
std::vector<std::string> check_view_bundle(const Json& bundle);

Json to_json(const ArtifactSummary& summary);
Json to_json(const InfoCard& card);
Json to_json(const HistoryComparison& comparison);

}  // namespace tracelift
