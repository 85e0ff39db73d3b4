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

// Dependency DAG between artifact identities plus the per-revision version
// history of each artifact.
//
// Edges are global (they do not belong to a revision). Versions are recorded
// one revision at a time: every artifact seen in revision r-1 gets exactly
// one version in revision r, defaulting to Unchanged when the caller does not
// mention it.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tracelift/artifact.hpp"
#include "tracelift/classification.hpp"
#include "tracelift/timestamp.hpp"

namespace tracelift {

enum class DeclaredBy { kHuman, kMachine, kInferred };
std::string_view to_string(DeclaredBy declared_by);
DeclaredBy parse_declared_by(std::string_view text);

struct DependencyEdge {
  std::string from;  // upstream
  std::string to;    // downstream
  DeclaredBy declared_by = DeclaredBy::kHuman;
  std::string note;

  bool operator==(const DependencyEdge&) const = default;
};

enum class Direction { kUpstream, kDownstream };

enum class VersionStatus { kNew, kModified, kUnchanged };
std::string_view to_string(VersionStatus status);
VersionStatus parse_version_status(std::string_view text);

struct Revision {
  int index = 0;  // 1-based, contiguous
  std::string label;
  Timestamp created_at;

  bool operator==(const Revision&) const = default;
};

struct ArtifactVersion {
  std::string artifact_id;
  int revision = 0;
  VersionStatus status = VersionStatus::kNew;
  std::string content_hash;
  Classification classification;

  bool operator==(const ArtifactVersion&) const = default;
};

struct VersionChange {
  VersionStatus status = VersionStatus::kNew;
  std::string content_hash;
  Classification classification;
};

class TraceGraph {
 public:
  // Registers an artifact identity. Registration order is the tie-breaker
  // for every ordering this class produces.
  void add_node(const std::string& artifact_id);
  bool has_node(std::string_view artifact_id) const;
  // Registered ids in registration order.
  std::vector<std::string> nodes() const;

  // Errors: "unknown-artifact", "self-loop", "duplicate-edge", and "cycle"
  // (details hold the existing path from `to` back to `from`).
  const DependencyEdge& add_dependency(DependencyEdge edge);
  // Throws what add_dependency would, without inserting.
  void check_dependency(const DependencyEdge& edge) const;
  // Inserts without validation. Used by log replay, which must reproduce
  // whatever was persisted (including edges to ids that no longer resolve).
  void restore_edge(DependencyEdge edge);

  // Transitive closure excluding the query node, topologically ordered
  // (ancestors first), ties broken by registration order.
  std::vector<std::string> closure(std::string_view artifact_id,
                                   Direction direction) const;
  // Direct neighbours in registration order.
  std::vector<std::string> neighbors(std::string_view artifact_id,
                                     Direction direction) const;
  const std::vector<DependencyEdge>& edges() const { return edges_; }

  // Errors: "unknown-artifact", "status-inconsistent".
  const Revision& snapshot_revision(std::string label, Timestamp created_at,
                                    const std::map<std::string, VersionChange>& changes);
  const std::vector<Revision>& revisions() const { return revisions_; }
  int latest_revision() const { return static_cast<int>(revisions_.size()); }

  // One entry per revision since the artifact first appeared.
  // Throws "unknown-artifact" for unregistered ids.
  const std::vector<ArtifactVersion>& history(std::string_view artifact_id) const;
  const ArtifactVersion* version_at(std::string_view artifact_id, int revision) const;
  // Versions recorded in one revision, in registration order.
  std::vector<ArtifactVersion> versions_in(int revision) const;

  bool operator==(const TraceGraph& other) const;

 private:
  std::size_t intern(const std::string& id);
  std::size_t require(std::string_view id) const;

  std::vector<std::string> ids_;
  std::vector<bool> registered_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<DependencyEdge> edges_;

  std::vector<Revision> revisions_;
  std::map<std::string, std::vector<ArtifactVersion>, std::less<>> versions_;
};

// Traceability = definition + provenance + lineage.
struct LineageReport {
  std::string artifact_id;
  bool definition_ok = false;  // every taxonomy dimension assigned
  bool provenance_ok = false;  // timestamp, generator and capture method present
  bool lineage_ok = false;     // upstream resolves, version chain gap-free
  std::vector<std::string> missing;

  bool traceable() const { return definition_ok && provenance_ok && lineage_ok; }
};

// `record` must be registered in `graph`. Missing reasons look like
// "dimension:task", "provenance:generator", "lineage:dangling:<id>",
// "lineage:no-versions", "lineage:gap:<revision>".
LineageReport is_traceable(const TraceGraph& graph, const ArtifactRecord& record,
                           const Taxonomy& taxonomy);

Json to_json(const DependencyEdge& edge);
DependencyEdge edge_from_json(const Json& json);
Json to_json(const ArtifactVersion& version);
Json to_json(const LineageReport& report);

}  // namespace tracelift
