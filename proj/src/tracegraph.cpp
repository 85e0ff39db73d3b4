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
#include "tracelift/tracegraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>

#include "tracelift/error.hpp"

namespace tracelift {

std::string_view to_string(DeclaredBy declared_by) {
  switch (declared_by) {
    case DeclaredBy::kHuman: return "human";
    case DeclaredBy::kMachine: return "machine";
    case DeclaredBy::kInferred: return "inferred";
  }
  return "?";
}

DeclaredBy parse_declared_by(std::string_view text) {
  if (text == "human") return DeclaredBy::kHuman;
  if (text == "machine") return DeclaredBy::kMachine;
  if (text == "inferred") return DeclaredBy::kInferred;
  throw Error(ErrorKind::kUsage, "bad-declared-by",
              "declared_by must be human|machine|inferred, got '" + std::string(text) + "'");
}

std::string_view to_string(VersionStatus status) {
  switch (status) {
    case VersionStatus::kNew: return "new";
    case VersionStatus::kModified: return "modified";
    case VersionStatus::kUnchanged: return "unchanged";
  }
  return "?";
}

VersionStatus parse_version_status(std::string_view text) {
  if (text == "new") return VersionStatus::kNew;
  if (text == "modified") return VersionStatus::kModified;
  if (text == "unchanged") return VersionStatus::kUnchanged;
  throw Error(ErrorKind::kUsage, "bad-status",
              "status must be new|modified|unchanged, got '" + std::string(text) + "'");
}

namespace {

Error unknown_artifact(std::string_view id) {
  return Error(ErrorKind::kNotFound, "unknown-artifact",
               "artifact '" + std::string(id) + "' does not exist");
}

}  // namespace

// ---------------------------------------------------------------------------
// Nodes and edges

std::size_t TraceGraph::intern(const std::string& id) {
  auto [it, inserted] = index_.try_emplace(id, ids_.size());
  if (inserted) {
    ids_.push_back(id);
    registered_.push_back(false);
    out_.emplace_back();
    in_.emplace_back();
  }
  return it->second;
}

std::size_t TraceGraph::require(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end() || !registered_[it->second]) throw unknown_artifact(id);
  return it->second;
}

void TraceGraph::add_node(const std::string& artifact_id) {
  registered_[intern(artifact_id)] = true;
}

bool TraceGraph::has_node(std::string_view artifact_id) const {
  auto it = index_.find(std::string(artifact_id));
  return it != index_.end() && registered_[it->second];
}

std::vector<std::string> TraceGraph::nodes() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (registered_[i]) out.push_back(ids_[i]);
  }
  return out;
}

void TraceGraph::check_dependency(const DependencyEdge& edge) const {
  const std::size_t from = require(edge.from);
  const std::size_t to = require(edge.to);
  if (from == to) {
    throw Error(ErrorKind::kValidation, "self-loop",
                "artifact '" + edge.from + "' cannot depend on itself");
  }
  if (std::find(out_[from].begin(), out_[from].end(), to) != out_[from].end()) {
    throw Error(ErrorKind::kConflict, "duplicate-edge",
                "edge " + edge.from + " -> " + edge.to + " already exists");
  }

  // Would close a cycle iff `from` is already reachable from `to`.
  std::vector<std::size_t> parent(ids_.size(), ids_.size());
  std::vector<std::size_t> stack{to};
  parent[to] = to;
  bool found = false;
  while (!stack.empty() && !found) {
    const std::size_t n = stack.back();
    stack.pop_back();
    for (std::size_t next : out_[n]) {
      if (parent[next] != ids_.size()) continue;
      parent[next] = n;
      if (next == from) {
        found = true;
        break;
      }
      stack.push_back(next);
    }
  }
  if (found) {
    std::vector<std::string> path;
    for (std::size_t n = from; n != to; n = parent[n]) path.push_back(ids_[n]);
    path.push_back(ids_[to]);
    std::reverse(path.begin(), path.end());
    std::string joined;
    for (const auto& p : path) joined += (joined.empty() ? "" : " -> ") + p;
    throw Error(ErrorKind::kValidation, "cycle",
                "edge " + edge.from + " -> " + edge.to +
                    " would close the cycle through " + joined,
                std::move(path));
  }
}

const DependencyEdge& TraceGraph::add_dependency(DependencyEdge edge) {
  check_dependency(edge);
  const std::size_t from = require(edge.from);
  const std::size_t to = require(edge.to);
  out_[from].push_back(to);
  in_[to].push_back(from);
  edges_.push_back(std::move(edge));
  return edges_.back();
}

void TraceGraph::restore_edge(DependencyEdge edge) {
  const std::size_t from = intern(edge.from);
  const std::size_t to = intern(edge.to);
  out_[from].push_back(to);
  in_[to].push_back(from);
  edges_.push_back(std::move(edge));
}

std::vector<std::string> TraceGraph::closure(std::string_view artifact_id,
                                             Direction direction) const {
  const std::size_t start = require(artifact_id);
  const auto& walk = direction == Direction::kUpstream ? in_ : out_;

  std::vector<bool> member(ids_.size(), false);
  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> found;
  member[start] = true;
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    for (std::size_t next : walk[n]) {
      if (member[next]) continue;
      member[next] = true;
      found.push_back(next);
      stack.push_back(next);
    }
  }
  member[start] = false;

  // Kahn over the induced subgraph, smallest registration index first.
  std::vector<std::size_t> indegree(ids_.size(), 0);
  for (std::size_t n : found) {
    for (std::size_t next : out_[n]) {
      if (member[next]) ++indegree[next];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t n : found) {
    if (indegree[n] == 0) ready.push(n);
  }
  std::vector<std::string> ordered;
  ordered.reserve(found.size());
  while (!ready.empty()) {
    const std::size_t n = ready.top();
    ready.pop();
    ordered.push_back(ids_[n]);
    for (std::size_t next : out_[n]) {
      if (member[next] && --indegree[next] == 0) ready.push(next);
    }
  }
  return ordered;
}

std::vector<std::string> TraceGraph::neighbors(std::string_view artifact_id,
                                               Direction direction) const {
  const std::size_t n = require(artifact_id);
  auto list = direction == Direction::kUpstream ? in_[n] : out_[n];
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  std::vector<std::string> out;
  for (std::size_t i : list) out.push_back(ids_[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Versions

const Revision& TraceGraph::snapshot_revision(
    std::string label, Timestamp created_at,
    const std::map<std::string, VersionChange>& changes) {
  const int prev = latest_revision();
  const int next = prev + 1;

  for (const auto& [id, change] : changes) {
    if (!has_node(id)) throw unknown_artifact(id);
    const ArtifactVersion* before = version_at(id, prev);
    auto inconsistent = [&](const std::string& why) {
      return Error(ErrorKind::kValidation, "status-inconsistent",
                   "artifact '" + id + "' as " + std::string(to_string(change.status)) +
                       " in revision " + std::to_string(next) + ": " + why);
    };
    switch (change.status) {
      case VersionStatus::kNew:
        if (versions_.contains(id)) throw inconsistent("it already has versions");
        break;
      case VersionStatus::kModified:
        if (before == nullptr) throw inconsistent("no version in the previous revision");
        if (before->content_hash == change.content_hash) {
          throw inconsistent("content hash did not change");
        }
        break;
      case VersionStatus::kUnchanged:
        if (before == nullptr) throw inconsistent("no version in the previous revision");
        if (before->content_hash != change.content_hash) {
          throw inconsistent("content hash changed");
        }
        break;
    }
  }

  for (const auto& [id, change] : changes) {
    versions_[id].push_back({id, next, change.status, change.content_hash,
                             change.classification});
  }
  for (auto& [id, chain] : versions_) {
    if (changes.contains(id) || chain.back().revision != prev) continue;
    ArtifactVersion carried = chain.back();
    carried.revision = next;
    carried.status = VersionStatus::kUnchanged;
    chain.push_back(std::move(carried));
  }
  revisions_.push_back({next, std::move(label), created_at});
  return revisions_.back();
}

const std::vector<ArtifactVersion>& TraceGraph::history(
    std::string_view artifact_id) const {
  static const std::vector<ArtifactVersion> kEmpty;
  require(artifact_id);
  auto it = versions_.find(artifact_id);
  return it == versions_.end() ? kEmpty : it->second;
}

const ArtifactVersion* TraceGraph::version_at(std::string_view artifact_id,
                                              int revision) const {
  auto it = versions_.find(artifact_id);
  if (it == versions_.end()) return nullptr;
  for (const auto& v : it->second) {
    if (v.revision == revision) return &v;
  }
  return nullptr;
}

std::vector<ArtifactVersion> TraceGraph::versions_in(int revision) const {
  std::vector<ArtifactVersion> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (const auto* v = version_at(ids_[i], revision)) out.push_back(*v);
  }
  return out;
}

bool TraceGraph::operator==(const TraceGraph& other) const {
  return ids_ == other.ids_ && registered_ == other.registered_ &&
         edges_ == other.edges_ && revisions_ == other.revisions_ &&
         versions_ == other.versions_;
}

// ---------------------------------------------------------------------------
// Traceability

namespace {

std::string slug(std::string_view name) {
  std::string out;
  for (unsigned char c : name) {
    out.push_back(std::isspace(c) ? '-' : static_cast<char>(std::tolower(c)));
  }
  return out;
}

}  // namespace

LineageReport is_traceable(const TraceGraph& graph, const ArtifactRecord& record,
                           const Taxonomy& taxonomy) {
  LineageReport report;
  report.artifact_id = record.artifact_id;

  report.definition_ok = true;
  for (const auto& d : taxonomy.dimensions) {
    if (!record.classification.assigns(d.id)) {
      report.definition_ok = false;
      report.missing.push_back("dimension:" + slug(d.name));
    }
  }

  const auto& p = record.provenance;
  if (!p.created_at) report.missing.push_back("provenance:created_at");
  if (!p.generator) report.missing.push_back("provenance:generator");
  if (!p.capture_method) report.missing.push_back("provenance:capture_method");
  report.provenance_ok = p.complete();

  report.lineage_ok = true;
  for (const auto& upstream : graph.closure(record.artifact_id, Direction::kUpstream)) {
    if (!graph.has_node(upstream)) {
      report.lineage_ok = false;
      report.missing.push_back("lineage:dangling:" + upstream);
    }
  }
  const auto& chain = graph.history(record.artifact_id);
  if (chain.empty()) {
    report.lineage_ok = false;
    report.missing.push_back("lineage:no-versions");
  } else {
    int expected = chain.front().revision;
    for (const auto& v : chain) {
      for (; expected < v.revision; ++expected) {
        report.lineage_ok = false;
        report.missing.push_back("lineage:gap:" + std::to_string(expected));
      }
      expected = v.revision + 1;
    }
    for (; expected <= graph.latest_revision(); ++expected) {
      report.lineage_ok = false;
      report.missing.push_back("lineage:gap:" + std::to_string(expected));
    }
  }
  return report;
}

Json to_json(const DependencyEdge& edge) {
  return {{"from", edge.from},
          {"to", edge.to},
          {"declared_by", std::string(to_string(edge.declared_by))},
          {"note", edge.note}};
}

DependencyEdge edge_from_json(const Json& json) {
  try {
    return {json.at("from").get<std::string>(), json.at("to").get<std::string>(),
            parse_declared_by(json.at("declared_by").get<std::string>()),
            json.value("note", std::string())};
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kCorrupt, "edge-schema", e.what());
  }
}

Json to_json(const ArtifactVersion& v) {
  return {{"artifact_id", v.artifact_id},
          {"revision", v.revision},
          {"status", std::string(to_string(v.status))},
          {"content_hash", v.content_hash},
          {"classification", to_json(v.classification)}};
}

Json to_json(const LineageReport& r) {
  return {{"artifact_id", r.artifact_id},
          {"definition_ok", r.definition_ok},
          {"provenance_ok", r.provenance_ok},
          {"lineage_ok", r.lineage_ok},
          {"traceable", r.traceable()},
          {"missing", r.missing}};
}

}  // namespace tracelift
