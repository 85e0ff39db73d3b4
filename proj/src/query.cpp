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
#include "tracelift/query.hpp"

#include <algorithm>

#include "tracelift/error.hpp"

namespace tracelift {

namespace {

Error unknown_id(const std::string& what, const std::string& id) {
  return Error(ErrorKind::kNotFound, "unknown-id", what + " '" + id + "' is not known");
}

Json origin_json(const std::optional<Origin>& origin) {
  return origin ? Json(std::string(to_string(*origin))) : Json(nullptr);
}

std::optional<Origin> origin_of(const Classification& c, const OriginRule& rule,
                                std::optional<Origin> fallback) {
  if (c.assigns(source_ids::kDimension)) return derive_origin(c, rule);
  return fallback;
}

int phase_rank(Phase p) { return static_cast<int>(p); }

void check_revision(const QueryContext& ctx, int revision) {
  if (revision < 1 || revision > ctx.state.graph.latest_revision()) {
    throw Error(ErrorKind::kNotFound, "unknown-revision",
                "revision " + std::to_string(revision) + " does not exist");
  }
}

}  // namespace

QueryContext make_context(const Repository& repo) {
  return {repo.state(), load_artifact_catalog(), load_bundled_taxonomy(),
          repo.config().origin_rule};
}

std::optional<Origin> artifact_origin(const QueryContext& ctx, const ArtifactRecord& record) {
  return origin_of(record.classification, ctx.origin_rule, record.provenance.generator);
}

ArtifactSummary summarize_record(const QueryContext& ctx, const ArtifactRecord& record) {
  const ArtifactType* type = ctx.catalog.find_type(record.type_id);
  const std::string group = type ? type->group : std::string();
  auto seq = ctx.state.created_seq.find(record.artifact_id);
  return {record.artifact_id,
          record.title,
          record.type_id,
          group,
          ctx.catalog.phase_of(record.type_id),
          artifact_origin(ctx, record),
          seq == ctx.state.created_seq.end() ? 0 : seq->second};
}

std::vector<ArtifactSummary> locate(const QueryContext& ctx, const Filter& f) {
  if (f.group && !ctx.catalog.find_group(*f.group)) throw unknown_id("group", *f.group);
  if (f.type && !ctx.catalog.find_type(*f.type)) throw unknown_id("type", *f.type);
  if (f.dimension && !ctx.taxonomy.find_dimension(*f.dimension)) {
    throw unknown_id("dimension", *f.dimension);
  }
  if (f.category && !ctx.taxonomy.find_category(*f.category)) {
    throw unknown_id("category", *f.category);
  }
  if (f.characteristic && !ctx.taxonomy.locate_characteristic(*f.characteristic)) {
    throw unknown_id("characteristic", *f.characteristic);
  }
  const bool ranged = f.revision_from || f.revision_to;
  const int from = f.revision_from.value_or(1);
  const int to = f.revision_to.value_or(ctx.state.graph.latest_revision());
  if (ranged) {
    check_revision(ctx, from);
    check_revision(ctx, to);
    if (from > to) {
      throw Error(ErrorKind::kUsage, "bad-range",
                  "revision range " + std::to_string(from) + ".." + std::to_string(to) +
                      " is empty");
    }
  }

  std::vector<ArtifactSummary> out;
  for (const auto& record : ctx.state.artifacts) {
    const ArtifactSummary s = summarize_record(ctx, record);
    const Classification& c = record.classification;
    if (f.phase && s.phase != *f.phase) continue;
    if (f.group && s.group != *f.group) continue;
    if (f.type && s.type_id != *f.type) continue;
    if (f.origin && s.origin != f.origin) continue;
    if (f.dimension && !c.assigns(*f.dimension)) continue;
    if (f.category && !c.has_category(*f.category)) continue;
    if (f.characteristic && !c.has_characteristic(*f.characteristic)) continue;
    if (ranged) {
      const auto& chain = ctx.state.graph.history(record.artifact_id);
      const bool present = std::any_of(chain.begin(), chain.end(), [&](const auto& v) {
        return v.revision >= from && v.revision <= to;
      });
      if (!present) continue;
    }
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.seq < b.seq; });
  return out;
}

InfoCard summarize(const QueryContext& ctx, std::string_view artifact_id) {
  const ArtifactRecord& record = ctx.state.at(artifact_id);
  InfoCard card{summarize_record(ctx, record),
                record.classification,
                record.provenance,
                ctx.state.graph.neighbors(artifact_id, Direction::kUpstream),
                ctx.state.graph.neighbors(artifact_id, Direction::kDownstream),
                {}};
  for (const auto& [dim, pairs] : record.classification.assignments) {
    for (const auto& pair : pairs) {
      auto& list = card.peers[pair.characteristic];
      for (const auto& other : ctx.state.artifacts) {
        if (other.artifact_id != record.artifact_id &&
            other.classification.has_characteristic(pair.characteristic)) {
          list.push_back(other.artifact_id);
        }
      }
    }
  }
  return card;
}

HistoryComparison compare_history(const QueryContext& ctx, std::string_view artifact_id,
                                  int rev_a, int rev_b) {
  const ArtifactRecord& record = ctx.state.at(artifact_id);
  const ArtifactVersion* a = ctx.state.graph.version_at(artifact_id, rev_a);
  const ArtifactVersion* b = ctx.state.graph.version_at(artifact_id, rev_b);
  if (a == nullptr || b == nullptr) {
    throw Error(ErrorKind::kNotFound, "missing-version",
                "artifact '" + std::string(artifact_id) + "' has no version in revision " +
                    std::to_string(a == nullptr ? rev_a : rev_b));
  }
  HistoryComparison cmp;
  cmp.artifact_id = record.artifact_id;
  cmp.revisions = {rev_a, rev_b};
  cmp.status = {a->status, b->status};
  cmp.content_hash = {a->content_hash, b->content_hash};
  cmp.generator = {origin_of(a->classification, ctx.origin_rule, record.provenance.generator),
                   origin_of(b->classification, ctx.origin_rule, record.provenance.generator)};

  std::set<std::string> dims;
  for (const auto& [d, _] : a->classification.assignments) dims.insert(d);
  for (const auto& [d, _] : b->classification.assignments) dims.insert(d);
  static const std::set<Assignment> kNone;
  for (const auto& d : dims) {
    auto ia = a->classification.assignments.find(d);
    auto ib = b->classification.assignments.find(d);
    const auto& sa = ia == a->classification.assignments.end() ? kNone : ia->second;
    const auto& sb = ib == b->classification.assignments.end() ? kNone : ib->second;
    ClassificationDelta delta;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::inserter(delta.removed, delta.removed.end()));
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                        std::inserter(delta.added, delta.added.end()));
    if (!delta.removed.empty() || !delta.added.empty()) cmp.classification[d] = delta;
  }
  return cmp;
}

// ---------------------------------------------------------------------------
// View bundle

namespace {

std::string glyph_of(VersionStatus status) {
  return status == VersionStatus::kUnchanged ? "triangle" : "circle";
}

// Non-Interactive artifacts by (phase, seq); each Interactive artifact goes
// right after the last non-Interactive artifact created before it.
std::vector<std::string> dependency_order(const std::vector<ArtifactSummary>& all) {
  std::vector<const ArtifactSummary*> base;
  std::map<std::string, std::vector<std::string>> trailing;
  std::vector<std::string> leading;
  const ArtifactSummary* anchor = nullptr;
  for (const auto& s : all) {
    if (s.phase != Phase::kInteractive) {
      base.push_back(&s);
      anchor = &s;
    } else if (anchor == nullptr) {
      leading.push_back(s.artifact_id);
    } else {
      trailing[anchor->artifact_id].push_back(s.artifact_id);
    }
  }
  std::stable_sort(base.begin(), base.end(), [](const auto* a, const auto* b) {
    return std::pair(phase_rank(a->phase), a->seq) < std::pair(phase_rank(b->phase), b->seq);
  });
  std::vector<std::string> order = leading;
  for (const auto* s : base) {
    order.push_back(s->artifact_id);
    for (const auto& id : trailing[s->artifact_id]) order.push_back(id);
  }
  return order;
}

}  // namespace

Json build_view_bundle(const QueryContext& ctx) {
  const TraceGraph& graph = ctx.state.graph;
  if (graph.latest_revision() == 0) {
    throw Error(ErrorKind::kValidation, "empty-repository",
                "nothing to export: no revision has been snapshotted");
  }
  std::vector<ArtifactSummary> summaries;
  for (const auto& record : ctx.state.artifacts) {
    summaries.push_back(summarize_record(ctx, record));
  }
  std::sort(summaries.begin(), summaries.end(),
            [](const auto& a, const auto& b) { return a.seq < b.seq; });

  Json nodes = Json::array();
  Json origin_nodes = Json::array();
  std::map<std::pair<int, std::string>, int> ribbon_counts;
  for (const auto& s : summaries) {
    const ArtifactRecord& record = ctx.state.at(s.artifact_id);
    Json node = to_json(s);
    node["classification"] = to_json(record.classification);
    node["provenance"] = to_json(record.provenance);
    node["upstream"] = graph.neighbors(s.artifact_id, Direction::kUpstream);
    node["downstream"] = graph.neighbors(s.artifact_id, Direction::kDownstream);
    node["upstream_closure"] = graph.closure(s.artifact_id, Direction::kUpstream);
    node["downstream_closure"] = graph.closure(s.artifact_id, Direction::kDownstream);
    nodes.push_back(std::move(node));

    const std::string origin = s.origin ? std::string(to_string(*s.origin)) : "unknown";
    origin_nodes.push_back(
        {{"id", s.artifact_id}, {"phase", std::string(to_string(s.phase))}, {"origin", origin}});
    ++ribbon_counts[{phase_rank(s.phase), origin}];
  }

  Json phases = Json::array();
  for (Phase p : kAllPhases) phases.push_back(std::string(to_string(p)));
  Json ribbons = Json::array();
  for (const auto& [key, count] : ribbon_counts) {
    ribbons.push_back({{"phase", std::string(to_string(kAllPhases[key.first]))},
                       {"origin", key.second},
                       {"count", count}});
  }

  Json arcs = Json::array();
  for (const auto& e : graph.edges()) {
    arcs.push_back({{"from", e.from}, {"to", e.to},
                    {"declared_by", std::string(to_string(e.declared_by))}});
  }

  Json revisions = Json::array();
  Json rows = Json::array();
  for (const auto& rev : graph.revisions()) {
    revisions.push_back(
        {{"index", rev.index}, {"label", rev.label}, {"created_at", rev.created_at.to_string()}});
    Json cells = Json::array();
    for (const auto& v : graph.versions_in(rev.index)) {
      const ArtifactRecord* record = ctx.state.find(v.artifact_id);
      const auto fallback = record ? record->provenance.generator : std::nullopt;
      cells.push_back({{"artifact_id", v.artifact_id},
                       {"status", std::string(to_string(v.status))},
                       {"glyph", glyph_of(v.status)},
                       {"origin", origin_json(origin_of(v.classification, ctx.origin_rule,
                                                        fallback))},
                       {"content_hash", v.content_hash},
                       {"classification", to_json(v.classification)}});
    }
    rows.push_back({{"revision", rev.index}, {"cells", std::move(cells)}});
  }

  return {{"schema_version", std::string(kViewSchema)},
          {"taxonomy", to_json(ctx.taxonomy)},
          {"nodes", std::move(nodes)},
          {"origin_view",
           {{"phases", std::move(phases)},
            {"nodes", std::move(origin_nodes)},
            {"ribbons", std::move(ribbons)}}},
          {"dependency_view",
           {{"order", dependency_order(summaries)}, {"arcs", std::move(arcs)}}},
          {"history_view", {{"revisions", std::move(revisions)}, {"rows", std::move(rows)}}}};
}

std::filesystem::path export_view_bundle(const Repository& repo,
                                         std::optional<std::filesystem::path> out) {
  const std::filesystem::path path = out.value_or(repo.exports_dir() / "view-bundle.json");
  write_file_atomic(path, to_canonical(build_view_bundle(make_context(repo))) + "\n");
  return path;
}

std::vector<std::string> check_view_bundle(const Json& bundle) {
  std::vector<std::string> problems;
  auto get = [&](const Json& obj, const char* key) -> const Json& {
    static const Json kNull;
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(std::string("missing '") + key + "'");
      return kNull;
    }
    return obj.at(key);
  };
  if (bundle.value("schema_version", "") != kViewSchema) {
    problems.push_back("schema_version is not " + std::string(kViewSchema));
  }
  std::set<std::string> ids;
  for (const auto& n : get(bundle, "nodes")) {
    const Json& id = get(n, "id");
    if (!id.is_string()) {
      problems.push_back("node without a string id");
    } else if (!ids.insert(id.get<std::string>()).second) {
      problems.push_back("duplicate node id '" + id.get<std::string>() + "'");
    }
  }
  auto resolve = [&](const Json& id, const std::string& where) {
    if (!id.is_string() || !ids.contains(id.get<std::string>())) {
      problems.push_back(where + ": dangling id " + id.dump());
    }
  };
  for (const auto& n : get(bundle, "nodes")) {
    for (const char* key : {"upstream", "downstream", "upstream_closure", "downstream_closure"}) {
      for (const auto& id : get(n, key)) resolve(id, std::string("nodes.") + key);
    }
  }
  const Json& origin = get(bundle, "origin_view");
  for (const auto& n : get(origin, "nodes")) resolve(get(n, "id"), "origin_view.nodes");
  const Json& dependency = get(bundle, "dependency_view");
  std::set<std::string> ordered;
  for (const auto& id : get(dependency, "order")) {
    resolve(id, "dependency_view.order");
    if (id.is_string()) ordered.insert(id.get<std::string>());
  }
  if (ordered != ids) problems.push_back("dependency_view.order is not a permutation of nodes");
  for (const auto& a : get(dependency, "arcs")) {
    resolve(get(a, "from"), "dependency_view.arcs");
    resolve(get(a, "to"), "dependency_view.arcs");
  }
  const Json& history = get(bundle, "history_view");
  if (get(history, "rows").size() != get(history, "revisions").size()) {
    problems.push_back("history_view needs one row per revision");
  }
  for (const auto& row : get(history, "rows")) {
    for (const auto& cell : get(row, "cells")) {
      resolve(get(cell, "artifact_id"), "history_view.cells");
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const ArtifactSummary& s) {
  return {{"id", s.artifact_id},
          {"title", s.title},
          {"type", s.type_id},
          {"group", s.group},
          {"phase", std::string(to_string(s.phase))},
          {"origin", origin_json(s.origin)},
          {"seq", s.seq}};
}

Json to_json(const InfoCard& card) {
  Json peers = Json::object();
  for (const auto& [c, ids] : card.peers) peers[c] = ids;
  return {{"summary", to_json(card.summary)},
          {"classification", to_json(card.classification)},
          {"provenance", to_json(card.provenance)},
          {"upstream", card.upstream},
          {"downstream", card.downstream},
          {"peers", std::move(peers)}};
}

Json to_json(const HistoryComparison& cmp) {
  auto pairs = [](const std::set<Assignment>& s) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back({p.category, p.characteristic});
    return out;
  };
  Json classification = Json::object();
  for (const auto& [d, delta] : cmp.classification) {
    classification[d] = {{"removed", pairs(delta.removed)}, {"added", pairs(delta.added)}};
  }
  return {{"artifact_id", cmp.artifact_id},
          {"revisions", {cmp.revisions.first, cmp.revisions.second}},
          {"status",
           {std::string(to_string(cmp.status.first)), std::string(to_string(cmp.status.second))}},
          {"content_hash", {cmp.content_hash.first, cmp.content_hash.second}},
          {"generator", {origin_json(cmp.generator.first), origin_json(cmp.generator.second)}},
          {"classification", std::move(classification)},
          {"empty", cmp.empty()}};
}

}  // namespace tracelift
