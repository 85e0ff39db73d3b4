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
#include <random>

#include "doctest.h"
#include "expect_error.hpp"
#include "properties.hpp"
#include "tracelift/tracegraph.hpp"

using namespace tracelift;

namespace {

using Ids = std::vector<std::string>;

TraceGraph diamond() {
  // a -> b -> d, a -> c -> d, registered d, c, b, a
  TraceGraph g;
  for (const char* id : {"d", "c", "b", "a"}) g.add_node(id);
  g.add_dependency({"a", "b", DeclaredBy::kHuman, ""});
  g.add_dependency({"a", "c", DeclaredBy::kMachine, ""});
  g.add_dependency({"b", "d", DeclaredBy::kInferred, ""});
  g.add_dependency({"c", "d", DeclaredBy::kHuman, ""});
  return g;
}

VersionChange change(VersionStatus status, std::string hash) {
  return {status, std::move(hash), {}};
}

ArtifactRecord complete_record(const std::string& id) {
  ArtifactRecord r;
  r.artifact_id = id;
  r.classification.assign("d1", {"cat1.1", "c1.1.1"});
  r.classification.assign("d2", {"cat2.1", "c2.1.1"});
  r.classification.assign("d3", {"cat3.1", "c3.1.1"});
  r.classification.assign("d4", {"cat4.1", "c4.1.1"});
  r.provenance = {Timestamp(1), Origin::kHuman, "", CaptureMethod::kManualAnnotation};
  return r;
}

}  // namespace

TEST_CASE("edge validation") {
  TraceGraph g = diamond();
  CHECK(ERROR_CODE(g.add_dependency({"a", "zz", DeclaredBy::kHuman, ""})) == "unknown-artifact");
  CHECK(ERROR_CODE(g.add_dependency({"b", "b", DeclaredBy::kHuman, ""})) == "self-loop");
  CHECK(ERROR_CODE(g.add_dependency({"a", "b", DeclaredBy::kMachine, "again"})) ==
        "duplicate-edge");
  try {
    g.add_dependency({"d", "a", DeclaredBy::kHuman, ""});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "cycle");
    CHECK(e.kind() == ErrorKind::kValidation);
    // Path from the new edge's target back to its source.
    CHECK(e.details().front() == "a");
    CHECK(e.details().back() == "d");
    CHECK(e.details().size() == 3);
  }
  CHECK(g.edges().size() == 4);
}

TEST_CASE("closures are topological with registration-order ties") {
  const TraceGraph g = diamond();
  CHECK(g.closure("a", Direction::kDownstream) == Ids{"c", "b", "d"});
  CHECK(g.closure("d", Direction::kUpstream) == Ids{"a", "c", "b"});
  CHECK(g.closure("b", Direction::kUpstream) == Ids{"a"});
  CHECK(g.closure("d", Direction::kDownstream).empty());
  CHECK(g.neighbors("a", Direction::kDownstream) == Ids{"c", "b"});
  CHECK(g.neighbors("d", Direction::kUpstream) == Ids{"c", "b"});
  CHECK(g.nodes() == Ids{"d", "c", "b", "a"});
  CHECK(ERROR_CODE(g.closure("zz", Direction::kUpstream)) == "unknown-artifact");
}

TEST_CASE("snapshots carry untouched artifacts forward as Unchanged") {
  TraceGraph g;
  g.add_node("x");
  g.add_node("y");
  g.snapshot_revision("one", Timestamp(10), {{"x", change(VersionStatus::kNew, "h1")}});
  CHECK(g.history("y").empty());
  g.snapshot_revision("two", Timestamp(20), {{"y", change(VersionStatus::kNew, "h2")}});
  REQUIRE(g.history("x").size() == 2);
  CHECK(g.history("x")[1].status == VersionStatus::kUnchanged);
  CHECK(g.history("x")[1].content_hash == "h1");
  CHECK(g.version_at("x", 2) != nullptr);
  CHECK(g.version_at("y", 1) == nullptr);
  CHECK(g.versions_in(2).size() == 2);
  CHECK(g.revisions()[1] == Revision{2, "two", Timestamp(20)});

  g.snapshot_revision("three", Timestamp(30), {{"x", change(VersionStatus::kModified, "h3")}});
  CHECK(g.history("x")[2].status == VersionStatus::kModified);
  CHECK(g.history("y")[1].status == VersionStatus::kUnchanged);
}

TEST_CASE("inconsistent statuses are rejected without side effects") {
  TraceGraph g;
  g.add_node("x");
  g.add_node("y");
  g.snapshot_revision("one", Timestamp(10), {{"x", change(VersionStatus::kNew, "h1")}});
  const TraceGraph before = g;
  using M = std::map<std::string, VersionChange>;
  CHECK(ERROR_CODE(g.snapshot_revision("", Timestamp(), M{{"x", change(VersionStatus::kNew, "h")}})) ==
        "status-inconsistent");
  CHECK(ERROR_CODE(g.snapshot_revision(
            "", Timestamp(), M{{"x", change(VersionStatus::kUnchanged, "other")}})) ==
        "status-inconsistent");
  CHECK(ERROR_CODE(g.snapshot_revision(
            "", Timestamp(), M{{"x", change(VersionStatus::kModified, "h1")}})) ==
        "status-inconsistent");
  CHECK(ERROR_CODE(g.snapshot_revision(
            "", Timestamp(), M{{"y", change(VersionStatus::kModified, "h9")}})) ==
        "status-inconsistent");
  CHECK(ERROR_CODE(g.snapshot_revision(
            "", Timestamp(), M{{"q", change(VersionStatus::kNew, "h9")}})) == "unknown-artifact");
  CHECK(g == before);
}

TEST_CASE("traceability reports what is missing") {
  const Taxonomy& t = load_bundled_taxonomy();
  TraceGraph g;
  g.add_node("up");
  g.add_node("x");
  g.add_dependency({"up", "x", DeclaredBy::kHuman, ""});

  ArtifactRecord r = complete_record("x");
  auto report = is_traceable(g, r, t);
  CHECK_FALSE(report.traceable());
  CHECK(report.missing == Ids{"lineage:no-versions"});

  g.snapshot_revision("one", Timestamp(1), {{"x", change(VersionStatus::kNew, "h")}});
  CHECK(is_traceable(g, r, t).traceable());

  r.classification.assignments.erase("d2");
  r.provenance.generator.reset();
  report = is_traceable(g, r, t);
  CHECK_FALSE(report.definition_ok);
  CHECK_FALSE(report.provenance_ok);
  CHECK(report.lineage_ok);
  CHECK(report.missing == Ids{"dimension:transmission-mode", "provenance:generator"});

  g.restore_edge({"ghost", "up", DeclaredBy::kHuman, ""});
  report = is_traceable(g, complete_record("x"), t);
  CHECK(report.missing == Ids{"lineage:dangling:ghost"});
}

TEST_CASE("JSON forms") {
  const DependencyEdge e{"a", "b", DeclaredBy::kInferred, "n"};
  CHECK(edge_from_json(to_json(e)) == e);
  CHECK(to_json(e).at("declared_by") == "inferred");
  CHECK(ERROR_CODE(edge_from_json(Json::object())) == "edge-schema");
  CHECK(parse_version_status(to_string(VersionStatus::kModified)) == VersionStatus::kModified);
  CHECK(ERROR_CODE(parse_declared_by("robot")) != "<no error>");
}

TEST_CASE("random graphs agree with the reachability oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto failure = testing::check_random_dag(rng, 40, 120, 40);
    CHECK_MESSAGE(failure.empty(), failure);
  }
}

TEST_CASE("random snapshot sequences agree with the version model") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto failure = testing::check_random_snapshots(rng, 10);
    CHECK_MESSAGE(failure.empty(), failure);
  }
}
