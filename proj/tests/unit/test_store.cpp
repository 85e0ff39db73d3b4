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
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "expect_error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "tracelift/store.hpp"

using namespace tracelift;
namespace fs = std::filesystem;

namespace {

RepoOptions test_options() {
  return {testing::stepping_clock(testing::fixture_epoch()), 99};
}

Classification full_classification() {
  Classification c;
  c.assign("d1", {"cat1.1", "c1.1.1"});
  c.assign("d2", {"cat2.1", "c2.1.1"});
  c.assign("d3", {"cat3.1", "c3.1.1"});
  c.assign("d4", {"cat4.1", "c4.1.1"});
  return c;
}

ArtifactDraft draft(const std::string& title, std::int64_t minute = 0) {
  ArtifactDraft d;
  d.type_id = "feature-set";
  d.title = title;
  d.classification = full_classification();
  d.provenance = {Timestamp(testing::fixture_epoch().unix_millis() + minute * 60'000),
                  Origin::kHuman, "analyst", CaptureMethod::kManualAnnotation};
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::vector<std::string> out;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string jpeg_bytes(unsigned width, unsigned height) {
  std::string b = {'\xff', '\xd8', '\xff', '\xe0', '\x00', '\x04', '\x00', '\x00',
                   '\xff', '\xc0', '\x00', '\x11', '\x08'};
  b += static_cast<char>(height >> 8);
  b += static_cast<char>(height & 0xff);
  b += static_cast<char>(width >> 8);
  b += static_cast<char>(width & 0xff);
  b += std::string(12, '\0');
  return b;
}

std::span<const std::byte> as_bytes(const std::string& s) {
  return std::as_bytes(std::span<const char>(s.data(), s.size()));
}

}  // namespace

TEST_CASE("init lays out the repository") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  {
    Repository repo = Repository::init(root, {ClassificationMode::kStrict, {}}, test_options());
    CHECK(repo.writable());
    CHECK(repo.config().validation_mode == ClassificationMode::kStrict);
  }
  for (const char* sub : {"taxonomy", "artifacts", "blobs", "exports"}) {
    CHECK(fs::is_directory(root / sub));
  }
  CHECK(fs::file_size(root / "events.log") == 0);
  CHECK(slurp(root / "tracelift.json") ==
        R"({"origin_rule":{"data_derived":"machine","data_initial":"human"},)"
        R"("schema":"tracelift-repo/1","validation_mode":"strict"})"
        "\n");
  CHECK(ERROR_CODE(Repository::init(root, {}, test_options())) == "already-initialized");

  fs::create_directories(dir / "busy");
  write_file_atomic(dir / "busy" / "file.txt", "x");
  CHECK(ERROR_CODE(Repository::init(dir / "busy", {}, test_options())) == "directory-not-empty");
  CHECK(ERROR_CODE(Repository::open(dir / "busy")) == "not-a-repository");
}

TEST_CASE("writer lock and read-only handles") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  Repository writer = Repository::init(root, {}, test_options());
  CHECK(ERROR_CODE(Repository::open(root)) == "locked");
  Repository reader = Repository::open(root, {}, false);
  CHECK_FALSE(reader.writable());
  CHECK(ERROR_CODE(reader.create_artifact(draft("x"))) == "read-only");
  CHECK(ERROR_CODE(reader.snapshot("r")) == "read-only");
}

TEST_CASE("lock is released when the writer goes away") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  { Repository::init(root, {}, test_options()); }
  { Repository again = Repository::open(root, test_options()); }
  CHECK(ERROR_CODE(Repository::open(root, test_options())) == "<no error>");
}

TEST_CASE("create, classify and snapshot append events and update caches") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  Repository repo = Repository::init(root, {}, test_options());
  const ArtifactRecord a = repo.create_artifact(draft("Features"));
  const ArtifactRecord b = repo.create_artifact(draft("Spec", 1));
  CHECK(a.artifact_id != b.artifact_id);
  CHECK(artifact_from_json(parse_json(slurp(root / "artifacts" / (a.artifact_id + ".json")))) ==
        a);
  repo.add_dependency({a.artifact_id, b.artifact_id, DeclaredBy::kHuman, ""});
  CHECK(repo.snapshot("first").index == 1);

  Classification update;
  update.assign("d3", {"cat3.2", "c3.2.1"});
  update.assign("d4", {"cat4.3", "c4.3.1"});
  const ArtifactRecord& changed = repo.classify(b.artifact_id, update);
  CHECK(changed.classification.has_characteristic("c3.2.1"));
  CHECK_FALSE(changed.classification.has_characteristic("c3.1.1"));
  CHECK(changed.classification.has_characteristic("c1.1.1"));
  repo.snapshot("second");

  const auto& g = repo.state().graph;
  CHECK(g.version_at(a.artifact_id, 2)->status == VersionStatus::kUnchanged);
  CHECK(g.version_at(b.artifact_id, 2)->status == VersionStatus::kModified);
  CHECK(g.version_at(b.artifact_id, 2)->content_hash ==
        content_hash(repo.state().at(b.artifact_id)));

  const auto log = lines(root / "events.log");
  REQUIRE(log.size() == 6);
  std::vector<std::string> kinds;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const Json e = parse_json(log[i]);
    CHECK(e.at("seq") == static_cast<int>(i + 1));
    CHECK(to_canonical(e) == log[i]);
    kinds.push_back(e.at("kind").get<std::string>());
  }
  CHECK(kinds == std::vector<std::string>{"ArtifactCreated", "ArtifactCreated", "EdgeAdded",
                                          "RevisionSnapshotted", "ArtifactClassified",
                                          "RevisionSnapshotted"});
  CHECK(replay(root) == repo.state());
}

TEST_CASE("draft classification can drop a dimension") {
  testing::TempDir dir;
  Repository repo = Repository::init(dir / "repo", {}, test_options());
  const auto id = repo.create_artifact(draft("x"), ClassificationMode::kDraft).artifact_id;
  Classification drop;
  drop.assignments["d2"];
  CHECK(ERROR_CODE(repo.classify(id, drop)) == "dimension-unassigned");
  CHECK_FALSE(repo.classify(id, drop, ClassificationMode::kDraft).classification.assigns("d2"));
  CHECK(ERROR_CODE(repo.classify("nope", drop)) == "unknown-artifact");
}

TEST_CASE("creation times may not run backwards within a revision") {
  testing::TempDir dir;
  Repository repo = Repository::init(dir / "repo", {}, test_options());
  repo.create_artifact(draft("late", 10));
  CHECK(ERROR_CODE(repo.create_artifact(draft("early", 5))) == "provenance-out-of-order");
  CHECK(repo.state().last_seq == 1);
  repo.snapshot("cut");
  CHECK(ERROR_CODE(repo.create_artifact(draft("early", 5))) == "<no error>");
}

TEST_CASE("blobs are content addressed") {
  testing::TempDir dir;
  Repository repo = Repository::init(dir / "repo", {}, test_options());
  const std::string hash = repo.attach_blob("hello blob");
  CHECK(repo.attach_blob("hello blob") == hash);
  CHECK(repo.state().last_seq == 1);
  const auto external = testing::external_sha256(repo.blob_path(hash));
  REQUIRE(external);
  CHECK(*external == hash);
  const auto bytes = repo.read_blob(hash);
  CHECK(std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()) == "hello blob");
  CHECK(ERROR_CODE(repo.read_blob("../../etc/passwd")) == "unknown-blob");
  CHECK(ERROR_CODE(repo.read_blob(std::string(64, '0'))) == "unknown-blob");

  ArtifactDraft d = draft("with payload");
  d.payload = PayloadRef{std::string(64, 'f'), ""};
  CHECK(ERROR_CODE(repo.create_artifact(d)) == "unknown-blob");
  d.payload = PayloadRef{hash, ""};
  CHECK(repo.create_artifact(d).payload->blob == hash);
}

TEST_CASE("image dimensions") {
  const std::string png = testing::png_bytes(640, 400);
  CHECK(image_dimensions(as_bytes(png)) == std::pair<std::int64_t, std::int64_t>{640, 400});
  const std::string jpg = jpeg_bytes(200, 100);
  CHECK(image_dimensions(as_bytes(jpg)) == std::pair<std::int64_t, std::int64_t>{200, 100});
  CHECK(ERROR_CODE(image_dimensions(as_bytes(std::string("GIF89a....")))) ==
        "unsupported-image");
}

TEST_CASE("capture manifests") {
  const Json j = parse_json(R"({
    "path": "shot.png", "format": "image", "captured_at": "2026-01-05T09:00:00.000Z",
    "actor": "analyst",
    "demarcations": [{"region": {"x": 1, "y": 2, "w": 3, "h": 4}, "type": "saved-insight",
                      "title": "t", "classification": {"d1": [["cat1.1", "c1.1.1"]]},
                      "generator": "human"}]})");
  const CaptureManifest m = capture_manifest_from_json(j, "/base");
  CHECK(m.path == fs::path("/base/shot.png"));
  CHECK(m.format == CaptureFormat::kImage);
  REQUIRE(m.demarcations.size() == 1);
  CHECK(m.demarcations[0].region->w == 3);
  CHECK(m.demarcations[0].generator == Origin::kHuman);
  CHECK_FALSE(m.demarcations[0].mode.has_value());
  CHECK(ERROR_CODE(capture_manifest_from_json(Json::object())) == "capture-schema");
  CHECK(ERROR_CODE(capture_manifest_from_json(
            parse_json(R"({"path":"a","format":"gif","demarcations":[]})"))) ==
        "capture-schema");
}

TEST_CASE("ingesting captures") {
  testing::TempDir dir;
  Repository repo = Repository::init(dir / "repo", {}, test_options());
  write_file_atomic(dir / "dump.json", R"({"a": {"b": [1, 2]}, "c": 3})");
  CaptureManifest m;
  m.path = dir / "dump.json";
  m.captured_at = testing::fixture_epoch();
  m.actor = "tool";
  Demarcation d;
  d.selector = "/a/b";
  d.type_id = "drift-alert";
  d.generator = Origin::kMachine;
  d.classification.assign("d1", {"cat1.4", "c1.4.3"});
  m.demarcations.push_back(d);

  SUBCASE("bad selector leaves the log untouched") {
    m.demarcations.push_back(d);
    m.demarcations.back().selector = "/a/z";
    CHECK(ERROR_CODE(repo.ingest_capture(m)) == "unresolvable-selector");
    CHECK(repo.state().last_seq == 0);
  }
  SUBCASE("unknown type") {
    m.demarcations[0].type_id = "spreadsheet";
    CHECK(ERROR_CODE(repo.ingest_capture(m)) == "unknown-type");
  }
  SUBCASE("records carry payload, provenance and defaults") {
    const auto records = repo.ingest_capture(m);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.payload->selector == "/a/b");
    CHECK(r.payload->blob == *testing::external_sha256(dir / "dump.json"));
    CHECK(r.provenance.capture_method == CaptureMethod::kApiDump);
    CHECK(r.provenance.created_at == testing::fixture_epoch());
    CHECK(r.provenance.actor_label == "tool");
    CHECK(r.mode == ClassificationMode::kDraft);
    CHECK(r.title == load_artifact_catalog().find_type("drift-alert")->name);
    const auto& defaults = load_artifact_catalog().find_type("drift-alert")->default_classification;
    if (defaults) {
      for (const auto& [dim, pairs] : defaults->assignments) {
        CHECK(r.classification.assigns(dim));
      }
    }
    CHECK(replay(repo.root()) == repo.state());
  }
  SUBCASE("image regions must fit") {
    write_file_atomic(dir / "shot.png", testing::png_bytes(100, 50));
    CaptureManifest shot;
    shot.path = dir / "shot.png";
    shot.format = CaptureFormat::kImage;
    shot.captured_at = testing::fixture_epoch();
    Demarcation region = d;
    region.selector.clear();
    region.region = Region{10, 10, 90, 40};
    shot.demarcations.push_back(region);
    const auto records = repo.ingest_capture(shot);
    CHECK(records[0].payload->selector == "rect:10,10,90,40");
    CHECK(records[0].provenance.capture_method == CaptureMethod::kScreenshot);
    shot.demarcations[0].region = Region{10, 10, 91, 40};
    CHECK(ERROR_CODE(repo.ingest_capture(shot)) == "unresolvable-selector");
  }
}

TEST_CASE("damaged logs name the first bad seq") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  {
    Repository repo = Repository::init(root, {}, test_options());
    repo.create_artifact(draft("a"));
    repo.create_artifact(draft("b", 1));
    repo.snapshot("r1");
  }
  auto log = lines(root / "events.log");
  REQUIRE(log.size() == 3);
  auto rewrite = [&](const std::vector<std::string>& content) {
    std::string text;
    for (const auto& l : content) text += l + "\n";
    write_file_atomic(root / "events.log", text);
  };
  auto message_of = [&] {
    try {
      replay(root);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("<no error>");
  };

  rewrite({log[0], "{not json", log[2]});
  CHECK(ERROR_CODE(replay(root)) == "log-parse");
  CHECK(message_of().find("first bad seq 2") != std::string::npos);

  rewrite({log[0], log[2]});
  CHECK(ERROR_CODE(replay(root)) == "log-gap");
  CHECK(message_of().find("first bad seq 2") != std::string::npos);

  Json dup = parse_json(log[1]);
  dup["body"]["artifact_id"] = parse_json(log[0]).at("body").at("artifact_id");
  rewrite({log[0], to_canonical(dup), log[2]});
  CHECK(ERROR_CODE(replay(root)) == "log-replay");
  CHECK(message_of().find("first bad seq 2") != std::string::npos);
  CHECK(ERROR_CODE(Repository::open(root, {}, false)) == "log-replay");
}

TEST_CASE("an edge from a purged artifact is reported as dangling") {
  testing::TempDir dir;
  const fs::path root = dir / "repo";
  std::string id;
  {
    Repository repo = Repository::init(root, {}, test_options());
    id = repo.create_artifact(draft("kept")).artifact_id;
    repo.snapshot("r1");
  }
  // A log whose upstream artifact was removed by hand.
  Event purged;
  purged.seq = 3;
  purged.at = Timestamp(testing::fixture_epoch().unix_millis() + 3'600'000);
  purged.kind = EventKind::kEdgeAdded;
  purged.body = to_json(DependencyEdge{"purged-id", id, DeclaredBy::kHuman, ""});
  std::ofstream(root / "events.log", std::ios::app) << to_canonical(to_json(purged)) << "\n";

  const Repository repo = Repository::open(root, {}, false);
  const auto report =
      is_traceable(repo.state().graph, repo.state().at(id), load_bundled_taxonomy());
  CHECK_FALSE(report.lineage_ok);
  CHECK(report.missing == std::vector<std::string>{"lineage:dangling:purged-id"});
}

TEST_CASE("the worked scenario replays to the live state") {
  testing::TempDir dir;
  const auto scenario = testing::build_worked_scenario(dir.path());
  CHECK(scenario.ids.size() == testing::kScenarioKeys.size());
  const Repository repo = Repository::open(scenario.root, {}, false);
  CHECK(repo.state().graph.latest_revision() == 4);
  CHECK(repo.state().artifacts.size() == 8);
  CHECK(replay(scenario.root) == repo.state());
}

TEST_CASE("random mutation streams replay exactly") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 8; ++i) {
    testing::TempDir dir;
    const auto failure = testing::check_random_stream(rng, dir.path(), 120);
    CHECK_MESSAGE(failure.empty(), failure);
  }
}
