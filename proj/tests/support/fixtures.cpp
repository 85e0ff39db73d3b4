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
#include "fixtures.hpp"

#include <stdlib.h>

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>

namespace tracelift::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  std::string pattern = (fs::temp_directory_path() / "tracelift-test-XXXXXX").string();
  if (::mkdtemp(pattern.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::function<Timestamp()> stepping_clock(Timestamp start, std::int64_t step_ms) {
  auto next = std::make_shared<std::int64_t>(start.unix_millis());
  return [next, step_ms] {
    Timestamp t(*next);
    *next += step_ms;
    return t;
  };
}

Timestamp fixture_epoch() { return Timestamp::parse("2026-01-05T09:00:00.000Z"); }

// ---------------------------------------------------------------------------
// PNG

namespace {

std::uint32_t crc32(const std::string& bytes) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t n = 0; n < 256; ++n) {
      std::uint32_t c = n;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      t[n] = c;
    }
    return t;
  }();
  std::uint32_t c = 0xffffffffu;
  for (unsigned char b : bytes) c = table[(c ^ b) & 0xff] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

void put32(std::string& out, std::uint32_t v) {
  out += static_cast<char>(v >> 24);
  out += static_cast<char>(v >> 16);
  out += static_cast<char>(v >> 8);
  out += static_cast<char>(v);
}

void chunk(std::string& png, const std::string& type, const std::string& data) {
  put32(png, static_cast<std::uint32_t>(data.size()));
  png += type + data;
  put32(png, crc32(type + data));
}

}  // namespace

std::string png_bytes(std::uint32_t width, std::uint32_t height) {
  std::string ihdr;
  put32(ihdr, width);
  put32(ihdr, height);
  ihdr += std::string("\x08\x00\x00\x00\x00", 5);  // 8-bit grayscale

  // Rows of mid-grey, stored (uncompressed) deflate blocks.
  std::string raw;
  for (std::uint32_t y = 0; y < height; ++y) {
    raw += '\0';
    raw.append(width, static_cast<char>(0x80));
  }
  std::string z = "\x78\x01";
  for (std::size_t at = 0; at < raw.size() || at == 0;) {
    const std::size_t n = std::min<std::size_t>(65535, raw.size() - at);
    const bool last = at + n == raw.size();
    z += static_cast<char>(last ? 1 : 0);
    z += static_cast<char>(n & 0xff);
    z += static_cast<char>(n >> 8);
    z += static_cast<char>(~n & 0xff);
    z += static_cast<char>((~n >> 8) & 0xff);
    z += raw.substr(at, n);
    at += n;
    if (last) break;
  }
  std::uint32_t a = 1, b = 0;
  for (unsigned char c : raw) {
    a = (a + c) % 65521;
    b = (b + a) % 65521;
  }
  put32(z, (b << 16) | a);

  std::string png("\x89PNG\r\n\x1a\n", 8);
  chunk(png, "IHDR", ihdr);
  chunk(png, "IDAT", z);
  chunk(png, "IEND", "");
  return png;
}

// ---------------------------------------------------------------------------
// Worked scenario

namespace {

Classification cls(std::initializer_list<std::pair<std::string, Assignment>> pairs) {
  Classification c;
  for (const auto& [dim, a] : pairs) c.assign(dim, a);
  return c;
}

Provenance manual(Timestamp at, Origin generator, const std::string& actor) {
  return {at, generator, actor, CaptureMethod::kManualAnnotation};
}

}  // namespace

namespace {

Json pair_list(const char* category, const char* characteristic) {
  return Json::array({Json::array({category, characteristic})});
}

}  // namespace

WorkedScenario build_worked_scenario(const fs::path& work_dir) {
  WorkedScenario out;
  out.root = work_dir / "repo";
  const fs::path captures = work_dir / "captures";
  fs::create_directories(captures);

  auto repo = Repository::init(out.root, RepoConfig{},
                               {stepping_clock(fixture_epoch(), 60'000), 20260105});
  auto at = [](int minutes) { return Timestamp(fixture_epoch().unix_millis() + minutes * 60'000LL); };

  // Revision 1: one API dump holds the dataset profile and the recommended
  // wrangling steps; the tool then proposes a feature set.
  write_file_atomic(captures / "automl-run.json", R"({
  "run": {
    "id": "run-17",
    "dataset": {"name": "hospital-readmissions", "rows": 10432,
                "columns": ["age", "length_of_stay", "prior_visits", "readmitted"]},
    "wrangling": {"recommendations": [
      {"op": "impute", "column": "length_of_stay", "strategy": "median"},
      {"op": "one-hot", "column": "age"}]}
  }
})");
  Json dump_manifest = {
      {"path", "automl-run.json"},
      {"format", "json"},
      {"captured_at", at(0).to_string()},
      {"actor", "analyst"},
      {"demarcations",
       {{{"selector", "/run/dataset"},
         {"type", "initial-dataset"},
         {"title", "Initial dataset"},
         {"generator", "human"},
         {"mode", "descriptive"},
         {"classification",
          {{"d1", pair_list("cat1.2", "c1.2.1")},
           {"d2", pair_list("cat2.1", "c2.1.1")},
           {"d3", pair_list("cat3.2", "c3.2.1")},
           {"d4", pair_list("cat4.1", "c4.1.4")}}}},
        {{"selector", "/run/wrangling/recommendations"},
         {"type", "wrangling-recommendations"},
         {"title", "Wrangling recommendations"},
         {"generator", "machine"},
         {"mode", "descriptive"},
         {"classification",
          {{"d1", pair_list("cat1.3", "c1.3.3")},
           {"d2", pair_list("cat2.1", "c2.1.2")},
           {"d3", pair_list("cat3.3", "c3.3.2")},
           {"d4", pair_list("cat4.5", "c4.5.2")}}}}}}};
  const auto dump = repo.ingest_capture(capture_manifest_from_json(dump_manifest, captures));
  out.ids["initial-dataset"] = dump[0].artifact_id;
  out.ids["wrangling-recommendations"] = dump[1].artifact_id;

  out.ids["feature-set"] =
      repo.create_artifact({"feature-set", "Feature set",
                            cls({{"d1", {"cat1.3", "c1.3.3"}},
                                 {"d2", {"cat2.2", "c2.2.2"}},
                                 {"d3", {"cat3.2", "c3.2.1"}},
                                 {"d4", {"cat4.5", "c4.5.1"}}}),
                            manual(at(5), Origin::kMachine, "automl"), std::nullopt,
                            "generated by the AutoML search"})
          .artifact_id;
  repo.add_dependency({out.ids["initial-dataset"], out.ids["wrangling-recommendations"],
                       DeclaredBy::kMachine, ""});
  repo.add_dependency({out.ids["initial-dataset"], out.ids["feature-set"], DeclaredBy::kMachine, ""});
  repo.add_dependency({out.ids["wrangling-recommendations"], out.ids["feature-set"],
                       DeclaredBy::kInferred, "features follow the recommended steps"});
  repo.snapshot("initial AutoML run");

  // Revision 2: the analyst replaces the generated features with their own.
  repo.classify(out.ids["feature-set"], cls({{"d1", {"cat1.1", "c1.1.2"}},
                                             {"d2", {"cat2.1", "c2.1.1"}}}));
  out.ids["model-specification"] =
      repo.create_artifact({"model-specification", "Initial model specification",
                            cls({{"d1", {"cat1.1", "c1.1.2"}},
                                 {"d2", {"cat2.1", "c2.1.1"}},
                                 {"d3", {"cat3.3", "c3.3.1"}},
                                 {"d4", {"cat4.5", "c4.5.1"}}}),
                            manual(at(30), Origin::kHuman, "analyst"), std::nullopt, ""})
          .artifact_id;
  repo.add_dependency({out.ids["feature-set"], out.ids["model-specification"],
                       DeclaredBy::kHuman, ""});
  repo.snapshot("analyst revises features");

  // Revision 3: deployment monitoring raises alerts.
  for (const char* type : {"drift-alert", "anomaly-alert"}) {
    const std::string title =
        std::string(type) == "drift-alert" ? "Data drift alert" : "Anomaly alert";
    out.ids[type] = repo.create_artifact({type, title,
                                          cls({{"d1", {"cat1.4", "c1.4.3"}},
                                               {"d2", {"cat2.1", "c2.1.2"}},
                                               {"d3", {"cat3.1", "c3.1.2"}},
                                               {"d4", {"cat4.1", "c4.1.1"}}}),
                                          {at(60), Origin::kMachine, "monitor",
                                           CaptureMethod::kApiDump},
                                          std::nullopt, ""})
                        .artifact_id;
    repo.add_dependency({out.ids["model-specification"], out.ids[type], DeclaredBy::kMachine, ""});
  }
  repo.snapshot("deployment");

  // Revision 4: an insight saved from the tool's UI and the dashboard it
  // came from.
  write_file_atomic(captures / "insight.png", png_bytes(640, 400));
  Json shot_manifest = {
      {"path", "insight.png"},
      {"format", "image"},
      {"captured_at", at(90).to_string()},
      {"actor", "analyst"},
      {"demarcations",
       {{{"region", {{"x", 24}, {"y", 40}, {"w", 320}, {"h", 180}}},
         {"type", "saved-insight"},
         {"title", "Saved insight: drift on length_of_stay"},
         {"generator", "human"},
         {"mode", "descriptive"},
         {"notes", "bookmarked from the monitoring view"},
         {"classification",
          {{"d1", pair_list("cat1.1", "c1.1.1")},
           {"d2", pair_list("cat2.2", "c2.2.1")},
           {"d3", pair_list("cat3.4", "c3.4.1")}}}}}}};
  out.ids["saved-insight"] =
      repo.ingest_capture(capture_manifest_from_json(shot_manifest, captures))[0].artifact_id;
  out.ids["interactive-dashboard"] =
      repo.create_artifact({"interactive-dashboard", "Monitoring dashboard",
                            cls({{"d1", {"cat1.4", "c1.4.3"}},
                                 {"d2", {"cat2.1", "c2.1.2"}},
                                 {"d3", {"cat3.4", "c3.4.2"}},
                                 {"d4", {"cat4.2", "c4.2.1"}}}),
                            manual(at(95), Origin::kMachine, "automl"), std::nullopt, ""})
          .artifact_id;
  repo.add_dependency({out.ids["drift-alert"], out.ids["interactive-dashboard"],
                       DeclaredBy::kMachine, ""});
  repo.add_dependency({out.ids["anomaly-alert"], out.ids["interactive-dashboard"],
                       DeclaredBy::kMachine, ""});
  repo.add_dependency({out.ids["interactive-dashboard"], out.ids["saved-insight"],
                       DeclaredBy::kHuman, ""});
  repo.snapshot("insights");
  return out;
}

// ---------------------------------------------------------------------------
// Evolution fixture

namespace {

Category& category(Taxonomy& t, const std::string& id) {
  for (auto& d : t.dimensions) {
    for (auto& c : d.categories) {
      if (c.id == id) return c;
    }
  }
  throw std::logic_error("fixture: no category " + id);
}

Dimension& dimension(Taxonomy& t, const std::string& id) {
  for (auto& d : t.dimensions) {
    if (d.id == id) return d;
  }
  throw std::logic_error("fixture: no dimension " + id);
}

template <typename T>
void erase_id(std::vector<T>& items, const std::string& id) {
  std::erase_if(items, [&](const T& x) { return x.id == id; });
}

ChangeOp add(std::string path, std::string name) {
  return {ChangeKind::kAdd, std::move(path), std::move(name), "", {}, ""};
}

}  // namespace

std::map<std::string, Classification> round_robin_objects(const Taxonomy& taxonomy,
                                                          std::size_t count) {
  const auto& types = load_artifact_catalog().types;
  std::map<std::string, Classification> objects;
  for (std::size_t i = 0; i < count && i < types.size(); ++i) {
    Classification c;
    for (const auto& d : taxonomy.dimensions) {
      std::vector<Assignment> pairs;
      for (const auto& cat : d.categories) {
        for (const auto& ch : cat.characteristics) pairs.push_back({cat.id, ch.id});
      }
      if (!pairs.empty()) c.assign(d.id, pairs[i % pairs.size()]);
    }
    objects[types[i].id] = std::move(c);
  }
  return objects;
}

std::vector<EvolutionStep> evolution_steps() {
  const Taxonomy& bundled = load_bundled_taxonomy();
  std::vector<Taxonomy> t(8);
  t[6] = bundled;
  t[7] = bundled;

  t[5] = t[6];
  erase_id(dimension(t[5], "d4").categories, "cat4.2");

  t[4] = t[5];
  category(t[4], "cat3.4").characteristics.push_back(
      {"c3.4.3", "printed", "Printed report."});

  t[3] = t[4];
  auto& steering = category(t[3], "cat4.5").characteristics;
  steering.clear();
  steering.push_back({"c4.5.0", "adjusting", "Artifact adjusts the AutoML process."});

  t[2] = t[3];
  category(t[2], "cat3.1").characteristics.push_back(
      {"c3.1.9", "categorical", "A single categorical value."});

  t[1] = t[2];
  for (auto& ch : category(t[1], "cat1.1").characteristics) {
    if (ch.id == "c1.1.2") ch.name = "goal";
  }

  t[0] = t[1];
  erase_id(dimension(t[0], "d1").categories, "cat1.5");

  const Category& org = *bundled.find_category("cat1.5");
  const Category& exploring = *bundled.find_category("cat4.2");
  std::vector<std::vector<ChangeOp>> logs(8);
  logs[1] = {add("d1/cat1.5", org.name),
             add("d1/cat1.5/c1.5.1", org.characteristics[0].name),
             add("d1/cat1.5/c1.5.2", org.characteristics[1].name)};
  logs[2] = {{ChangeKind::kRename, "d1/cat1.1/c1.1.2", "intent", "", {}, ""}};
  logs[3] = {{ChangeKind::kMerge, "d3/cat3.1/c3.1.2", "", "",
              {{"d3/cat3.1/c3.1.2", ""}, {"d3/cat3.1/c3.1.9", ""}}, ""}};
  logs[4] = {{ChangeKind::kSplit, "d4/cat4.5/c4.5.0", "", "",
              {{"d4/cat4.5/c4.5.1", "directing"}, {"d4/cat4.5/c4.5.2", "refining"}}, ""}};
  logs[5] = {{ChangeKind::kRemove, "d3/cat3.4/c3.4.3", "", "", {}, ""}};
  logs[6] = {add("d4/cat4.2", exploring.name),
             add("d4/cat4.2/c4.2.1", exploring.characteristics[0].name),
             add("d4/cat4.2/c4.2.2", exploring.characteristics[1].name)};

  std::vector<EvolutionStep> steps;
  for (int r = 0; r < 8; ++r) {
    steps.push_back({t[r], logs[r],
                     round_robin_objects(t[r], static_cast<std::size_t>(kEvolutionObjectCounts[r]))});
  }
  return steps;
}

TaxonomyHistory record_evolution_fixture() {
  TaxonomyHistory history;
  for (auto& step : evolution_steps()) {
    history.record_revision(std::move(step.taxonomy), std::move(step.changelog),
                            std::move(step.objects));
  }
  return history;
}

}  // namespace tracelift::testing
