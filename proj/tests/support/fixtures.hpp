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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tracelift/evolution.hpp"
#include "tracelift/store.hpp"

namespace tracelift::testing {

// Removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Deterministic clock: `start`, then `step_ms` later on every call.
std::function<Timestamp()> stepping_clock(Timestamp start, std::int64_t step_ms = 1000);

Timestamp fixture_epoch();

// Minimal valid PNG (IHDR + IDAT + IEND) of the given size.
std::string png_bytes(std::uint32_t width, std::uint32_t height);

// Analysis of a hospital-readmission model with an AutoML tool, in four
// revisions:
//   rev1  initial dataset and wrangling recommendations (one API dump), a
//         machine-produced feature set
//   rev2  the analyst rewrites the feature set; initial model specification
//   rev3  drift and anomaly alerts from deployment monitoring
//   rev4  a saved insight (screenshot) and an interactive dashboard
// Keys of `ids` are the catalog type ids of those eight artifacts.
struct WorkedScenario {
  std::filesystem::path root;
  std::map<std::string, std::string> ids;
};

inline const std::vector<std::string> kScenarioKeys = {
    "initial-dataset", "wrangling-recommendations", "feature-set", "model-specification",
    "drift-alert",     "anomaly-alert",             "saved-insight", "interactive-dashboard"};

// Builds the repository under work_dir/repo (captures under work_dir/captures)
// and releases the writer lock before returning.
WorkedScenario build_worked_scenario(const std::filesystem::path& work_dir);

// Eight taxonomy iterations converging on the bundled taxonomy:
//   1 baseline  (no Organizational Process, c1.1.2 named "goal", extra
//               c3.1.9 and c3.4.3, c4.5.0 in place of c4.5.1/c4.5.2,
//               no Exploring category)
//   2 add       Organizational Process with its two characteristics
//   3 rename    c1.1.2 "goal" -> "intent"
//   4 merge     c3.1.9 into c3.1.2
//   5 split     c4.5.0 into c4.5.1 and c4.5.2
//   6 remove    c3.4.3
//   7 add       Exploring with c4.2.1 and c4.2.2 (equals the bundled taxonomy)
//   8 identical to 7
// Objects are catalog type ids; iteration r classifies the first
// kEvolutionObjectCounts[r-1] of them round-robin over every (category,
// characteristic) pair of each dimension.
inline constexpr int kEvolutionObjectCounts[8] = {8, 12, 16, 24, 32, 44, 52, 52};

struct EvolutionStep {
  Taxonomy taxonomy;
  std::vector<ChangeOp> changelog;
  std::map<std::string, Classification> objects;
};

std::vector<EvolutionStep> evolution_steps();
TaxonomyHistory record_evolution_fixture();

// Round-robin object classification used by the evolution fixture.
std::map<std::string, Classification> round_robin_objects(const Taxonomy& taxonomy,
                                                          std::size_t count);

}  // namespace tracelift::testing
