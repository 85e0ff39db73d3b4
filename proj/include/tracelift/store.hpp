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

// On-disk repository.
//
//   <root>/tracelift.json          config (canonical JSON)
//   <root>/events.log              one canonical-JSON event per line
//   <root>/taxonomy/rev-0001.json  accepted taxonomy revisions
//   <root>/artifacts/<id>.json     latest record per artifact (cache)
//   <root>/blobs/<sha256-hex>      content-addressed payloads
//   <root>/exports/                view bundles
//
// The event log is the source of truth; everything else can be rebuilt by
// replay(). Mutations validate, append one or more events, then apply them
// through the same code path replay uses.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracelift/artifact.hpp"
#include "tracelift/evolution.hpp"
#include "tracelift/tracegraph.hpp"

namespace tracelift {

inline constexpr std::string_view kRepoSchema = "tracelift-repo/1";

struct RepoConfig {
  ClassificationMode validation_mode = ClassificationMode::kDescriptive;
  OriginRule origin_rule;

  bool operator==(const RepoConfig&) const = default;
};

Json to_json(const RepoConfig& config);
RepoConfig repo_config_from_json(const Json& json);

enum class EventKind {
  kArtifactCreated,
  kArtifactClassified,
  kEdgeAdded,
  kRevisionSnapshotted,
  kTaxonomyRevised,
  kBlobAttached,
};
std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

struct Event {
  std::int64_t seq = 0;
  Timestamp at;
  EventKind kind = EventKind::kArtifactCreated;
  Json body;

  bool operator==(const Event&) const = default;
};

Json to_json(const Event& event);
Event event_from_json(const Json& json);

// Everything replay() reconstructs.
struct RepoState {
  std::vector<ArtifactRecord> artifacts;  // creation order
  std::map<std::string, std::int64_t> created_seq;
  TraceGraph graph;
  TaxonomyHistory taxonomy_history;
  std::set<std::string> blobs;
  std::int64_t last_seq = 0;
  // Latest created_at among artifacts created since the last snapshot.
  std::optional<Timestamp> created_watermark;

  const ArtifactRecord* find(std::string_view artifact_id) const;
  // Throws Error{kNotFound, "unknown-artifact"}.
  const ArtifactRecord& at(std::string_view artifact_id) const;

  bool operator==(const RepoState&) const = default;
};

struct RepoOptions {
  std::function<Timestamp()> clock;    // defaults to Timestamp::now
  std::optional<std::uint64_t> seed;  // artifact-id RNG; random when unset
};

// A pixel rectangle inside an image capture.
struct Region {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t w = 0;
  std::int64_t h = 0;
};

enum class CaptureFormat { kJson, kImage };

// One artifact marked up inside a capture file. JSON captures use `selector`
// (a JSON pointer such as "/dataset/columns"); image captures use `region`.
struct Demarcation {
  std::string selector;
  std::optional<Region> region;
  std::string type_id;
  std::string title;
  Classification classification;
  std::optional<ClassificationMode> mode;  // draft unless stated
  std::optional<Origin> generator;
  std::string notes;
};

struct CaptureManifest {
  std::filesystem::path path;
  CaptureFormat format = CaptureFormat::kJson;
  std::optional<Timestamp> captured_at;
  std::string actor;
  std::vector<Demarcation> demarcations;
};

// Relative capture paths are resolved against `base_dir`.
CaptureManifest capture_manifest_from_json(const Json& json,
                                           const std::filesystem::path& base_dir = {});

// Pixel size of a PNG or JPEG image. Throws Error{kValidation, "unsupported-image"}.
std::pair<std::int64_t, std::int64_t> image_dimensions(std::span<const std::byte> bytes);

class Repository {
 public:
  // Errors: "already-initialized", "directory-not-empty".
  static Repository init(const std::filesystem::path& root, const RepoConfig& config,
                         RepoOptions options = {});
  // Replays the log. A writable repository holds the writer lock until it is
  // destroyed; errors: "not-a-repository", "locked".
  static Repository open(const std::filesystem::path& root, RepoOptions options = {},
                         bool writable = true);

  Repository(Repository&&) noexcept;
  Repository& operator=(Repository&&) noexcept;
  ~Repository();

  const std::filesystem::path& root() const { return root_; }
  const RepoConfig& config() const { return config_; }
  const RepoState& state() const { return state_; }
  bool writable() const { return lock_ != nullptr; }

  // Classification is validated against the bundled taxonomy under `mode`
  // (config mode by default). Errors: "unknown-type", classification codes,
  // "provenance-out-of-order".
  ArtifactRecord create_artifact(ArtifactDraft draft,
                                 std::optional<ClassificationMode> mode = std::nullopt);

  // Replaces the assignments of every dimension mentioned in `update`.
  const ArtifactRecord& classify(std::string_view artifact_id, const Classification& update,
                                 std::optional<ClassificationMode> mode = std::nullopt);

  const DependencyEdge& add_dependency(DependencyEdge edge);

  // Explicit statuses; artifacts not mentioned are carried as Unchanged.
  const Revision& snapshot(std::string label,
                           const std::map<std::string, VersionChange>& changes);
  // Statuses computed from current content hashes.
  const Revision& snapshot(std::string label);

  const TaxonomyRevision& revise_taxonomy(Taxonomy taxonomy, std::vector<ChangeOp> changelog,
                                          std::map<std::string, Classification> objects,
                                          RecordOptions options = {});

  std::string attach_blob(std::span<const std::byte> bytes);
  std::string attach_blob(std::string_view bytes);
  // Errors: "unknown-blob".
  std::vector<std::byte> read_blob(std::string_view hash) const;

  // Errors: "unknown-type", "unresolvable-selector", "unsupported-image".
  std::vector<ArtifactRecord> ingest_capture(const CaptureManifest& capture);

  std::vector<Event> read_events() const;

  std::filesystem::path blob_path(std::string_view hash) const;
  std::filesystem::path exports_dir() const { return root_ / "exports"; }

 private:
  class WriterLock;

  Repository(std::filesystem::path root, RepoConfig config, RepoOptions options,
             std::unique_ptr<WriterLock> lock);

  void require_writable() const;
  const Event& append(EventKind kind, Json body);
  void apply_live(const Event& event);
  ClassificationMode mode_or_default(std::optional<ClassificationMode> mode) const;

  std::filesystem::path root_;
  RepoConfig config_;
  RepoOptions options_;
  std::unique_ptr<WriterLock> lock_;
  RepoState state_;
  std::mt19937_64 rng_;
  Event last_event_;
};

// Rebuilds state from the event log. Errors name the first bad seq:
// "log-parse" (unreadable line), "log-gap" (seq not contiguous),
// "log-replay" (event rejected).
RepoState replay(const std::filesystem::path& root);

// Applies one persisted event. Used by replay and by the live path.
void apply_event(RepoState& state, const Event& event);

std::vector<Event> read_event_log(const std::filesystem::path& root);

}  // namespace tracelift
