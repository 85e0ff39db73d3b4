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
#include "tracelift/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "tracelift/error.hpp"

namespace tracelift {

namespace fs = std::filesystem;

namespace {

constexpr const char* kConfigFile = "tracelift.json";
constexpr const char* kEventLog = "events.log";
constexpr const char* kLockFile = "tracelift.lock";

Error io_error(const std::string& what, const fs::path& path) {
  return Error(ErrorKind::kIo, "io", what + " '" + path.string() + "': " +
                                         std::strerror(errno));
}

bool is_sha256_hex(std::string_view text) {
  return text.size() == 64 && std::all_of(text.begin(), text.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

std::string revision_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rev-%04d.json", index);
  return buf;
}

Json version_body(const ArtifactVersion& v) {
  return {{"artifact_id", v.artifact_id},
          {"status", std::string(to_string(v.status))},
          {"content_hash", v.content_hash},
          {"classification", to_json(v.classification)}};
}

std::uint32_t be32(std::span<const std::byte> b, std::size_t at) {
  return (std::to_integer<std::uint32_t>(b[at]) << 24) |
         (std::to_integer<std::uint32_t>(b[at + 1]) << 16) |
         (std::to_integer<std::uint32_t>(b[at + 2]) << 8) |
         std::to_integer<std::uint32_t>(b[at + 3]);
}

std::uint32_t be16(std::span<const std::byte> b, std::size_t at) {
  return (std::to_integer<std::uint32_t>(b[at]) << 8) |
         std::to_integer<std::uint32_t>(b[at + 1]);
}

}  // namespace

// ---------------------------------------------------------------------------
// Config and events

Json to_json(const RepoConfig& config) {
  return {{"schema", std::string(kRepoSchema)},
          {"validation_mode", std::string(to_string(config.validation_mode))},
          {"origin_rule", to_json(config.origin_rule)}};
}

RepoConfig repo_config_from_json(const Json& json) {
  if (!json.is_object() || json.value("schema", "") != kRepoSchema) {
    throw Error(ErrorKind::kCorrupt, "config-schema",
                "config is not a " + std::string(kRepoSchema) + " document");
  }
  RepoConfig config;
  config.validation_mode =
      parse_classification_mode(json.value("validation_mode", "descriptive"));
  config.origin_rule = origin_rule_from_json(json.value("origin_rule", Json::object()));
  return config;
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kArtifactCreated: return "ArtifactCreated";
    case EventKind::kArtifactClassified: return "ArtifactClassified";
    case EventKind::kEdgeAdded: return "EdgeAdded";
    case EventKind::kRevisionSnapshotted: return "RevisionSnapshotted";
    case EventKind::kTaxonomyRevised: return "TaxonomyRevised";
    case EventKind::kBlobAttached: return "BlobAttached";
  }
  return "?";
}

EventKind parse_event_kind(std::string_view text) {
  for (auto k : {EventKind::kArtifactCreated, EventKind::kArtifactClassified,
                 EventKind::kEdgeAdded, EventKind::kRevisionSnapshotted,
                 EventKind::kTaxonomyRevised, EventKind::kBlobAttached}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorKind::kCorrupt, "event-schema",
              "unknown event kind '" + std::string(text) + "'");
}

Json to_json(const Event& e) {
  return {{"seq", e.seq},
          {"at", e.at.to_string()},
          {"kind", std::string(to_string(e.kind))},
          {"body", e.body}};
}

Event event_from_json(const Json& json) {
  try {
    return {json.at("seq").get<std::int64_t>(),
            Timestamp::parse(json.at("at").get<std::string>()),
            parse_event_kind(json.at("kind").get<std::string>()), json.at("body")};
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kCorrupt, "event-schema", e.what());
  }
}

// ---------------------------------------------------------------------------
// State

const ArtifactRecord* RepoState::find(std::string_view artifact_id) const {
  auto it = std::find_if(artifacts.begin(), artifacts.end(),
                         [&](const ArtifactRecord& r) { return r.artifact_id == artifact_id; });
  return it == artifacts.end() ? nullptr : &*it;
}

const ArtifactRecord& RepoState::at(std::string_view artifact_id) const {
  if (const auto* r = find(artifact_id)) return *r;
  throw Error(ErrorKind::kNotFound, "unknown-artifact",
              "artifact '" + std::string(artifact_id) + "' does not exist");
}

void apply_event(RepoState& state, const Event& event) {
  const Json& body = event.body;
  switch (event.kind) {
    case EventKind::kArtifactCreated: {
      ArtifactRecord record = artifact_from_json(body);
      if (state.created_seq.contains(record.artifact_id)) {
        throw Error(ErrorKind::kCorrupt, "duplicate-artifact",
                    "artifact '" + record.artifact_id + "' created twice");
      }
      if (const auto& t = record.provenance.created_at) {
        state.created_watermark =
            state.created_watermark ? std::max(*state.created_watermark, *t) : *t;
      }
      state.created_seq[record.artifact_id] = event.seq;
      state.graph.add_node(record.artifact_id);
      state.artifacts.push_back(std::move(record));
      break;
    }
    case EventKind::kArtifactClassified: {
      const auto id = body.at("artifact_id").get<std::string>();
      auto it = std::find_if(state.artifacts.begin(), state.artifacts.end(),
                             [&](const ArtifactRecord& r) { return r.artifact_id == id; });
      if (it == state.artifacts.end()) {
        throw Error(ErrorKind::kNotFound, "unknown-artifact",
                    "artifact '" + id + "' does not exist");
      }
      it->classification = classification_from_json(body.at("classification"));
      it->mode = parse_classification_mode(body.at("mode").get<std::string>());
      break;
    }
    case EventKind::kEdgeAdded:
      state.graph.restore_edge(edge_from_json(body));
      break;
    case EventKind::kRevisionSnapshotted: {
      const int index = body.at("index").get<int>();
      if (index != state.graph.latest_revision() + 1) {
        throw Error(ErrorKind::kCorrupt, "revision-out-of-order",
                    "snapshot index " + std::to_string(index) + " is not next");
      }
      std::map<std::string, VersionChange> changes;
      for (const auto& v : body.at("versions")) {
        changes[v.at("artifact_id").get<std::string>()] = {
            parse_version_status(v.at("status").get<std::string>()),
            v.at("content_hash").get<std::string>(),
            classification_from_json(v.at("classification"))};
      }
      state.graph.snapshot_revision(body.at("label").get<std::string>(),
                                    Timestamp::parse(body.at("created_at").get<std::string>()),
                                    changes);
      state.created_watermark.reset();
      break;
    }
    case EventKind::kTaxonomyRevised:
      state.taxonomy_history.restore(taxonomy_revision_from_json(body));
      break;
    case EventKind::kBlobAttached:
      state.blobs.insert(body.at("hash").get<std::string>());
      break;
  }
  state.last_seq = event.seq;
}

std::vector<Event> read_event_log(const fs::path& root) {
  const std::string text = read_file_text(root / kEventLog);
  std::vector<Event> events;
  std::int64_t expected = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    Event event;
    try {
      event = event_from_json(parse_json(line, "event"));
    } catch (const Error& e) {
      throw Error(ErrorKind::kCorrupt, "log-parse",
                  "first bad seq " + std::to_string(expected) + ": " + e.what());
    }
    if (event.seq != expected) {
      throw Error(ErrorKind::kCorrupt, "log-gap",
                  "first bad seq " + std::to_string(expected) + ": found seq " +
                      std::to_string(event.seq));
    }
    events.push_back(std::move(event));
    ++expected;
  }
  return events;
}

RepoState replay(const fs::path& root) {
  RepoState state;
  for (const auto& event : read_event_log(root)) {
    try {
      apply_event(state, event);
    } catch (const Error& e) {
      throw Error(ErrorKind::kCorrupt, "log-replay",
                  "first bad seq " + std::to_string(event.seq) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kCorrupt, "log-replay",
                  "first bad seq " + std::to_string(event.seq) + ": " + e.what());
    }
  }
  return state;
}

// ---------------------------------------------------------------------------
// Captures

CaptureManifest capture_manifest_from_json(const Json& json, const fs::path& base_dir) {
  try {
    CaptureManifest m;
    m.path = json.at("path").get<std::string>();
    if (m.path.is_relative() && !base_dir.empty()) m.path = base_dir / m.path;
    const auto format = json.at("format").get<std::string>();
    if (format == "json") {
      m.format = CaptureFormat::kJson;
    } else if (format == "image") {
      m.format = CaptureFormat::kImage;
    } else {
      throw Error(ErrorKind::kValidation, "capture-schema",
                  "format must be 'json' or 'image', got '" + format + "'");
    }
    if (auto v = json.value("captured_at", Json()); v.is_string()) {
      m.captured_at = Timestamp::parse(v.get<std::string>());
    }
    m.actor = json.value("actor", std::string());
    for (const auto& d : json.at("demarcations")) {
      Demarcation dm;
      dm.selector = d.value("selector", std::string());
      if (auto r = d.find("region"); r != d.end()) {
        dm.region = Region{r->at("x").get<std::int64_t>(), r->at("y").get<std::int64_t>(),
                           r->at("w").get<std::int64_t>(), r->at("h").get<std::int64_t>()};
      }
      dm.type_id = d.at("type").get<std::string>();
      dm.title = d.value("title", std::string());
      if (auto c = d.find("classification"); c != d.end()) {
        dm.classification = classification_from_json(*c);
      }
      if (auto v = d.value("mode", Json()); v.is_string()) {
        dm.mode = parse_classification_mode(v.get<std::string>());
      }
      if (auto v = d.value("generator", Json()); v.is_string()) {
        dm.generator = parse_origin(v.get<std::string>());
      }
      dm.notes = d.value("notes", std::string());
      m.demarcations.push_back(std::move(dm));
    }
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kValidation, "capture-schema", e.what());
  }
}

std::pair<std::int64_t, std::int64_t> image_dimensions(std::span<const std::byte> b) {
  static constexpr unsigned char kPng[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  auto byte_at = [&](std::size_t i) { return std::to_integer<unsigned>(b[i]); };
  if (b.size() >= 24 && std::memcmp(b.data(), kPng, sizeof kPng) == 0) {
    return {be32(b, 16), be32(b, 20)};
  }
  if (b.size() >= 4 && byte_at(0) == 0xff && byte_at(1) == 0xd8) {
    std::size_t i = 2;
    while (i + 9 < b.size()) {
      if (byte_at(i) != 0xff) break;
      const unsigned marker = byte_at(i + 1);
      if (marker == 0xff) {
        ++i;
        continue;
      }
      const std::size_t length = be16(b, i + 2);
      const bool sof = marker >= 0xc0 && marker <= 0xcf && marker != 0xc4 &&
                       marker != 0xc8 && marker != 0xcc;
      if (sof) return {be16(b, i + 7), be16(b, i + 5)};
      i += 2 + length;
    }
  }
  throw Error(ErrorKind::kValidation, "unsupported-image",
              "capture is not a readable PNG or JPEG image");
}

// ---------------------------------------------------------------------------
// Repository

class Repository::WriterLock {
 public:
  explicit WriterLock(fs::path path) : path_(std::move(path)) {
    int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) {
      if (errno == EEXIST) {
        throw Error(ErrorKind::kConflict, "locked",
                    "another writer holds '" + path_.string() + "'");
      }
      throw io_error("cannot create lock", path_);
    }
    const std::string pid = std::to_string(::getpid()) + "\n";
    [[maybe_unused]] auto n = ::write(fd, pid.data(), pid.size());
    ::close(fd);
  }
  ~WriterLock() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  WriterLock(const WriterLock&) = delete;
  WriterLock& operator=(const WriterLock&) = delete;

 private:
  fs::path path_;
};

Repository::Repository(fs::path root, RepoConfig config, RepoOptions options,
                       std::unique_ptr<WriterLock> lock)
    : root_(std::move(root)),
      config_(std::move(config)),
      options_(std::move(options)),
      lock_(std::move(lock)) {
  if (!options_.clock) options_.clock = &Timestamp::now;
}

Repository::Repository(Repository&&) noexcept = default;
Repository& Repository::operator=(Repository&&) noexcept = default;
Repository::~Repository() = default;

Repository Repository::init(const fs::path& root, const RepoConfig& config,
                            RepoOptions options) {
  std::error_code ec;
  if (fs::exists(root / kConfigFile, ec)) {
    throw Error(ErrorKind::kConflict, "already-initialized",
                "'" + root.string() + "' already holds a repository");
  }
  if (fs::exists(root, ec) && !fs::is_empty(root, ec)) {
    throw Error(ErrorKind::kConflict, "directory-not-empty",
                "'" + root.string() + "' is not empty");
  }
  for (const char* sub : {"taxonomy", "artifacts", "blobs", "exports"}) {
    fs::create_directories(root / sub, ec);
    if (ec) throw Error(ErrorKind::kIo, "io", "cannot create '" + (root / sub).string() + "'");
  }
  write_file_atomic(root / kEventLog, "");
  write_file_atomic(root / kConfigFile, to_canonical(to_json(config)) + "\n");
  return open(root, std::move(options), true);
}

Repository Repository::open(const fs::path& root, RepoOptions options, bool writable) {
  if (!fs::exists(root / kConfigFile)) {
    throw Error(ErrorKind::kNotFound, "not-a-repository",
                "'" + root.string() + "' is not a tracelift repository");
  }
  RepoConfig config = repo_config_from_json(
      parse_json(read_file_text(root / kConfigFile), "repository config"));
  std::unique_ptr<WriterLock> lock;
  if (writable) lock = std::make_unique<WriterLock>(root / kLockFile);
  const auto seed = options.seed;
  Repository repo(root, std::move(config), std::move(options), std::move(lock));
  repo.state_ = replay(root);
  if (seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(*seed), static_cast<std::uint32_t>(*seed >> 32),
                      static_cast<std::uint32_t>(repo.state_.last_seq)};
    repo.rng_.seed(seq);
  } else {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd()};
    repo.rng_.seed(seq);
  }
  return repo;
}

void Repository::require_writable() const {
  if (!lock_) {
    throw Error(ErrorKind::kConflict, "read-only", "repository was opened read-only");
  }
}

ClassificationMode Repository::mode_or_default(std::optional<ClassificationMode> mode) const {
  return mode.value_or(config_.validation_mode);
}

const Event& Repository::append(EventKind kind, Json body) {
  last_event_ = Event{state_.last_seq + 1, options_.clock(), kind, std::move(body)};
  const std::string line = to_canonical(to_json(last_event_)) + "\n";
  const fs::path log = root_ / kEventLog;
  std::FILE* f = std::fopen(log.c_str(), "ab");
  if (f == nullptr) throw io_error("cannot open event log", log);
  const bool ok = std::fwrite(line.data(), 1, line.size(), f) == line.size();
  if (std::fclose(f) != 0 || !ok) throw io_error("cannot append to event log", log);
  return last_event_;
}

void Repository::apply_live(const Event& event) {
  apply_event(state_, event);
  if (event.kind == EventKind::kArtifactCreated ||
      event.kind == EventKind::kArtifactClassified) {
    const auto& record = state_.at(event.body.at("artifact_id").get<std::string>());
    write_file_atomic(root_ / "artifacts" / (record.artifact_id + ".json"),
                      to_canonical(to_json(record)) + "\n");
  } else if (event.kind == EventKind::kTaxonomyRevised) {
    const int index = event.body.at("index").get<int>();
    write_file_atomic(root_ / "taxonomy" / revision_file_name(index),
                      to_canonical(event.body) + "\n");
  }
}

ArtifactRecord Repository::create_artifact(ArtifactDraft draft,
                                           std::optional<ClassificationMode> mode) {
  require_writable();
  const auto& created_at = draft.provenance.created_at;
  if (created_at && state_.created_watermark && *created_at < *state_.created_watermark) {
    throw Error(ErrorKind::kValidation, "provenance-out-of-order",
                "created_at " + created_at->to_string() + " precedes " +
                    state_.created_watermark->to_string() +
                    " of an artifact created earlier in this revision");
  }
  if (draft.payload && !state_.blobs.contains(draft.payload->blob)) {
    throw Error(ErrorKind::kNotFound, "unknown-blob",
                "payload blob '" + draft.payload->blob + "' is not attached");
  }
  std::string id;
  do {
    id = generate_uuid(rng_);
  } while (state_.created_seq.contains(id));
  ArtifactRecord record = tracelift::create_artifact(
      load_artifact_catalog(), load_bundled_taxonomy(), mode_or_default(mode),
      std::move(draft), std::move(id));
  apply_live(append(EventKind::kArtifactCreated, to_json(record)));
  return record;
}

const ArtifactRecord& Repository::classify(std::string_view artifact_id,
                                           const Classification& update,
                                           std::optional<ClassificationMode> mode) {
  require_writable();
  Classification merged = state_.at(artifact_id).classification;
  for (const auto& [dim, pairs] : update.assignments) {
    if (pairs.empty()) {
      merged.assignments.erase(dim);
    } else {
      merged.assignments[dim] = pairs;
    }
  }
  const ClassificationMode effective = mode_or_default(mode);
  validate_classification(merged, load_bundled_taxonomy(), effective);
  apply_live(append(EventKind::kArtifactClassified,
                    {{"artifact_id", std::string(artifact_id)},
                     {"classification", to_json(merged)},
                     {"mode", std::string(to_string(effective))}}));
  return state_.at(artifact_id);
}

const DependencyEdge& Repository::add_dependency(DependencyEdge edge) {
  require_writable();
  state_.graph.check_dependency(edge);
  apply_live(append(EventKind::kEdgeAdded, to_json(edge)));
  return state_.graph.edges().back();
}

const Revision& Repository::snapshot(std::string label,
                                     const std::map<std::string, VersionChange>& changes) {
  require_writable();
  TraceGraph probe = state_.graph;
  const Revision& rev = probe.snapshot_revision(label, options_.clock(), changes);
  Json versions = Json::array();
  for (const auto& v : probe.versions_in(rev.index)) versions.push_back(version_body(v));
  apply_live(append(EventKind::kRevisionSnapshotted,
                    {{"index", rev.index},
                     {"label", rev.label},
                     {"created_at", rev.created_at.to_string()},
                     {"versions", std::move(versions)}}));
  return state_.graph.revisions().back();
}

const Revision& Repository::snapshot(std::string label) {
  const int latest = state_.graph.latest_revision();
  std::map<std::string, VersionChange> changes;
  for (const auto& record : state_.artifacts) {
    const std::string hash = content_hash(record);
    const ArtifactVersion* before = state_.graph.version_at(record.artifact_id, latest);
    VersionStatus status = VersionStatus::kNew;
    if (before != nullptr) {
      status = before->content_hash == hash ? VersionStatus::kUnchanged
                                            : VersionStatus::kModified;
    }
    changes[record.artifact_id] = {status, hash, record.classification};
  }
  return snapshot(std::move(label), changes);
}

const TaxonomyRevision& Repository::revise_taxonomy(
    Taxonomy taxonomy, std::vector<ChangeOp> changelog,
    std::map<std::string, Classification> objects, RecordOptions options) {
  require_writable();
  TaxonomyHistory probe = state_.taxonomy_history;
  const auto& rev = probe.record_revision(std::move(taxonomy), std::move(changelog),
                                          std::move(objects), options);
  apply_live(append(EventKind::kTaxonomyRevised, to_json(rev)));
  return state_.taxonomy_history.revisions().back();
}

fs::path Repository::blob_path(std::string_view hash) const {
  return root_ / "blobs" / std::string(hash);
}

std::string Repository::attach_blob(std::span<const std::byte> bytes) {
  require_writable();
  const std::string hash = sha256_hex(bytes);
  if (state_.blobs.contains(hash)) return hash;
  const fs::path path = blob_path(hash);
  if (!fs::exists(path)) {
    write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                             bytes.size()));
  }
  apply_live(append(EventKind::kBlobAttached,
                    {{"hash", hash}, {"size", static_cast<std::int64_t>(bytes.size())}}));
  return hash;
}

std::string Repository::attach_blob(std::string_view bytes) {
  return attach_blob(std::as_bytes(std::span(bytes.data(), bytes.size())));
}

std::vector<std::byte> Repository::read_blob(std::string_view hash) const {
  if (!is_sha256_hex(hash) || !state_.blobs.contains(std::string(hash))) {
    throw Error(ErrorKind::kNotFound, "unknown-blob",
                "blob '" + std::string(hash) + "' is not attached");
  }
  return read_file_bytes(blob_path(hash));
}

std::vector<ArtifactRecord> Repository::ingest_capture(const CaptureManifest& capture) {
  require_writable();
  if (capture.captured_at && state_.created_watermark &&
      *capture.captured_at < *state_.created_watermark) {
    throw Error(ErrorKind::kValidation, "provenance-out-of-order",
                "captured_at " + capture.captured_at->to_string() + " precedes " +
                    state_.created_watermark->to_string());
  }
  const auto bytes = read_file_bytes(capture.path);
  const auto& catalog = load_artifact_catalog();
  const auto& taxonomy = load_bundled_taxonomy();

  Json doc;
  std::pair<std::int64_t, std::int64_t> size{0, 0};
  if (capture.format == CaptureFormat::kJson) {
    doc = parse_json(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
                     capture.path.string());
  } else {
    size = image_dimensions(bytes);
  }

  std::vector<ArtifactDraft> drafts;
  std::vector<ClassificationMode> modes;
  for (std::size_t i = 0; i < capture.demarcations.size(); ++i) {
    const Demarcation& d = capture.demarcations[i];
    const std::string where = "demarcation #" + std::to_string(i + 1);
    const ArtifactType* type = catalog.find_type(d.type_id);
    if (type == nullptr) {
      throw Error(ErrorKind::kNotFound, "unknown-type",
                  where + ": artifact type '" + d.type_id + "' is not in the catalog");
    }
    std::string selector;
    if (capture.format == CaptureFormat::kJson) {
      bool found = false;
      try {
        found = doc.contains(Json::json_pointer(d.selector));
      } catch (const Json::exception&) {
      }
      if (!found) {
        throw Error(ErrorKind::kValidation, "unresolvable-selector",
                    where + ": '" + d.selector + "' does not resolve in " +
                        capture.path.string());
      }
      selector = d.selector;
    } else {
      const auto& r = d.region;
      if (!r || r->w <= 0 || r->h <= 0 || r->x < 0 || r->y < 0 || r->x + r->w > size.first ||
          r->y + r->h > size.second) {
        throw Error(ErrorKind::kValidation, "unresolvable-selector",
                    where + ": region is missing or outside the " +
                        std::to_string(size.first) + "x" + std::to_string(size.second) +
                        " image");
      }
      selector = "rect:" + std::to_string(r->x) + "," + std::to_string(r->y) + "," +
                 std::to_string(r->w) + "," + std::to_string(r->h);
    }

    Classification classification = d.classification;
    if (type->default_classification) {
      for (const auto& [dim, pairs] : type->default_classification->assignments) {
        if (!classification.assigns(dim)) classification.assignments[dim] = pairs;
      }
    }
    const ClassificationMode mode = d.mode.value_or(ClassificationMode::kDraft);
    validate_classification(classification, taxonomy, mode);

    Provenance provenance;
    provenance.created_at = capture.captured_at;
    provenance.generator = d.generator;
    provenance.actor_label = capture.actor;
    provenance.capture_method = capture.format == CaptureFormat::kJson
                                    ? CaptureMethod::kApiDump
                                    : CaptureMethod::kScreenshot;
    drafts.push_back({d.type_id, d.title.empty() ? type->name : d.title,
                      std::move(classification), std::move(provenance),
                      PayloadRef{"", std::move(selector)}, d.notes});
    modes.push_back(mode);
  }

  const std::string blob = attach_blob(bytes);
  std::vector<ArtifactRecord> records;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    drafts[i].payload->blob = blob;
    records.push_back(create_artifact(std::move(drafts[i]), modes[i]));
  }
  return records;
}

std::vector<Event> Repository::read_events() const { return read_event_log(root_); }

}  // namespace tracelift
