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
#include "tracelift/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tracelift/error.hpp"
#include "tracelift/query.hpp"
#include "tracelift/store.hpp"

namespace tracelift::cli {

namespace fs = std::filesystem;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
    case ErrorKind::kNotFound:
    case ErrorKind::kConflict: return kFailed;
    case ErrorKind::kUsage: return kUsage;
    case ErrorKind::kIo:
    case ErrorKind::kCorrupt: return kIo;
  }
  return kFailed;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kConflict: return "conflict";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kCorrupt: return "corrupt";
  }
  return "?";
}

Error usage(const std::string& code, const std::string& message) {
  return Error(ErrorKind::kUsage, code, message);
}

// "d1=cat1.2:c1.2.1"
std::pair<std::string, Assignment> parse_assign(const std::string& text) {
  const auto eq = text.find('=');
  const auto colon = text.find(':', eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || colon == std::string::npos || eq == 0 ||
      colon == eq + 1 || colon + 1 == text.size()) {
    throw usage("bad-assign", "expected DIM=CATEGORY:CHARACTERISTIC, got '" + text + "'");
  }
  return {text.substr(0, eq),
          {text.substr(eq + 1, colon - eq - 1), text.substr(colon + 1)}};
}

Classification parse_assigns(const std::vector<std::string>& items) {
  Classification c;
  for (const auto& item : items) {
    auto [dim, pair] = parse_assign(item);
    c.assign(dim, std::move(pair));
  }
  return c;
}

std::string origin_text(const std::optional<Origin>& o) {
  return o ? std::string(to_string(*o)) : "unknown";
}

std::string classification_text(const Classification& c) {
  std::string out;
  for (const auto& [dim, pairs] : c.assignments) {
    for (const auto& p : pairs) {
      if (!out.empty()) out += " ";
      out += dim + "=" + p.category + ":" + p.characteristic;
    }
  }
  return out.empty() ? "(unclassified)" : out;
}

std::string taxonomy_text(const Taxonomy& t) {
  std::ostringstream os;
  os << t.version_label << ": " << t.dimensions.size() << " dimensions, "
     << t.category_count() << " categories, " << t.characteristic_count()
     << " characteristics\n";
  for (const auto& d : t.dimensions) {
    os << d.id << "  " << d.name << "\n";
    for (const auto& c : d.categories) {
      os << "  " << c.id << "  " << c.name << "\n";
      for (const auto& ch : c.characteristics) os << "    " << ch.id << "  " << ch.name << "\n";
    }
  }
  return os.str();
}

std::string summary_line(const ArtifactSummary& s) {
  std::ostringstream os;
  os << std::setw(4) << s.seq << "  " << s.artifact_id << "  " << std::left << std::setw(13)
     << to_string(s.phase) << std::setw(8) << origin_text(s.origin) << s.type_id << "  "
     << s.title << "\n";
  return os.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& json, const std::string& text) {
    if (json_) {
      out_ << to_canonical(json) << "\n";
    } else {
      out_ << text;
    }
  }

  fs::path repo_path() const {
    if (const char* env = std::getenv("TRACELIFT_REPO"); env != nullptr && *env != '\0') {
      return env;
    }
    return repo_;
  }

  Repository open(bool writable) const { return Repository::open(repo_path(), {}, writable); }

  Taxonomy load_taxonomy(bool bundled, const std::string& file, int rev) const {
    if (!file.empty()) return parse_taxonomy(read_file_text(file));
    if (rev > 0) return open(false).state().taxonomy_history.at(rev).taxonomy;
    if (bundled) return load_bundled_taxonomy();
    throw usage("missing-source", "pass --bundled, --file or --rev");
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  std::string repo_ = ".";
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Traceability for artifacts of human/AutoML data work", "tracelift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_, "Machine-readable canonical JSON output");
  app.add_option("--repo", repo_, "Repository root (TRACELIFT_REPO overrides)");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // init
  auto* init = app.add_subcommand("init", "Create an empty repository");
  std::string init_mode = "descriptive", data_initial = "human", data_derived = "machine";
  init->add_option("--mode", init_mode, "Default classification mode");
  init->add_option("--data-initial", data_initial, "Origin of initial-data sources");
  init->add_option("--data-derived", data_derived, "Origin of derived-data sources");
  on(init, [&] {
    RepoConfig config{parse_classification_mode(init_mode),
                      {parse_origin(data_initial), parse_origin(data_derived)}};
    auto repo = Repository::init(repo_path(), config);
    emit({{"root", repo.root().string()}, {"config", to_json(repo.config())}},
         "initialized " + repo.root().string() + "\n");
    return kOk;
  });

  // taxonomy
  auto* taxonomy = app.add_subcommand("taxonomy", "Inspect and validate taxonomies");
  taxonomy->require_subcommand(1);
  bool bundled = false, strict = false, descriptive = false;
  std::string tax_file;
  int tax_rev = 0;
  auto* validate = taxonomy->add_subcommand("validate", "Check structural rules");
  validate->add_flag("--bundled", bundled, "Use the bundled taxonomy");
  validate->add_option("--file", tax_file, "Taxonomy JSON file");
  validate->add_option("--rev", tax_rev, "Taxonomy revision in the repository");
  validate->add_flag("--strict", strict, "Require >=2 children per node (default)");
  validate->add_flag("--descriptive", descriptive, "Only uniqueness and emptiness rules");
  on(validate, [&] {
    if (strict && descriptive) throw usage("bad-mode", "--strict and --descriptive conflict");
    const auto mode = descriptive ? ValidationMode::kDescriptive : ValidationMode::kStrict;
    const auto report = validate_taxonomy(load_taxonomy(bundled, tax_file, tax_rev), mode);
    std::string text = report.ok ? "ok\n" : "";
    for (const auto& v : report.violations) {
      text += v.rule + " at '" + v.path + "': " + v.message + "\n";
    }
    emit(to_json(report), text);
    return report.ok ? kOk : kFailed;
  });

  std::string diff_from, diff_to;
  int diff_from_rev = 0, diff_to_rev = 0;
  auto* diff = taxonomy->add_subcommand("diff", "Structural diff of two taxonomies");
  diff->add_option("--from", diff_from, "Earlier taxonomy file ('bundled' for the bundled one)");
  diff->add_option("--to", diff_to, "Later taxonomy file ('bundled' for the bundled one)");
  diff->add_option("--from-rev", diff_from_rev, "Earlier repository revision");
  diff->add_option("--to-rev", diff_to_rev, "Later repository revision");
  on(diff, [&] {
    auto pick = [&](const std::string& file, int rev) {
      return file == "bundled" ? load_bundled_taxonomy() : load_taxonomy(false, file, rev);
    };
    const auto d = diff_taxonomies(pick(diff_from, diff_from_rev), pick(diff_to, diff_to_rev));
    std::string text = d.empty() ? "no structural changes\n" : "";
    for (const auto& delta : d.all()) {
      text += std::string(to_string(delta.kind)) + " " + std::string(to_string(delta.level)) +
              " " + delta.id;
      if (delta.kind == DeltaKind::kRenamed) {
        text += ": '" + delta.name_before + "' -> '" + delta.name_after + "'";
      } else if (delta.kind == DeltaKind::kMoved) {
        text += ": " + delta.parent_before + " -> " + delta.parent_after;
      }
      text += "\n";
    }
    emit(to_json(d), text);
    return kOk;
  });

  auto* show = taxonomy->add_subcommand("show", "Print a taxonomy");
  show->add_flag("--bundled", bundled, "Use the bundled taxonomy");
  show->add_option("--file", tax_file, "Taxonomy JSON file");
  show->add_option("--rev", tax_rev, "Taxonomy revision in the repository");
  on(show, [&] {
    const auto t = load_taxonomy(bundled || (tax_file.empty() && tax_rev == 0), tax_file, tax_rev);
    emit(to_json(t), taxonomy_text(t));
    return kOk;
  });

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Ingest a capture manifest");
  std::string manifest;
  ingest->add_option("--manifest", manifest, "Capture manifest JSON")->required();
  on(ingest, [&] {
    auto repo = open(true);
    const fs::path path(manifest);
    const auto capture = capture_manifest_from_json(parse_json(read_file_text(path), manifest),
                                                    path.parent_path());
    const auto records = repo.ingest_capture(capture);
    Json out = Json::array();
    std::string text;
    for (const auto& r : records) {
      out.push_back(to_json(r));
      text += r.artifact_id + "  " + r.type_id + "  " + r.title + "\n";
    }
    emit(out, text);
    return kOk;
  });

  // create
  auto* create = app.add_subcommand("create", "Record one manually annotated artifact");
  std::string type_id, title, generator, created_at, capture_method = "manual-annotation",
                                                     actor, notes, mode_text;
  std::vector<std::string> assigns;
  create->add_option("--type", type_id, "Catalog type id")->required();
  create->add_option("--title", title, "Title");
  create->add_option("--assign", assigns, "DIM=CATEGORY:CHARACTERISTIC (repeatable)");
  create->add_option("--generator", generator, "human or machine");
  create->add_option("--created-at", created_at, "UTC timestamp (default now)");
  create->add_option("--capture-method", capture_method, "api-dump, manual-annotation, screenshot");
  create->add_option("--actor", actor, "Free-text actor label");
  create->add_option("--notes", notes, "Free-text notes");
  create->add_option("--mode", mode_text, "strict, descriptive or draft");
  on(create, [&] {
    auto repo = open(true);
    ArtifactDraft draft;
    draft.type_id = type_id;
    draft.title = title;
    draft.classification = parse_assigns(assigns);
    draft.provenance.created_at =
        created_at.empty() ? Timestamp::now() : Timestamp::parse(created_at);
    if (!generator.empty()) draft.provenance.generator = parse_origin(generator);
    draft.provenance.capture_method = parse_capture_method(capture_method);
    draft.provenance.actor_label = actor;
    draft.notes = notes;
    std::optional<ClassificationMode> mode;
    if (!mode_text.empty()) mode = parse_classification_mode(mode_text);
    const auto record = repo.create_artifact(std::move(draft), mode);
    emit(to_json(record), record.artifact_id + "\n");
    return kOk;
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Replace dimension assignments");
  std::string artifact;
  classify->add_option("--artifact", artifact, "Artifact id")->required();
  classify->add_option("--assign", assigns, "DIM=CATEGORY:CHARACTERISTIC (repeatable)")
      ->required();
  classify->add_option("--mode", mode_text, "strict, descriptive or draft");
  on(classify, [&] {
    auto repo = open(true);
    std::optional<ClassificationMode> mode;
    if (!mode_text.empty()) mode = parse_classification_mode(mode_text);
    const auto& record = repo.classify(artifact, parse_assigns(assigns), mode);
    emit(to_json(record), classification_text(record.classification) + "\n");
    return kOk;
  });

  // link
  auto* link = app.add_subcommand("link", "Declare a dependency (from is upstream)");
  std::string from, to, declared_by = "human", note;
  link->add_option("--from", from, "Upstream artifact id")->required();
  link->add_option("--to", to, "Downstream artifact id")->required();
  link->add_option("--declared-by", declared_by, "human, machine or inferred");
  link->add_option("--note", note, "Free-text note");
  on(link, [&] {
    auto repo = open(true);
    const auto& edge = repo.add_dependency({from, to, parse_declared_by(declared_by), note});
    emit(to_json(edge), edge.from + " -> " + edge.to + "\n");
    return kOk;
  });

  // snapshot
  auto* snapshot = app.add_subcommand("snapshot", "Record a revision of every artifact");
  std::string label;
  snapshot->add_option("--label", label, "Revision label");
  on(snapshot, [&] {
    auto repo = open(true);
    const auto& rev = repo.snapshot(label);
    const auto versions = repo.state().graph.versions_in(rev.index);
    Json out = {{"index", rev.index}, {"label", rev.label},
                {"created_at", rev.created_at.to_string()}, {"versions", Json::array()}};
    std::string text = "revision " + std::to_string(rev.index) + "\n";
    for (const auto& v : versions) {
      out["versions"].push_back(to_json(v));
      text += "  " + v.artifact_id + "  " + std::string(to_string(v.status)) + "\n";
    }
    emit(out, text);
    return kOk;
  });

  // revise-taxonomy
  auto* revise = app.add_subcommand("revise-taxonomy", "Record a taxonomy revision");
  std::string revision_file;
  bool lenient = false;
  revise->add_option("--file", revision_file, "Revision document")->required();
  revise->add_flag("--lenient", lenient, "Accept merge/split shaped remove+add");
  on(revise, [&] {
    auto repo = open(true);
    auto doc = taxonomy_revision_from_json(parse_json(read_file_text(revision_file), revision_file));
    const auto& rev = repo.revise_taxonomy(std::move(doc.taxonomy), std::move(doc.changelog),
                                           std::move(doc.object_classifications), {lenient});
    emit({{"index", rev.index}}, "taxonomy revision " + std::to_string(rev.index) + "\n");
    return kOk;
  });

  // check-end-conditions
  auto* ends = app.add_subcommand("check-end-conditions", "Evaluate objective end conditions");
  int prev = 0, curr = 0;
  ends->add_option("--prev", prev, "Earlier taxonomy revision")->required();
  ends->add_option("--curr", curr, "Later taxonomy revision")->required();
  on(ends, [&] {
    const auto repo = open(false);
    const auto& history = repo.state().taxonomy_history;
    const auto report = evaluate_end_conditions(history.at(prev), history.at(curr));
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::string text = std::string("no additions or modifications: ") +
                       yes(report.cond1_no_changes) + "\nno merges or splits: " +
                       yes(report.cond2_no_merge_split) + "\nevery characteristic used: " +
                       yes(report.cond3_full_coverage) + "\n";
    for (const auto& id : report.uncovered_characteristics) text += "  uncovered " + id + "\n";
    text += std::string("met: ") + yes(report.met) + "\n";
    Json out = to_json(report);
    out["subjective_checklist"] = subjective_end_conditions();
    emit(out, text);
    return report.met ? kOk : kFailed;
  });

  // coverage
  auto* coverage = app.add_subcommand("coverage", "Objects per characteristic");
  int coverage_rev = 0;
  coverage->add_option("--rev", coverage_rev, "Taxonomy revision (default latest)");
  on(coverage, [&] {
    const auto repo = open(false);
    const auto& history = repo.state().taxonomy_history;
    const int rev = coverage_rev > 0 ? coverage_rev : static_cast<int>(history.size());
    const auto& revision = history.at(rev);
    const auto counts = coverage_report(revision);
    Json out = Json::object();
    std::string text;
    for (const auto& id : revision.taxonomy.characteristic_ids()) {
      out[id] = counts.at(id);
      text += id + "  " + std::to_string(counts.at(id)) + "\n";
    }
    emit({{"revision", rev}, {"counts", out}}, text);
    return kOk;
  });

  // locate
  auto* locate_cmd = app.add_subcommand("locate", "Find artifacts matching every filter");
  std::string f_phase, f_group, f_type, f_origin, f_dim, f_cat, f_char;
  int rev_from = 0, rev_to = 0;
  locate_cmd->add_option("--phase", f_phase, "Workflow phase");
  locate_cmd->add_option("--group", f_group, "Catalog group id");
  locate_cmd->add_option("--type", f_type, "Catalog type id");
  locate_cmd->add_option("--origin", f_origin, "human or machine");
  locate_cmd->add_option("--dimension", f_dim, "Assigned dimension id");
  locate_cmd->add_option("--category", f_cat, "Assigned category id");
  locate_cmd->add_option("--characteristic", f_char, "Assigned characteristic id");
  locate_cmd->add_option("--rev-from", rev_from, "First revision of the range");
  locate_cmd->add_option("--rev-to", rev_to, "Last revision of the range");
  on(locate_cmd, [&] {
    const auto repo = open(false);
    Filter f;
    auto set = [](std::optional<std::string>& slot, const std::string& v) {
      if (!v.empty()) slot = v;
    };
    if (!f_phase.empty()) f.phase = parse_phase(f_phase);
    if (!f_origin.empty()) f.origin = parse_origin(f_origin);
    set(f.group, f_group);
    set(f.type, f_type);
    set(f.dimension, f_dim);
    set(f.category, f_cat);
    set(f.characteristic, f_char);
    if (rev_from > 0) f.revision_from = rev_from;
    if (rev_to > 0) f.revision_to = rev_to;
    Json out = Json::array();
    std::string text;
    for (const auto& s : locate(make_context(repo), f)) {
      out.push_back(to_json(s));
      text += summary_line(s);
    }
    emit(out, text);
    return kOk;
  });

  // summarize
  auto* summarize_cmd = app.add_subcommand("summarize", "Info card for one artifact");
  summarize_cmd->add_option("--artifact", artifact, "Artifact id")->required();
  on(summarize_cmd, [&] {
    const auto repo = open(false);
    const auto ctx = make_context(repo);
    const auto card = summarize(ctx, artifact);
    const auto lineage = is_traceable(repo.state().graph, repo.state().at(artifact), ctx.taxonomy);
    Json out = to_json(card);
    out["traceability"] = to_json(lineage);
    std::string text = summary_line(card.summary);
    text += "classification: " + classification_text(card.classification) + "\n";
    auto join = [](const std::vector<std::string>& ids) {
      std::string s;
      for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
      return s.empty() ? std::string("-") : s;
    };
    text += "upstream: " + join(card.upstream) + "\ndownstream: " + join(card.downstream) + "\n";
    for (const auto& [c, ids] : card.peers) text += "peers " + c + ": " + join(ids) + "\n";
    text += std::string("traceable: ") + (lineage.traceable() ? "yes" : "no (") +
            (lineage.traceable() ? "" : join(lineage.missing) + ")") + "\n";
    emit(out, text);
    return kOk;
  });

  // history
  auto* history_cmd = app.add_subcommand("history", "Versions of one artifact");
  int rev_a = 0, rev_b = 0;
  history_cmd->add_option("--artifact", artifact, "Artifact id")->required();
  history_cmd->add_option("--rev-a", rev_a, "Compare: first revision");
  history_cmd->add_option("--rev-b", rev_b, "Compare: second revision");
  on(history_cmd, [&] {
    const auto repo = open(false);
    if ((rev_a > 0) != (rev_b > 0)) {
      throw usage("bad-compare", "--rev-a and --rev-b go together");
    }
    if (rev_a > 0) {
      const auto cmp = compare_history(make_context(repo), artifact, rev_a, rev_b);
      std::string text = "status: " + std::string(to_string(cmp.status.first)) + " -> " +
                         std::string(to_string(cmp.status.second)) + "\n";
      text += "generator: " + origin_text(cmp.generator.first) + " -> " +
              origin_text(cmp.generator.second) + "\n";
      text += "content: " + std::string(cmp.content_hash.first == cmp.content_hash.second
                                            ? "same"
                                            : "changed") +
              "\n";
      for (const auto& [dim, delta] : cmp.classification) {
        for (const auto& p : delta.removed) text += "  - " + dim + "=" + p.category + ":" + p.characteristic + "\n";
        for (const auto& p : delta.added) text += "  + " + dim + "=" + p.category + ":" + p.characteristic + "\n";
      }
      emit(to_json(cmp), text);
      return kOk;
    }
    Json out = Json::array();
    std::string text;
    for (const auto& v : repo.state().graph.history(artifact)) {
      out.push_back(to_json(v));
      text += std::to_string(v.revision) + "  " + std::string(to_string(v.status)) + "  " +
              v.content_hash.substr(0, 12) + "  " + classification_text(v.classification) + "\n";
    }
    emit(out, text);
    return kOk;
  });

  // trace
  auto* trace = app.add_subcommand("trace", "Traceability check for every artifact");
  on(trace, [&] {
    const auto repo = open(false);
    Json out = Json::array();
    std::string text;
    bool all = true;
    for (const auto& r : repo.state().artifacts) {
      const auto report = is_traceable(repo.state().graph, r, load_bundled_taxonomy());
      all = all && report.traceable();
      out.push_back(to_json(report));
      text += r.artifact_id + "  " + (report.traceable() ? "traceable" : "incomplete");
      for (const auto& m : report.missing) text += " " + m;
      text += "\n";
    }
    emit(out, text);
    return all ? kOk : kFailed;
  });

  // export
  auto* export_cmd = app.add_subcommand("export", "Write the view bundle");
  std::string out_path;
  export_cmd->add_option("--out", out_path, "Output path (default exports/view-bundle.json)");
  on(export_cmd, [&] {
    const auto repo = open(false);
    std::optional<fs::path> target;
    if (!out_path.empty()) target = out_path;
    const auto path = export_view_bundle(repo, target);
    emit({{"path", path.string()}}, path.string() + "\n");
    return kOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    if (json_) {
      out_ << to_canonical({{"error",
                             {{"code", e.code()},
                              {"kind", std::string(to_string(e.kind()))},
                              {"message", e.what()},
                              {"details", e.details()}}}})
           << "\n";
    }
    err_ << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) err_ << "  " << d << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err_ << "error: malformed JSON input: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err_ << "error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace tracelift::cli
