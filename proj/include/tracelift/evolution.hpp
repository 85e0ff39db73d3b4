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

// Iterative taxonomy development: each revision carries an explicit
// changelog that must account for every structural delta against the
// previous revision, plus the object classifications used to judge
// coverage. Convergence is judged by three objective end conditions:
//   1. nothing added or modified since the previous iteration,
//   2. nothing merged or split,
//   3. every characteristic classifies at least one object.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tracelift/classification.hpp"
#include "tracelift/taxonomy.hpp"

namespace tracelift {

enum class ChangeKind { kAdd, kRemove, kRename, kMerge, kSplit, kReclassify };
std::string_view to_string(ChangeKind kind);
ChangeKind parse_change_kind(std::string_view text);

// A path plus the name to give the element when the op creates it.
struct PathName {
  std::string path;
  std::string name;

  bool operator==(const PathName&) const = default;
};

// `subject` is a slash-delimited id path ("d1", "d1/cat1.2",
// "d1/cat1.2/c1.2.1"), or "object:<id>" for a Reclassify of an object.
//
//   Add         subject resolves in the current revision; `name`, `text`
//               (question or description) describe the new element.
//   Remove      subject resolves in the previous revision.
//   Rename      subject resolves in the previous revision; `name` is new.
//   Merge       subject is the surviving element (current revision);
//               `related` lists >=2 source paths in the previous revision;
//               `name` names the target if it is new.
//   Split       subject is the source (previous revision); `related` lists
//               >=2 targets in the current revision with their names.
//   Reclassify  element path in the previous revision moved under `parent`,
//               or "object:<id>" whose classification changed.
struct ChangeOp {
  ChangeKind kind = ChangeKind::kAdd;
  std::string subject;
  std::string name;
  std::string text;
  std::vector<PathName> related;
  std::string parent;

  bool operator==(const ChangeOp&) const = default;
};

struct TaxonomyRevision {
  int index = 0;
  Taxonomy taxonomy;
  std::vector<ChangeOp> changelog;
  std::map<std::string, Classification> object_classifications;

  bool operator==(const TaxonomyRevision&) const = default;
};

struct ChangelogCheck {
  std::vector<std::string> unexplained;  // deltas no op accounts for
  std::vector<std::string> spurious;     // ops with no (or duplicated) delta
  std::vector<std::string> ambiguous;    // merge/split shaped remove+add

  bool ok() const { return unexplained.empty() && spurious.empty() && ambiguous.empty(); }
};

// Pure consistency check of `changelog` against diff_taxonomies(prev, curr).
// Without `lenient`, Remove and Add ops on siblings that look like an
// undeclared merge (>=2 removes, >=1 add) or split (>=1 remove, >=2 adds)
// are reported as ambiguous.
ChangelogCheck check_changelog(const TaxonomyRevision& prev,
                               const TaxonomyRevision& curr, bool lenient);

// Replays `changelog` on `base`: adds, then renames, then moves, then
// removals, so op order inside the changelog does not matter.
Taxonomy apply_changelog(const Taxonomy& base, const std::vector<ChangeOp>& changelog);

struct RecordOptions {
  bool lenient = false;
};

// Ordered list of taxonomy revisions (single writer).
class TaxonomyHistory {
 public:
  // Appends revision `size()+1`. The first revision is the baseline and must
  // have an empty changelog. Errors: "changelog-incomplete",
  // "changelog-spurious", "changelog-undeclared-merge-split",
  // "changelog-inconsistent", plus classification errors for objects.
  const TaxonomyRevision& record_revision(Taxonomy taxonomy,
                                          std::vector<ChangeOp> changelog,
                                          std::map<std::string, Classification> objects,
                                          RecordOptions options = {});
  // Appends a previously accepted revision (log replay); only the index is
  // checked.
  void restore(TaxonomyRevision revision);

  const std::vector<TaxonomyRevision>& revisions() const { return revisions_; }
  std::size_t size() const { return revisions_.size(); }
  // Throws Error{kNotFound, "unknown-revision"}.
  const TaxonomyRevision& at(int index) const;

  bool operator==(const TaxonomyHistory&) const = default;

 private:
  std::vector<TaxonomyRevision> revisions_;
};

struct EndConditionReport {
  bool cond1_no_changes = false;
  bool cond2_no_merge_split = false;
  bool cond3_full_coverage = false;
  std::vector<std::string> uncovered_characteristics;
  bool met = false;
};

// Errors: "non-adjacent-revisions" unless curr.index == prev.index + 1.
EndConditionReport evaluate_end_conditions(const TaxonomyRevision& prev,
                                           const TaxonomyRevision& curr);

// Objects per characteristic id; every characteristic of rev.taxonomy is
// present, including zero counts. An object counts once per characteristic.
std::map<std::string, std::size_t> coverage_report(const TaxonomyRevision& rev);

// Qualitative end conditions that need human sign-off; never computed.
const std::vector<std::string>& subjective_end_conditions();

Json to_json(const ChangeOp& op);
ChangeOp change_op_from_json(const Json& json);
Json to_json(const TaxonomyRevision& revision);
TaxonomyRevision taxonomy_revision_from_json(const Json& json);
Json to_json(const EndConditionReport& report);

}  // namespace tracelift
