#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace migrank::miner {

enum class ChangeStatus { added, deleted, modified, renamed };

// One file touched by a commit. old_path is set for renames only.
struct ChangeRecord {
  ChangeStatus status = ChangeStatus::modified;
  std::string path;
  std::string old_path;

  bool operator==(const ChangeRecord&) const = default;
};

struct CommitDelta {
  std::string sha;
  std::size_t ordinal = 0;  // position in history, oldest commit first
  std::vector<ChangeRecord> changes;
};

// A Java file deleted and a same-stem Kotlin file added by the same commit.
struct MigrationPair {
  std::string java_path;
  std::string kotlin_path;

  bool operator==(const MigrationPair&) const = default;
};

// All migration pairs detected in one commit. ambiguous is set when some stem
// had more than one deleted .java or more than one added .kt candidate, i.e.
// the chosen pairing was not the only admissible one.
struct MigrationEvent {
  std::string sha;
  std::vector<MigrationPair> pairs;
  bool ambiguous = false;
};

// Distribution of migration sizes: key = files migrated in one commit,
// value = number of commits doing so.
struct MigrationHistogram {
  std::map<std::size_t, std::size_t> commits_by_pair_count;
  std::size_t total_pairs = 0;
  std::size_t total_commits = 0;
};

// Parses a "name-status" history listing into commit deltas, oldest first.
//
// Accepted grammar, one entry per line:
//   commit <hex sha>
//   A\t<path>
//   D\t<path>
//   M\t<path>
//   R<score>\t<old path>\t<new path>
// Blank lines are ignored. Anything else raises MalformedLog with the
// 1-based line number. Change lines before the first commit header are
// likewise malformed.
std::vector<CommitDelta> parse_name_status_log(const std::string& text);

// Scans every commit for file-level Java-to-Kotlin conversions: a .java file
// deleted and a .kt file with the same stem added in the same commit. Rename
// records take part as a deletion of the old path plus an addition of the new
// one. Stems compare case-sensitively on the file name minus its extension.
//
// When several files share a stem, same-directory pairs are formed first and
// remaining candidates are paired in lexicographic order; min(k, m) pairs come
// out of a stem with k deleted .java and m added .kt files, and the event is
// flagged ambiguous. Commits without pairs yield no event. Events keep history
// order; pairs within an event are sorted by Java path.
std::vector<MigrationEvent> detect_migrations(const std::vector<CommitDelta>& history);

MigrationHistogram summarize_migrations(const std::vector<MigrationEvent>& events);

}  // namespace migrank::miner
