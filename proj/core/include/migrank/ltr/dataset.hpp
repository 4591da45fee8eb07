#pragma once

#include <map>
#include <string>
#include <vector>

#include "migrank/metrics/feature_json.hpp"
#include "migrank/metrics/feature_schema.hpp"
#include "migrank/miner/history.hpp"

namespace migrank::ltr {

struct RankingDocument {
  std::string doc_id;            // file path
  std::vector<double> features;  // canonical schema order
  int label = 0;                 // 1 = migrated
};

struct RankingQuery {
  std::string query_id;  // commit sha
  std::vector<RankingDocument> documents;
};

// Feature vectors of every ".java" file in the snapshot at the parent of one
// migration commit, keyed by path.
using SnapshotFeatures = std::map<std::string, metrics::FeatureVector>;

// One query per event: the documents are the snapshot's files, labelled 1
// exactly on the Java side of the event's migration pairs. Queries that end
// up with no positive or no negative label are unusable for pairwise
// training and are dropped with a note in `diagnostics`.
//
// Throws MissingSnapshot when an event's sha has no entry in `snapshots`.
std::vector<RankingQuery> build_dataset(
    const std::vector<miner::MigrationEvent>& events,
    const std::map<std::string, SnapshotFeatures>& snapshots,
    std::vector<std::string>* diagnostics = nullptr);

// Same query construction from per-commit feature files, which already carry
// labels. Degenerate queries are dropped the same way.
std::vector<RankingQuery> queries_from_commit_features(
    const std::vector<metrics::CommitFeatures>& commits,
    std::vector<std::string>* diagnostics = nullptr);

// Keeps every query, also label-degenerate ones; evaluation wants those.
std::vector<RankingQuery> queries_from_commit_features_keep_all(
    const std::vector<metrics::CommitFeatures>& commits);

}  // namespace migrank::ltr
