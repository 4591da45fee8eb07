#include "migrank/ltr/dataset.hpp"

#include <algorithm>
#include <set>

#include "migrank/errors.hpp"

namespace migrank::ltr {

namespace {

bool usable(const RankingQuery& query, std::vector<std::string>* diagnostics) {
  std::size_t positives = 0;
  for (const RankingDocument& doc : query.documents) positives += doc.label == 1;
  if (positives > 0 && positives < query.documents.size()) return true;
  if (diagnostics)
    diagnostics->push_back("dropped query " + query.query_id +
                           (positives == 0 ? ": no positive label"
                                           : ": no negative label"));
  return false;
}

}  // namespace

std::vector<RankingQuery> build_dataset(
    const std::vector<miner::MigrationEvent>& events,
    const std::map<std::string, SnapshotFeatures>& snapshots,
    std::vector<std::string>* diagnostics) {
  std::vector<RankingQuery> queries;
  for (const miner::MigrationEvent& event : events) {
    auto snapshot = snapshots.find(event.sha);
    if (snapshot == snapshots.end()) throw MissingSnapshot(event.sha);

    std::set<std::string> migrated;
    for (const miner::MigrationPair& pair : event.pairs) migrated.insert(pair.java_path);

    RankingQuery query;
    query.query_id = event.sha;
    for (const auto& [path, features] : snapshot->second) {
      RankingDocument doc;
      doc.doc_id = path;
      auto values = features.to_array();
      doc.features.assign(values.begin(), values.end());
      doc.label = migrated.count(path) ? 1 : 0;
      query.documents.push_back(std::move(doc));
    }
    if (usable(query, diagnostics)) queries.push_back(std::move(query));
  }
  return queries;
}

std::vector<RankingQuery> queries_from_commit_features_keep_all(
    const std::vector<metrics::CommitFeatures>& commits) {
  std::vector<RankingQuery> queries;
  for (const metrics::CommitFeatures& commit : commits) {
    RankingQuery query;
    query.query_id = commit.sha;
    for (const metrics::FileFeatures& file : commit.files) {
      RankingDocument doc;
      doc.doc_id = file.path;
      auto values = file.features.to_array();
      doc.features.assign(values.begin(), values.end());
      doc.label = file.label;
      query.documents.push_back(std::move(doc));
    }
    std::sort(query.documents.begin(), query.documents.end(),
              [](const RankingDocument& a, const RankingDocument& b) {
                return a.doc_id < b.doc_id;
              });
    queries.push_back(std::move(query));
  }
  return queries;
}

std::vector<RankingQuery> queries_from_commit_features(
    const std::vector<metrics::CommitFeatures>& commits,
    std::vector<std::string>* diagnostics) {
  std::vector<RankingQuery> queries;
  for (RankingQuery& query : queries_from_commit_features_keep_all(commits))
    if (usable(query, diagnostics)) queries.push_back(std::move(query));
  return queries;
}

}  // namespace migrank::ltr
