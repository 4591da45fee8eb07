#pragma once

#include <string>
#include <vector>

#include "migrank/metrics/feature_schema.hpp"

namespace migrank::metrics {

struct FileFeatures {
  std::string path;
  int label = 0;  // 1 = migrated in this commit
  FeatureVector features;
  std::vector<std::string> diagnostics;
};

// One ranking query's worth of data: every candidate file of the snapshot
// taken at the parent of commit `sha`, with labels.
struct CommitFeatures {
  std::string sha;
  std::vector<FileFeatures> files;
};

// JSON layout (keys in this order; features in canonical schema order):
//   {"sha": "...",
//    "files": [{"path": "...", "label": 0, "features": {"sloc": ..., ...},
//               "diagnostics": [...]}]}
// The diagnostics key is present only when non-empty.
std::string to_json(const CommitFeatures& commit);
CommitFeatures commit_features_from_json(const std::string& text);

}  // namespace migrank::metrics
