#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "migrank/metrics/android_catalog.hpp"
#include "migrank/metrics/feature_schema.hpp"
#include "migrank/metrics/source_model.hpp"

namespace migrank::metrics {

struct SnapshotFile {
  std::string path;    // repo-relative, forward slashes
  std::string source;
};

struct ExtractionResult {
  FeatureVector features;
  std::vector<std::string> diagnostics;  // lexer/parser recovery notes
};

// All ".java" sources of one project version, parsed once up front. The
// snapshot provides what single-file extraction cannot know on its own: the
// superclass links needed to resolve extends chains (hierarchy depth and the
// Android flags) and the set of type names that makes a call receiver "a
// known class".
//
// Type names are indexed by simple name; when two files declare the same
// simple name, the one from the lexicographically smallest path wins.
class ProjectSnapshot {
 public:
  explicit ProjectSnapshot(std::vector<SnapshotFile> files,
                           AndroidCatalog catalog = AndroidCatalog::bundled());

  const std::vector<std::string>& java_paths() const { return paths_; }
  bool has_file(const std::string& path) const { return by_path_.count(path) > 0; }

  // Extraction over a file already in the snapshot; throws std::out_of_range
  // for unknown paths.
  ExtractionResult extract(const std::string& path) const;

  const AndroidCatalog& catalog() const { return catalog_; }

  // Superclass simple name a type extends, or nullptr when the type is
  // unknown. Used to walk extends chains.
  const std::string* extends_of(const std::string& simple_name) const;
  bool knows_type(const std::string& simple_name) const {
    return extends_by_type_.count(simple_name) > 0;
  }

 private:
  std::vector<std::string> paths_;
  std::unordered_map<std::string, std::size_t> by_path_;
  std::vector<SourceModel> models_;
  std::unordered_map<std::string, std::string> extends_by_type_;
  AndroidCatalog catalog_;
};

// Computes the 56 features for one file. The overloads taking source text
// parse it first (leniently; parse trouble lands in diagnostics, never
// throws). Multi-type files aggregate per top-level type: counts sum,
// binaries OR, nesting/hierarchy depths take the max, cohesion ratios
// average over the file's named types.
ExtractionResult extract_features_detailed(const std::string& path,
                                           const SourceModel& model,
                                           const ProjectSnapshot& snapshot);
ExtractionResult extract_features_detailed(const std::string& path,
                                           const std::string& source,
                                           const ProjectSnapshot& snapshot);
FeatureVector extract_features(const std::string& path, const std::string& source,
                               const ProjectSnapshot& snapshot);

}  // namespace migrank::metrics
