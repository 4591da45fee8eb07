#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "migrank/ltr/dataset.hpp"
#include "migrank/metrics/feature_json.hpp"
#include "migrank/metrics/feature_schema.hpp"

namespace testsupport {

inline std::string cli_path() { return MIGRANK_CLI_PATH; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// Scratch directory, wiped on construction and destruction so reruns start
// clean even after a crash.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("migrank-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;  // captured stdout; redirect stderr inside the command
};

// Runs a shell command and captures its standard output. The exit code is
// the command's own; -1 marks abnormal termination.
inline CommandResult run(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, n);
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

// Synthetic ranking data following one planted rule: in every query the
// document with the smallest sloc value carries label 1, the rest 0. Sloc
// values sit on a shared 60-step grid so every step recurs across many
// queries and the learner sees consistent ordering pressure; one-off values
// would leave gaps it can tie or wobble on. All other features are held
// constant so sloc alone decides.
inline std::vector<migrank::ltr::RankingQuery> min_sloc_corpus(std::size_t query_count,
                                                               std::size_t docs_per_query,
                                                               std::uint64_t seed) {
  constexpr int kGridSteps = 60;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step_dist(1, kGridSteps);

  std::vector<migrank::ltr::RankingQuery> queries;
  queries.reserve(query_count);
  for (std::size_t q = 0; q < query_count; ++q) {
    migrank::ltr::RankingQuery query;
    query.query_id = "q" + std::to_string(1000 + q);

    std::set<int> slocs;
    while (slocs.size() < docs_per_query) slocs.insert(1000 * step_dist(rng));
    std::vector<int> sloc_values(slocs.begin(), slocs.end());
    std::shuffle(sloc_values.begin(), sloc_values.end(), rng);
    int min_sloc = *std::min_element(sloc_values.begin(), sloc_values.end());

    for (std::size_t d = 0; d < docs_per_query; ++d) {
      migrank::metrics::FeatureVector fv;
      fv.sloc = sloc_values[d];
      fv.wmc = 10;
      fv.methods = 5;
      migrank::ltr::RankingDocument doc;
      doc.doc_id = "f" + std::to_string(100 + d) + ".java";
      auto arr = fv.to_array();
      doc.features.assign(arr.begin(), arr.end());
      doc.label = sloc_values[d] == min_sloc ? 1 : 0;
      query.documents.push_back(std::move(doc));
    }
    queries.push_back(std::move(query));
  }
  return queries;
}

// Writes a corpus as one commit-features JSON file per query, the layout the
// command-line train/evaluate modes consume.
inline void write_feature_dir(const std::filesystem::path& dir,
                              const std::vector<migrank::ltr::RankingQuery>& queries) {
  std::filesystem::create_directories(dir);
  for (const auto& query : queries) {
    migrank::metrics::CommitFeatures commit;
    commit.sha = query.query_id;
    for (const auto& doc : query.documents) {
      migrank::metrics::FileFeatures file;
      file.path = doc.doc_id;
      file.label = doc.label;
      std::array<double, migrank::metrics::kFeatureCount> arr{};
      for (std::size_t i = 0; i < arr.size() && i < doc.features.size(); ++i)
        arr[i] = doc.features[i];
      file.features = migrank::metrics::FeatureVector::from_array(arr);
      commit.files.push_back(std::move(file));
    }
    write_file(dir / (query.query_id + ".json"), migrank::metrics::to_json(commit));
  }
}

}  // namespace testsupport
