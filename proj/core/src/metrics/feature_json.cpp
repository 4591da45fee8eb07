#include "migrank/metrics/feature_json.hpp"

#include <json.hpp>

#include "migrank/errors.hpp"

namespace migrank::metrics {

std::string to_json(const CommitFeatures& commit) {
  nlohmann::ordered_json j;
  j["sha"] = commit.sha;
  auto& files = j["files"] = nlohmann::ordered_json::array();
  for (const FileFeatures& file : commit.files) {
    nlohmann::ordered_json fj;
    fj["path"] = file.path;
    fj["label"] = file.label;
    nlohmann::ordered_json features;
    auto values = file.features.to_array();
    for (std::size_t i = 0; i < kFeatureCount; ++i)
      features[std::string(feature_names()[i])] = values[i];
    fj["features"] = std::move(features);
    if (!file.diagnostics.empty()) fj["diagnostics"] = file.diagnostics;
    files.push_back(std::move(fj));
  }
  return j.dump(2) + "\n";
}

CommitFeatures commit_features_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("sha") || !j.contains("files"))
    throw std::runtime_error("not a per-commit feature file");
  CommitFeatures commit;
  commit.sha = j.at("sha").get<std::string>();
  for (const auto& fj : j.at("files")) {
    FileFeatures file;
    file.path = fj.at("path").get<std::string>();
    file.label = fj.at("label").get<int>();
    const auto& features = fj.at("features");
    std::array<double, kFeatureCount> values{};
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      std::string key(feature_names()[i]);
      if (!features.contains(key))
        throw std::runtime_error("feature file missing key '" + key + "'");
      values[i] = features.at(key).get<double>();
    }
    file.features = FeatureVector::from_array(values);
    if (fj.contains("diagnostics"))
      file.diagnostics = fj.at("diagnostics").get<std::vector<std::string>>();
    commit.files.push_back(std::move(file));
  }
  return commit;
}

}  // namespace migrank::metrics
