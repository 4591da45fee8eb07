#pragma once

#include <map>
#include <string>
#include <vector>

#include "migrank/ltr/dataset.hpp"
#include "migrank/ltr/tree.hpp"

namespace migrank::ltr {

struct RankerModel {
  std::vector<RegressionTree> trees;
  TrainConfig config;
  std::vector<std::string> feature_names;
  double base_score = 0.5;
  std::string fingerprint;  // FNV-1a over the training set, hex
};

struct TrainLog {
  std::vector<double> round_loss;  // objective after each boosting round
};

// Boosting loop: per round, lambda gradients per query, one regression tree
// over all documents, scores bumped by learning_rate * tree output.
// Deterministic: same dataset order + config give byte-identical models.
// Throws EmptyDataset on an empty dataset and std::invalid_argument on a
// config violating its bounds (rounds >= 1, learning_rate in (0,1],
// max_depth >= 1).
RankerModel train(const std::vector<RankingQuery>& dataset, const TrainConfig& config,
                  TrainLog* log = nullptr);

// base_score + learning_rate-scaled sum of tree outputs, per document.
// Throws FeatureArityMismatch when a document's feature count differs from
// the model's.
std::vector<double> predict(const RankerModel& model,
                            const std::vector<RankingDocument>& documents);
double predict_one(const RankerModel& model, const std::vector<double>& features);

// Indices into `documents`, best first: descending score, ties by ascending
// doc_id.
std::vector<std::size_t> rank(const std::vector<RankingDocument>& documents,
                              const std::vector<double>& scores);

// Total split gain per feature, normalized to sum 1. Throws NoSplits when no
// tree ever split.
std::map<std::string, double> feature_importance(const RankerModel& model);

std::string serialize_model(const RankerModel& model);
RankerModel deserialize_model(const std::string& bytes);

}  // namespace migrank::ltr
