#include "migrank/ltr/model.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "migrank/errors.hpp"
#include "migrank/hash.hpp"
#include "migrank/ltr/objective.hpp"
#include "migrank/metrics/feature_schema.hpp"

namespace migrank::ltr {

namespace {

void validate(const TrainConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (!(config.learning_rate > 0) || config.learning_rate > 1)
    throw std::invalid_argument("learning_rate must be in (0, 1]");
  if (config.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (config.min_child_weight < 0)
    throw std::invalid_argument("min_child_weight must be >= 0");
  if (config.reg_lambda < 0) throw std::invalid_argument("reg_lambda must be >= 0");
  if (!(config.sigma > 0)) throw std::invalid_argument("sigma must be > 0");
}

std::string dataset_fingerprint(const std::vector<RankingQuery>& dataset) {
  std::uint64_t hash = kFnvOffsetBasis;
  for (const RankingQuery& query : dataset) {
    hash = fnv1a64(query.query_id, hash);
    for (const RankingDocument& doc : query.documents) {
      hash = fnv1a64(doc.doc_id, hash);
      hash = fnv1a64(&doc.label, sizeof(doc.label), hash);
      hash = fnv1a64(doc.features.data(), doc.features.size() * sizeof(double), hash);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::vector<std::string> default_feature_names(std::size_t arity) {
  std::vector<std::string> names;
  if (arity == metrics::kFeatureCount) {
    for (auto name : metrics::feature_names()) names.emplace_back(name);
  } else {
    for (std::size_t i = 0; i < arity; ++i) names.push_back("f" + std::to_string(i));
  }
  return names;
}

nlohmann::ordered_json tree_to_json(const RegressionTree& tree) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const TreeNode& n : tree.nodes) {
    nlohmann::ordered_json nj;
    if (n.feature < 0) {
      nj["weight"] = n.weight;
    } else {
      nj["feature"] = n.feature;
      nj["threshold"] = n.threshold;
      nj["left"] = n.left;
      nj["right"] = n.right;
      nj["gain"] = n.gain;
    }
    nodes.push_back(std::move(nj));
  }
  nlohmann::ordered_json tj;
  tj["nodes"] = std::move(nodes);
  return tj;
}

RegressionTree tree_from_json(const nlohmann::json& tj) {
  if (!tj.is_object() || !tj.contains("nodes") || !tj.at("nodes").is_array())
    throw CorruptModel("tree without nodes array");
  RegressionTree tree;
  const auto& nodes = tj.at("nodes");
  for (const auto& nj : nodes) {
    TreeNode node;
    if (nj.contains("feature")) {
      node.feature = nj.at("feature").get<int>();
      node.threshold = nj.at("threshold").get<double>();
      node.left = nj.at("left").get<int>();
      node.right = nj.at("right").get<int>();
      node.gain = nj.value("gain", 0.0);
      if (node.feature < 0) throw CorruptModel("negative split feature");
    } else if (nj.contains("weight")) {
      node.weight = nj.at("weight").get<double>();
    } else {
      throw CorruptModel("node is neither split nor leaf");
    }
    tree.nodes.push_back(node);
  }
  if (tree.nodes.empty()) throw CorruptModel("empty tree");
  int count = static_cast<int>(tree.nodes.size());
  for (const TreeNode& n : tree.nodes) {
    if (n.feature < 0) continue;
    if (n.left < 0 || n.left >= count || n.right < 0 || n.right >= count)
      throw CorruptModel("child index out of range");
  }
  return tree;
}

}  // namespace

RankerModel train(const std::vector<RankingQuery>& dataset, const TrainConfig& config,
                  TrainLog* log) {
  validate(config);
  std::size_t total_docs = 0;
  for (const RankingQuery& query : dataset) total_docs += query.documents.size();
  if (dataset.empty() || total_docs == 0) throw EmptyDataset();

  std::size_t arity = 0;
  for (const RankingQuery& query : dataset) {
    if (!query.documents.empty()) {
      arity = query.documents.front().features.size();
      break;
    }
  }
  for (const RankingQuery& query : dataset)
    for (const RankingDocument& doc : query.documents)
      if (doc.features.size() != arity)
        throw FeatureArityMismatch(arity, doc.features.size());

  FeatureMatrix matrix;
  matrix.cols = arity;
  matrix.values.reserve(total_docs * arity);
  std::vector<std::pair<std::size_t, std::size_t>> query_spans;  // [begin, end) rows
  std::vector<int> labels;
  labels.reserve(total_docs);
  for (const RankingQuery& query : dataset) {
    std::size_t begin = labels.size();
    for (const RankingDocument& doc : query.documents) {
      matrix.values.insert(matrix.values.end(), doc.features.begin(), doc.features.end());
      labels.push_back(doc.label);
    }
    query_spans.emplace_back(begin, labels.size());
  }

  RankerModel model;
  model.config = config;
  model.base_score = config.base_score;
  model.feature_names = default_feature_names(arity);
  model.fingerprint = dataset_fingerprint(dataset);

  std::vector<double> scores(total_docs, config.base_score);
  std::vector<double> gradients(total_docs), hessians(total_docs);
  std::vector<double> q_scores, q_grad;
  std::vector<int> q_labels;

  for (int round = 0; round < config.rounds; ++round) {
    std::fill(gradients.begin(), gradients.end(), 0.0);
    std::fill(hessians.begin(), hessians.end(), 0.0);
    for (const auto& [begin, end] : query_spans) {
      q_scores.assign(scores.begin() + begin, scores.begin() + end);
      q_labels.assign(labels.begin() + begin, labels.begin() + end);
      LambdaResult lambdas = compute_lambdas(q_scores, q_labels, config.sigma);
      std::copy(lambdas.gradients.begin(), lambdas.gradients.end(),
                gradients.begin() + begin);
      std::copy(lambdas.hessians.begin(), lambdas.hessians.end(),
                hessians.begin() + begin);
    }

    RegressionTree tree = fit_tree(matrix, gradients, hessians, config);
    for (std::size_t r = 0; r < total_docs; ++r)
      scores[r] += config.learning_rate * tree.value(matrix.row(r));
    model.trees.push_back(std::move(tree));

    if (log) {
      double loss = 0;
      for (const auto& [begin, end] : query_spans) {
        q_scores.assign(scores.begin() + begin, scores.begin() + end);
        q_labels.assign(labels.begin() + begin, labels.begin() + end);
        loss += pairwise_loss(q_scores, q_labels, config.sigma);
      }
      log->round_loss.push_back(loss);
    }
  }
  return model;
}

std::vector<double> predict(const RankerModel& model,
                            const std::vector<RankingDocument>& documents) {
  std::vector<double> scores;
  scores.reserve(documents.size());
  for (const RankingDocument& doc : documents)
    scores.push_back(predict_one(model, doc.features));
  return scores;
}

double predict_one(const RankerModel& model, const std::vector<double>& features) {
  if (features.size() != model.feature_names.size())
    throw FeatureArityMismatch(model.feature_names.size(), features.size());
  double score = model.base_score;
  for (const RegressionTree& tree : model.trees)
    score += model.config.learning_rate * tree.value(features.data());
  return score;
}

std::vector<std::size_t> rank(const std::vector<RankingDocument>& documents,
                              const std::vector<double>& scores) {
  if (documents.size() != scores.size())
    throw std::invalid_argument("documents and scores differ in length");
  std::vector<std::size_t> order(documents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return documents[a].doc_id < documents[b].doc_id;
  });
  return order;
}

std::map<std::string, double> feature_importance(const RankerModel& model) {
  std::vector<double> gain_by_feature(model.feature_names.size(), 0.0);
  double total = 0;
  bool any = false;
  for (const RegressionTree& tree : model.trees) {
    for (const TreeNode& node : tree.nodes) {
      if (node.feature < 0) continue;
      any = true;
      if (static_cast<std::size_t>(node.feature) < gain_by_feature.size()) {
        gain_by_feature[node.feature] += node.gain;
        total += node.gain;
      }
    }
  }
  if (!any || total <= 0) throw NoSplits();
  std::map<std::string, double> importance;
  for (std::size_t f = 0; f < gain_by_feature.size(); ++f)
    if (gain_by_feature[f] > 0)
      importance[model.feature_names[f]] = gain_by_feature[f] / total;
  return importance;
}

std::string serialize_model(const RankerModel& model) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json cfg;
  cfg["rounds"] = model.config.rounds;
  cfg["learning_rate"] = model.config.learning_rate;
  cfg["max_depth"] = model.config.max_depth;
  cfg["min_child_weight"] = model.config.min_child_weight;
  cfg["reg_lambda"] = model.config.reg_lambda;
  cfg["sigma"] = model.config.sigma;
  cfg["base_score"] = model.config.base_score;
  cfg["seed"] = model.config.seed;
  j["config"] = std::move(cfg);
  j["feature_names"] = model.feature_names;
  j["base_score"] = model.base_score;
  auto& trees = j["trees"] = nlohmann::ordered_json::array();
  for (const RegressionTree& tree : model.trees) trees.push_back(tree_to_json(tree));
  j["fingerprint"] = model.fingerprint;
  return j.dump(2) + "\n";
}

RankerModel deserialize_model(const std::string& bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw CorruptModel("not a JSON object");
  if (!j.contains("schema") || !j.at("schema").is_number_integer())
    throw CorruptModel("missing schema version");
  long long schema = j.at("schema").get<long long>();
  if (schema != 1) throw SchemaVersionMismatch(schema);

  try {
    RankerModel model;
    const auto& cfg = j.at("config");
    model.config.rounds = cfg.at("rounds").get<int>();
    model.config.learning_rate = cfg.at("learning_rate").get<double>();
    model.config.max_depth = cfg.at("max_depth").get<int>();
    model.config.min_child_weight = cfg.at("min_child_weight").get<double>();
    model.config.reg_lambda = cfg.at("reg_lambda").get<double>();
    model.config.sigma = cfg.at("sigma").get<double>();
    model.config.base_score = cfg.at("base_score").get<double>();
    model.config.seed = cfg.at("seed").get<std::uint64_t>();
    model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    model.base_score = j.at("base_score").get<double>();
    for (const auto& tj : j.at("trees")) {
      RegressionTree tree = tree_from_json(tj);
      for (const TreeNode& node : tree.nodes)
        if (node.feature >= static_cast<int>(model.feature_names.size()))
          throw CorruptModel("split feature out of range");
      model.trees.push_back(std::move(tree));
    }
    model.fingerprint = j.value("fingerprint", "");
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptModel(e.what());
  }
}

}  // namespace migrank::ltr
