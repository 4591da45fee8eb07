#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace migrank::ltr {

struct TrainConfig {
  int rounds = 100;
  double learning_rate = 0.3;
  int max_depth = 6;
  double min_child_weight = 1.0;
  double reg_lambda = 1.0;
  double sigma = 1.0;
  double base_score = 0.5;
  std::uint64_t seed = 0;
};

// Row-major dense matrix, one row per document.
struct FeatureMatrix {
  std::size_t cols = 0;
  std::vector<double> values;

  std::size_t rows() const { return cols == 0 ? 0 : values.size() / cols; }
  double at(std::size_t row, std::size_t col) const { return values[row * cols + col]; }
  const double* row(std::size_t r) const { return values.data() + r * cols; }
};

// feature < 0 marks a leaf. Routing: x[feature] < threshold goes left,
// everything else (including equality) goes right.
struct TreeNode {
  int feature = -1;
  double threshold = 0;
  int left = -1;
  int right = -1;
  double weight = 0;
  double gain = 0;  // split gain, kept for importance reporting
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double value(const double* features) const {
    int at = 0;
    while (nodes[at].feature >= 0)
      at = features[nodes[at].feature] < nodes[at].threshold ? nodes[at].left
                                                             : nodes[at].right;
    return nodes[at].weight;
  }
};

// Second-order boosting step: exact greedy search over every feature and
// every threshold between distinct values. A split must improve
//   gain = 1/2 [ GL^2/(HL+lambda) + GR^2/(HR+lambda) - G^2/(H+lambda) ]
// strictly above zero and leave each child with hessian mass of at least
// min_child_weight; otherwise the node stays a leaf with weight
// -G/(H+lambda).
RegressionTree fit_tree(const FeatureMatrix& features,
                        const std::vector<double>& gradients,
                        const std::vector<double>& hessians, const TrainConfig& config);

}  // namespace migrank::ltr
