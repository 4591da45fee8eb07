#include "migrank/ltr/tree.hpp"

#include <algorithm>
#include <numeric>

namespace migrank::ltr {

namespace {

struct SplitChoice {
  double gain = 0;
  int feature = -1;
  double threshold = 0;
};

double leaf_weight(double g, double h, double reg_lambda) {
  double denom = h + reg_lambda;
  if (denom <= 0) return 0.0;
  double w = -g / denom;
  return w == 0.0 ? 0.0 : w;  // normalizes -0.0
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, const std::vector<double>& g,
              const std::vector<double>& h, const TrainConfig& config)
      : x_(x), g_(g), h_(h), config_(config) {}

  RegressionTree build() {
    std::vector<std::size_t> all(x_.rows());
    std::iota(all.begin(), all.end(), 0);
    grow(std::move(all), 0);
    return std::move(tree_);
  }

 private:
  int grow(std::vector<std::size_t> rows, int depth) {
    double g_sum = 0, h_sum = 0;
    for (std::size_t r : rows) {
      g_sum += g_[r];
      h_sum += h_[r];
    }

    SplitChoice best;
    if (depth < config_.max_depth && rows.size() >= 2)
      best = best_split(rows, g_sum, h_sum);

    int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    if (best.feature < 0) {
      tree_.nodes[index].weight = leaf_weight(g_sum, h_sum, config_.reg_lambda);
      return index;
    }

    std::vector<std::size_t> left, right;
    for (std::size_t r : rows) {
      (x_.at(r, best.feature) < best.threshold ? left : right).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    tree_.nodes[index].feature = best.feature;
    tree_.nodes[index].threshold = best.threshold;
    tree_.nodes[index].gain = best.gain;
    int l = grow(std::move(left), depth + 1);
    int r = grow(std::move(right), depth + 1);
    tree_.nodes[index].left = l;
    tree_.nodes[index].right = r;
    return index;
  }

  SplitChoice best_split(const std::vector<std::size_t>& rows, double g_sum,
                         double h_sum) {
    SplitChoice best;
    double parent_score = g_sum * g_sum / (h_sum + config_.reg_lambda);
    std::vector<std::pair<double, std::size_t>> sorted;
    sorted.reserve(rows.size());

    for (std::size_t f = 0; f < x_.cols; ++f) {
      sorted.clear();
      for (std::size_t r : rows) sorted.emplace_back(x_.at(r, f), r);
      std::sort(sorted.begin(), sorted.end());

      double gl = 0, hl = 0;
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        gl += g_[sorted[k].second];
        hl += h_[sorted[k].second];
        double vl = sorted[k].first, vr = sorted[k + 1].first;
        if (vl == vr) continue;
        double gr = g_sum - gl, hr = h_sum - hl;
        if (hl < config_.min_child_weight) continue;
        if (hr < config_.min_child_weight) break;
        double gain = 0.5 * (gl * gl / (hl + config_.reg_lambda) +
                             gr * gr / (hr + config_.reg_lambda) - parent_score);
        if (gain <= best.gain || gain <= 0) continue;
        double threshold = vl + (vr - vl) / 2.0;
        if (!(vl < threshold && threshold <= vr)) continue;  // adjacent doubles
        best.gain = gain;
        best.feature = static_cast<int>(f);
        best.threshold = threshold;
      }
    }
    return best;
  }

  const FeatureMatrix& x_;
  const std::vector<double>& g_;
  const std::vector<double>& h_;
  const TrainConfig& config_;
  RegressionTree tree_;
};

}  // namespace

RegressionTree fit_tree(const FeatureMatrix& features,
                        const std::vector<double>& gradients,
                        const std::vector<double>& hessians, const TrainConfig& config) {
  return TreeBuilder(features, gradients, hessians, config).build();
}

}  // namespace migrank::ltr
