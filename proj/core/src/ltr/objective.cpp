#include "migrank/ltr/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace migrank::ltr {

namespace {

double gain(int label) { return std::exp2(label) - 1.0; }

double discount(std::size_t rank0) { return 1.0 / std::log2(static_cast<double>(rank0) + 2.0); }

}  // namespace

double inverse_ideal_dcg(const std::vector<int>& labels) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  double idcg = 0;
  for (std::size_t r = 0; r < sorted.size(); ++r) idcg += gain(sorted[r]) * discount(r);
  return idcg > 0 ? 1.0 / idcg : 0.0;
}

std::vector<std::size_t> score_ranking(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

double delta_ndcg(const std::vector<int>& labels, const std::vector<std::size_t>& rank_of,
                  std::size_t i, std::size_t j) {
  if (labels[i] == labels[j]) return 0.0;
  double inv_idcg = inverse_ideal_dcg(labels);
  return std::abs((gain(labels[i]) - gain(labels[j])) *
                  (discount(rank_of[i]) - discount(rank_of[j]))) *
         inv_idcg;
}

LambdaResult compute_lambdas(const std::vector<double>& scores,
                             const std::vector<int>& labels, double sigma) {
  std::size_t n = scores.size();
  LambdaResult result;
  result.gradients.assign(n, 0.0);
  result.hessians.assign(n, 0.0);

  double inv_idcg = inverse_ideal_dcg(labels);
  if (inv_idcg == 0.0) return result;

  std::vector<std::size_t> order = score_ranking(scores);
  std::vector<std::size_t> rank_of(n);
  for (std::size_t r = 0; r < n; ++r) rank_of[order[r]] = r;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] <= labels[j]) continue;
      double dndcg = std::abs((gain(labels[i]) - gain(labels[j])) *
                              (discount(rank_of[i]) - discount(rank_of[j]))) *
                     inv_idcg;
      double rho = 1.0 / (1.0 + std::exp(sigma * (scores[i] - scores[j])));
      double step = sigma * rho * dndcg;
      result.gradients[i] -= step;
      result.gradients[j] += step;
      double curvature = sigma * sigma * rho * (1.0 - rho) * dndcg;
      result.hessians[i] += curvature;
      result.hessians[j] += curvature;
    }
  }
  return result;
}

double pairwise_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                     double sigma) {
  std::size_t n = scores.size();
  double inv_idcg = inverse_ideal_dcg(labels);
  if (inv_idcg == 0.0) return 0.0;

  std::vector<std::size_t> order = score_ranking(scores);
  std::vector<std::size_t> rank_of(n);
  for (std::size_t r = 0; r < n; ++r) rank_of[order[r]] = r;

  double loss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] <= labels[j]) continue;
      double dndcg = std::abs((gain(labels[i]) - gain(labels[j])) *
                              (discount(rank_of[i]) - discount(rank_of[j]))) *
                     inv_idcg;
      loss += std::log1p(std::exp(-sigma * (scores[i] - scores[j]))) * dndcg;
    }
  }
  return loss;
}

}  // namespace migrank::ltr
