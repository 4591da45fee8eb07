#pragma once

#include <cstddef>
#include <vector>

namespace migrank::ltr {

// Pairwise lambda objective. Relevance gain is 2^label - 1 and the discount
// at 1-based rank r is 1/log2(r+1); both normalized by the query's ideal DCG.

// 1/IDCG for the label multiset; 0 when no document is relevant.
double inverse_ideal_dcg(const std::vector<int>& labels);

// Document indices ordered by descending score, ties by ascending index.
std::vector<std::size_t> score_ranking(const std::vector<double>& scores);

// |NDCG change| if the documents i and j swapped rank positions.
// rank_of[d] is the 0-based rank of document d under the current scores.
double delta_ndcg(const std::vector<int>& labels, const std::vector<std::size_t>& rank_of,
                  std::size_t i, std::size_t j);

struct LambdaResult {
  std::vector<double> gradients;  // d loss / d score; negative for winners
  std::vector<double> hessians;
};

// Accumulates, over every pair with label_i > label_j:
//   rho      = 1 / (1 + exp(sigma * (s_i - s_j)))
//   gradient_i -= sigma * rho * dNDCG,  gradient_j += sigma * rho * dNDCG
//   hessian_{i,j} += sigma^2 * rho * (1 - rho) * dNDCG
LambdaResult compute_lambdas(const std::vector<double>& scores,
                             const std::vector<int>& labels, double sigma);

// The objective those gradients descend: the dNDCG-weighted pairwise
// logistic loss, sum of log(1 + exp(-sigma (s_i - s_j))) * dNDCG over pairs
// with label_i > label_j, dNDCG frozen at the current ranking.
double pairwise_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                     double sigma);

}  // namespace migrank::ltr
