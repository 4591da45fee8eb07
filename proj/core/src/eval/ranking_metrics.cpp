#include "migrank/eval/ranking_metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "migrank/errors.hpp"

namespace migrank::eval {

double precision_at(const std::vector<int>& flags, std::size_t n) {
  if (n < 1 || n > flags.size())
    throw std::out_of_range("precision_at: rank " + std::to_string(n) +
                            " outside [1, " + std::to_string(flags.size()) + "]");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (flags[i] != 0) ++hits;
  return static_cast<double>(hits) / static_cast<double>(n);
}

int rel_at(const std::vector<int>& flags, std::size_t k) {
  if (k < 1 || k > flags.size())
    throw std::out_of_range("rel_at: rank " + std::to_string(k) + " outside [1, " +
                            std::to_string(flags.size()) + "]");
  return flags[k - 1] != 0 ? 1 : 0;
}

double average_precision_at(const std::vector<int>& flags, std::size_t k,
                            ApNormalization normalization) {
  if (k < 1) throw std::out_of_range("average_precision_at: k must be >= 1");
  std::size_t cutoff = std::min(k, flags.size());
  std::size_t normalizer = 0;
  if (normalization == ApNormalization::relevant_in_top_k) {
    for (std::size_t i = 0; i < cutoff; ++i)
      if (flags[i] != 0) ++normalizer;
  } else {
    for (int flag : flags)
      if (flag != 0) ++normalizer;
  }
  if (normalizer == 0) return 0.0;
  double sum = 0;
  for (std::size_t r = 1; r <= cutoff; ++r)
    if (flags[r - 1] != 0) sum += precision_at(flags, r);
  return sum / static_cast<double>(normalizer);
}

double map_at(const std::vector<std::vector<int>>& results, std::size_t k,
              ApNormalization normalization) {
  if (results.empty()) throw EmptyResults();
  double sum = 0;
  for (const auto& flags : results) sum += average_precision_at(flags, k, normalization);
  return sum / static_cast<double>(results.size());
}

double improvement(double map_ours, double map_base) {
  if (!(map_base > 0)) throw ZeroBaseline();
  return (map_ours - map_base) / map_base;
}

}  // namespace migrank::eval
