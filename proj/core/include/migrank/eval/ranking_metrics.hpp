#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace migrank::eval {

// One ranked candidate list with its relevance judgements: flags[i] is 1
// when the document at rank i+1 was actually migrated, else 0.
struct RankedQueryResult {
  std::string query_id;
  std::vector<std::string> doc_ids;
  std::vector<int> flags;
};

// Normalizer used by average precision: either the relevant documents
// retrieved within the top-k, or every relevant document in the query.
enum class ApNormalization { relevant_in_top_k, all_relevant };

// Fraction of the top n documents that are relevant. Throws
// std::out_of_range unless 1 <= n <= flags.size().
double precision_at(const std::vector<int>& flags, std::size_t n);

// Relevance flag at rank k (1-based). Throws std::out_of_range unless
// 1 <= k <= flags.size().
int rel_at(const std::vector<int>& flags, std::size_t k);

// Average precision over the top k; k beyond the list truncates to the
// list length. Returns 0 when the normalizer counts no relevant documents.
// Throws std::out_of_range when k == 0.
double average_precision_at(
    const std::vector<int>& flags, std::size_t k,
    ApNormalization normalization = ApNormalization::relevant_in_top_k);

// Arithmetic mean of per-query average precision. Throws EmptyResults when
// no queries are given.
double map_at(const std::vector<std::vector<int>>& results, std::size_t k,
              ApNormalization normalization = ApNormalization::relevant_in_top_k);

// Relative gain of one MAP figure over a baseline: (ours - base) / base.
// Throws ZeroBaseline unless base > 0.
double improvement(double map_ours, double map_base);

}  // namespace migrank::eval
