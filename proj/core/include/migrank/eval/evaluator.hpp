#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "migrank/eval/ranking_metrics.hpp"
#include "migrank/ltr/dataset.hpp"
#include "migrank/ltr/model.hpp"

namespace migrank::eval {

enum class Strategy { learned, random, guideline };

std::string to_string(Strategy strategy);

// Parses a comma-separated strategy list such as "learned,random,guideline".
// Throws std::invalid_argument on unknown names; duplicates collapse.
std::vector<Strategy> parse_strategies(const std::string& text);

struct EvaluationOptions {
  std::size_t k_max = 10;
  std::vector<Strategy> strategies = {Strategy::learned, Strategy::random,
                                      Strategy::guideline};
  int random_trials = 30;
  std::uint64_t random_seed = 17;
  ApNormalization normalization = ApNormalization::relevant_in_top_k;
};

struct StrategyResult {
  Strategy strategy;
  std::vector<double> map_at_k;  // index k-1 holds MAP@k
};

// Percentage gain of the learned strategy over one baseline at each k;
// NaN marks cutoffs where the baseline MAP is zero.
struct ImprovementRow {
  Strategy baseline;
  std::vector<double> percent_at_k;
};

struct EvaluationReport {
  std::size_t query_count = 0;    // queries actually scored
  std::size_t skipped_queries = 0;  // dropped for lacking a relevant document
  std::size_t k_max = 0;
  std::vector<StrategyResult> strategies;
  std::vector<ImprovementRow> improvements;
  int random_trials = 0;
  std::vector<std::uint64_t> random_trial_seeds;
  std::vector<std::string> diagnostics;
};

// Scores every requested strategy on the test queries. The model may be
// null unless the learned strategy is requested. Queries without a relevant
// document are skipped with a diagnostic; if none remain, throws
// EmptyTestSet.
EvaluationReport evaluate(const ltr::RankerModel* model,
                          const std::vector<ltr::RankingQuery>& queries,
                          const EvaluationOptions& options = {});

// Results-table rendering: one row per strategy with MAP@1..k_max to six
// decimals, then one percentage row per baseline the learned strategy beat
// (or lost to).
std::string report_csv(const EvaluationReport& report);
std::string report_json(const EvaluationReport& report);

}  // namespace migrank::eval
