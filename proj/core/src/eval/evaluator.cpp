#include "migrank/eval/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "migrank/errors.hpp"
#include "migrank/eval/baselines.hpp"

namespace migrank::eval {

namespace {

bool has_relevant(const ltr::RankingQuery& query) {
  return std::any_of(query.documents.begin(), query.documents.end(),
                     [](const ltr::RankingDocument& doc) { return doc.label > 0; });
}

std::vector<int> flags_in_order(const ltr::RankingQuery& query,
                                const std::vector<std::size_t>& order) {
  std::vector<int> flags;
  flags.reserve(order.size());
  for (std::size_t index : order) flags.push_back(query.documents[index].label > 0 ? 1 : 0);
  return flags;
}

// Per-query AP@k for k = 1..k_max given one concrete ordering.
std::vector<double> ap_curve(const std::vector<int>& flags, std::size_t k_max,
                             ApNormalization normalization) {
  std::vector<double> curve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k)
    curve[k - 1] = average_precision_at(flags, k, normalization);
  return curve;
}

std::string format_map(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string format_percent(double value) {
  if (std::isnan(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", value);
  return buf;
}

}  // namespace

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::learned: return "learned";
    case Strategy::random: return "random";
    case Strategy::guideline: return "guideline";
  }
  return "unknown";
}

std::vector<Strategy> parse_strategies(const std::string& text) {
  std::vector<Strategy> strategies;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string::npos) end = text.size();
    std::string name = text.substr(begin, end - begin);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!name.empty()) {
      Strategy strategy;
      if (name == "learned") strategy = Strategy::learned;
      else if (name == "random") strategy = Strategy::random;
      else if (name == "guideline") strategy = Strategy::guideline;
      else throw std::invalid_argument("unknown strategy: " + name);
      if (std::find(strategies.begin(), strategies.end(), strategy) == strategies.end())
        strategies.push_back(strategy);
    }
    begin = end + 1;
  }
  if (strategies.empty()) throw std::invalid_argument("no strategies given");
  return strategies;
}

EvaluationReport evaluate(const ltr::RankerModel* model,
                          const std::vector<ltr::RankingQuery>& queries,
                          const EvaluationOptions& options) {
  if (options.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (options.random_trials < 1)
    throw std::invalid_argument("random_trials must be >= 1");
  if (options.strategies.empty()) throw std::invalid_argument("no strategies given");

  bool wants_learned =
      std::find(options.strategies.begin(), options.strategies.end(),
                Strategy::learned) != options.strategies.end();
  if (wants_learned && model == nullptr)
    throw std::invalid_argument("learned strategy requires a model");

  EvaluationReport report;
  report.k_max = options.k_max;

  std::vector<const ltr::RankingQuery*> scored;
  for (const ltr::RankingQuery& query : queries) {
    if (query.documents.empty() || !has_relevant(query)) {
      ++report.skipped_queries;
      report.diagnostics.push_back("query " + query.query_id +
                                   " has no relevant documents; skipped");
      continue;
    }
    scored.push_back(&query);
  }
  if (scored.empty()) throw EmptyTestSet();
  report.query_count = scored.size();

  for (Strategy strategy : options.strategies) {
    StrategyResult result;
    result.strategy = strategy;
    result.map_at_k.assign(options.k_max, 0.0);

    if (strategy == Strategy::random) {
      report.random_trials = options.random_trials;
      for (int trial = 0; trial < options.random_trials; ++trial)
        report.random_trial_seeds.push_back(trial_seed(options.random_seed, trial));
      for (const ltr::RankingQuery* query : scored) {
        std::vector<double> mean_curve(options.k_max, 0.0);
        for (int trial = 0; trial < options.random_trials; ++trial) {
          auto order = random_rank(
              query->documents.size(),
              query_trial_seed(query->query_id, options.random_seed, trial));
          auto curve = ap_curve(flags_in_order(*query, order), options.k_max,
                                options.normalization);
          for (std::size_t i = 0; i < options.k_max; ++i) mean_curve[i] += curve[i];
        }
        for (std::size_t i = 0; i < options.k_max; ++i)
          result.map_at_k[i] += mean_curve[i] / options.random_trials;
      }
    } else {
      for (const ltr::RankingQuery* query : scored) {
        std::vector<std::size_t> order;
        if (strategy == Strategy::learned) {
          order = ltr::rank(query->documents, predict(*model, query->documents));
        } else {
          order = guideline_rank(query->documents);
        }
        auto curve = ap_curve(flags_in_order(*query, order), options.k_max,
                              options.normalization);
        for (std::size_t i = 0; i < options.k_max; ++i) result.map_at_k[i] += curve[i];
      }
    }

    for (double& value : result.map_at_k) value /= static_cast<double>(scored.size());
    report.strategies.push_back(std::move(result));
  }

  if (wants_learned) {
    const StrategyResult* learned = nullptr;
    for (const StrategyResult& result : report.strategies)
      if (result.strategy == Strategy::learned) learned = &result;
    for (const StrategyResult& result : report.strategies) {
      if (result.strategy == Strategy::learned) continue;
      ImprovementRow row;
      row.baseline = result.strategy;
      row.percent_at_k.assign(options.k_max, 0.0);
      for (std::size_t i = 0; i < options.k_max; ++i) {
        double base = result.map_at_k[i];
        row.percent_at_k[i] =
            base > 0 ? improvement(learned->map_at_k[i], base) * 100.0
                     : std::numeric_limits<double>::quiet_NaN();
      }
      report.improvements.push_back(std::move(row));
    }
  }
  return report;
}

std::string report_csv(const EvaluationReport& report) {
  std::string out = "strategy";
  for (std::size_t k = 1; k <= report.k_max; ++k)
    out += ",k=" + std::to_string(k);
  out += "\n";
  for (const StrategyResult& result : report.strategies) {
    out += to_string(result.strategy);
    for (double value : result.map_at_k) out += "," + format_map(value);
    out += "\n";
  }
  for (const ImprovementRow& row : report.improvements) {
    out += "improvement_vs_" + to_string(row.baseline);
    for (double value : row.percent_at_k) out += "," + format_percent(value);
    out += "\n";
  }
  return out;
}

std::string report_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["queries"] = report.query_count;
  j["skipped_queries"] = report.skipped_queries;
  j["k_max"] = report.k_max;
  auto& strategies = j["strategies"] = nlohmann::ordered_json::object();
  for (const StrategyResult& result : report.strategies)
    strategies[to_string(result.strategy)] = result.map_at_k;
  auto& improvements = j["improvements"] = nlohmann::ordered_json::object();
  for (const ImprovementRow& row : report.improvements) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (double value : row.percent_at_k) {
      if (std::isnan(value))
        values.push_back(nullptr);
      else
        values.push_back(value);
    }
    improvements["vs_" + to_string(row.baseline) + "_percent"] = std::move(values);
  }
  if (report.random_trials > 0) {
    j["random_trials"] = report.random_trials;
    j["random_trial_seeds"] = report.random_trial_seeds;
  }
  if (!report.diagnostics.empty()) j["diagnostics"] = report.diagnostics;
  return j.dump(2) + "\n";
}

}  // namespace migrank::eval
