#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "migrank/eval/evaluator.hpp"
#include "migrank/ltr/model.hpp"
#include "migrank/metrics/features.hpp"
#include "migrank/metrics/lexer.hpp"
#include "migrank/miner/history.hpp"

namespace {

// A mid-sized source file exercising most token categories.
std::string sample_source() {
  std::string out =
      "package com.example.app;\n"
      "import android.app.Activity;\n"
      "import java.util.List;\n"
      "public class SampleActivity extends Activity {\n"
      "  private static final String TAG = \"Sample\";\n"
      "  private int counter = 0;\n"
      "  private List<String> names;\n";
  for (int i = 0; i < 40; ++i) {
    out += "  public int work" + std::to_string(i) +
           "(int a, int b) {\n"
           "    int total = a + b * " +
           std::to_string(i) +
           ";\n"
           "    for (int j = 0; j < total; j++) {\n"
           "      if (j % 2 == 0 && j > 3) { counter += j; }\n"
           "    }\n"
           "    return total;\n"
           "  }\n";
  }
  out += "}\n";
  return out;
}

std::vector<migrank::ltr::RankingQuery> synthetic_queries(std::size_t queries,
                                                          std::size_t docs,
                                                          std::size_t arity) {
  std::mt19937_64 rng(7);
  std::vector<migrank::ltr::RankingQuery> out;
  for (std::size_t q = 0; q < queries; ++q) {
    migrank::ltr::RankingQuery query;
    query.query_id = "q" + std::to_string(q);
    std::size_t best = 0;
    double best_value = 1e300;
    for (std::size_t d = 0; d < docs; ++d) {
      migrank::ltr::RankingDocument doc;
      doc.doc_id = "d" + std::to_string(d);
      for (std::size_t f = 0; f < arity; ++f)
        doc.features.push_back(static_cast<double>(rng() % 1000));
      if (doc.features[0] < best_value) {
        best_value = doc.features[0];
        best = d;
      }
      query.documents.push_back(std::move(doc));
    }
    query.documents[best].label = 1;
    out.push_back(std::move(query));
  }
  return out;
}

void bm_lex(benchmark::State& state) {
  std::string source = sample_source();
  for (auto _ : state) {
    auto tokens = migrank::metrics::lex(source);
    benchmark::DoNotOptimize(tokens);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * source.size()));
}
BENCHMARK(bm_lex);

void bm_extract(benchmark::State& state) {
  std::string source = sample_source();
  migrank::metrics::ProjectSnapshot snapshot(
      {{"app/src/SampleActivity.java", source}});
  for (auto _ : state) {
    auto result = snapshot.extract("app/src/SampleActivity.java");
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_extract);

void bm_train(benchmark::State& state) {
  auto queries = synthetic_queries(20, 10, 8);
  migrank::ltr::TrainConfig config;
  config.rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto model = migrank::ltr::train(queries, config);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(bm_train)->Arg(5)->Arg(20);

void bm_evaluate_random(benchmark::State& state) {
  auto queries = synthetic_queries(50, 20, 4);
  migrank::eval::EvaluationOptions options;
  options.strategies = {migrank::eval::Strategy::random};
  for (auto _ : state) {
    auto report = migrank::eval::evaluate(nullptr, queries, options);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(bm_evaluate_random);

}  // namespace

BENCHMARK_MAIN();
