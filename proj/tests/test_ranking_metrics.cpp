#include <doctest.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "migrank/errors.hpp"
#include "migrank/eval/ranking_metrics.hpp"

using namespace migrank;
using namespace migrank::eval;

namespace {

constexpr double kEps = 1e-12;

// Independent restatement of average precision used as an oracle: running
// hit count over ranks, divided by the chosen relevant-document count.
double oracle_ap(const std::vector<int>& flags, std::size_t k,
                 ApNormalization normalization) {
  std::size_t cutoff = std::min(k, flags.size());
  std::size_t relevant = 0;
  if (normalization == ApNormalization::all_relevant) {
    for (int f : flags) relevant += f != 0;
  } else {
    for (std::size_t i = 0; i < cutoff; ++i) relevant += flags[i] != 0;
  }
  if (relevant == 0) return 0.0;
  double sum = 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cutoff; ++i) {
    if (flags[i] == 0) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(relevant);
}

}  // namespace

TEST_SUITE_BEGIN("ranking_metrics");

TEST_CASE("precision counts hits in a prefix") {
  CHECK(precision_at({1, 0, 0}, 1) == 1.0);
  CHECK(precision_at({0, 1}, 2) == 0.5);
  CHECK(precision_at({1, 1, 0, 1}, 4) == 0.75);
  CHECK_THROWS_AS(precision_at({1, 0}, 0), std::out_of_range);
  CHECK_THROWS_AS(precision_at({1, 0}, 3), std::out_of_range);
  CHECK_THROWS_AS(precision_at({}, 1), std::out_of_range);
}

TEST_CASE("relevance lookup is one-based") {
  CHECK(rel_at({0, 1}, 1) == 0);
  CHECK(rel_at({0, 1}, 2) == 1);
  CHECK(rel_at({0, 7}, 2) == 1);  // any non-zero flag reads as relevant
  CHECK_THROWS_AS(rel_at({0, 1}, 0), std::out_of_range);
  CHECK_THROWS_AS(rel_at({0, 1}, 3), std::out_of_range);
}

TEST_CASE("average precision on worked lists") {
  CHECK(average_precision_at({0, 1, 0}, 3) == doctest::Approx(0.5).epsilon(kEps));
  CHECK(average_precision_at({1, 0, 1}, 3) ==
        doctest::Approx(5.0 / 6.0).epsilon(kEps));
  CHECK(average_precision_at({1, 0, 0}, 1) == 1.0);
  CHECK(average_precision_at({0, 0}, 2) == 0.0);
  CHECK(average_precision_at({}, 4) == 0.0);
  CHECK_THROWS_AS(average_precision_at({1}, 0), std::out_of_range);
}

TEST_CASE("k beyond the list truncates") {
  CHECK(average_precision_at({0, 1}, 10) ==
        doctest::Approx(0.5).epsilon(kEps));
  CHECK(average_precision_at({0, 1}, 2) ==
        average_precision_at({0, 1}, 100));
}

TEST_CASE("the two normalizations differ below full recall") {
  // Two relevant documents, cutoff 1: the retrieved normalizer sees one,
  // the all-relevant normalizer both.
  CHECK(average_precision_at({1, 1}, 1, ApNormalization::relevant_in_top_k) == 1.0);
  CHECK(average_precision_at({1, 1}, 1, ApNormalization::all_relevant) == 0.5);
  // At full depth they agree.
  CHECK(average_precision_at({1, 0, 1}, 3, ApNormalization::relevant_in_top_k) ==
        average_precision_at({1, 0, 1}, 3, ApNormalization::all_relevant));
}

TEST_CASE("every flag vector up to length 8 matches the oracle") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> flags(n);
      for (std::size_t i = 0; i < n; ++i) flags[i] = (mask >> i) & 1;
      for (std::size_t k = 1; k <= n + 2; ++k) {
        for (auto norm :
             {ApNormalization::relevant_in_top_k, ApNormalization::all_relevant}) {
          double got = average_precision_at(flags, k, norm);
          double want = oracle_ap(flags, k, norm);
          CAPTURE(n);
          CAPTURE(mask);
          CAPTURE(k);
          CHECK(got == doctest::Approx(want).epsilon(kEps));
          CHECK(got >= 0.0);
          CHECK(got <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("single-relevant lists never lose score at deeper cutoffs") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<int> flags(n, 0);
      flags[p] = 1;
      double previous = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        double ap = average_precision_at(flags, k);
        CHECK(ap >= previous);
        previous = ap;
      }
    }
  }
}

TEST_CASE("map averages per-query scores") {
  std::vector<std::vector<int>> results{{1, 0}, {0, 1}};
  CHECK(map_at(results, 2) == doctest::Approx(0.75).epsilon(kEps));
  CHECK(map_at(results, 1) == doctest::Approx(0.5).epsilon(kEps));
  CHECK_THROWS_AS(map_at({}, 1), EmptyResults);
}

TEST_CASE("queries of mixed lengths average cleanly") {
  std::vector<std::vector<int>> results{{1}, {0, 0, 1}};
  // AP {1}@3 = 1, AP {0,0,1}@3 = 1/3.
  CHECK(map_at(results, 3) == doctest::Approx((1.0 + 1.0 / 3.0) / 2.0).epsilon(kEps));
}

TEST_CASE("improvement is the relative gain over a baseline") {
  CHECK(improvement(0.225, 0.188) ==
        doctest::Approx((0.225 - 0.188) / 0.188).epsilon(kEps));
  CHECK(improvement(0.225, 0.188) == doctest::Approx(0.197).epsilon(1e-2));
  CHECK(improvement(0.1, 0.2) == doctest::Approx(-0.5).epsilon(kEps));
  CHECK_THROWS_AS(improvement(0.5, 0.0), ZeroBaseline);
  CHECK_THROWS_AS(improvement(0.5, -0.1), ZeroBaseline);
}

TEST_SUITE_END();
