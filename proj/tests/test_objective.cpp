#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "migrank/ltr/objective.hpp"

using namespace migrank::ltr;

namespace {

constexpr double kEps = 1e-12;

double ideal_dcg(const std::vector<int>& labels) {
  double inv = inverse_ideal_dcg(labels);
  return inv == 0.0 ? 0.0 : 1.0 / inv;
}

// Random query whose scores are pairwise separated enough that a tiny
// perturbation cannot reorder them.
struct RandomQuery {
  std::vector<double> scores;
  std::vector<int> labels;
};

RandomQuery make_query(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(2, 10);
  std::uniform_real_distribution<double> score_dist(-2.0, 2.0);
  std::bernoulli_distribution label_dist(0.4);
  for (;;) {
    RandomQuery query;
    std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
      query.scores.push_back(score_dist(rng));
      query.labels.push_back(label_dist(rng) ? 1 : 0);
    }
    bool has_pos = false, has_neg = false;
    for (int label : query.labels) (label ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) continue;
    auto sorted = query.scores;
    std::sort(sorted.begin(), sorted.end());
    bool separated = true;
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] - sorted[i - 1] < 1e-4) separated = false;
    if (separated) return query;
  }
}

}  // namespace

TEST_SUITE_BEGIN("objective");

TEST_CASE("ideal dcg follows gains and discounts") {
  CHECK(ideal_dcg({1, 0}) == doctest::Approx(1.0).epsilon(kEps));
  CHECK(ideal_dcg({0, 1}) == doctest::Approx(1.0).epsilon(kEps));  // order-free
  CHECK(ideal_dcg({1, 1, 0}) ==
        doctest::Approx(1.0 + 1.0 / std::log2(3.0)).epsilon(kEps));
  CHECK(ideal_dcg({2, 1}) ==
        doctest::Approx(3.0 + 1.0 / std::log2(3.0)).epsilon(kEps));
  CHECK(inverse_ideal_dcg({0, 0, 0}) == 0.0);
  CHECK(inverse_ideal_dcg({}) == 0.0);
}

TEST_CASE("score ranking is descending with index tie-break") {
  CHECK(score_ranking({0.5, 2.0, 1.0}) == std::vector<std::size_t>{1, 2, 0});
  CHECK(score_ranking({1.0, 1.0}) == std::vector<std::size_t>{0, 1});
  CHECK(score_ranking({}) == std::vector<std::size_t>{});
}

TEST_CASE("swapping the top pair of a two-document query costs 1 - 1/log2(3)") {
  std::vector<int> labels{1, 0};
  std::vector<std::size_t> rank_of{0, 1};
  double expected = 1.0 - 1.0 / std::log2(3.0);
  CHECK(delta_ndcg(labels, rank_of, 0, 1) == doctest::Approx(expected).epsilon(kEps));
  CHECK(delta_ndcg(labels, rank_of, 1, 0) == doctest::Approx(expected).epsilon(kEps));
  CHECK(delta_ndcg(labels, rank_of, 0, 1) == doctest::Approx(0.3691).epsilon(1e-4));
  CHECK(delta_ndcg({1, 1}, rank_of, 0, 1) == 0.0);  // equal labels never swap
}

TEST_CASE("lambda hand computation on a tied two-document query") {
  auto result = compute_lambdas({0.0, 0.0}, {1, 0}, 1.0);
  double dndcg = 1.0 - 1.0 / std::log2(3.0);
  double step = 0.5 * dndcg;  // rho is exactly 1/2 at equal scores
  REQUIRE(result.gradients.size() == 2);
  CHECK(result.gradients[0] == doctest::Approx(-step).epsilon(kEps));
  CHECK(result.gradients[1] == doctest::Approx(step).epsilon(kEps));
  double curvature = 0.25 * dndcg;
  CHECK(result.hessians[0] == doctest::Approx(curvature).epsilon(kEps));
  CHECK(result.hessians[1] == doctest::Approx(curvature).epsilon(kEps));
}

TEST_CASE("sigma scales gradients and squares into hessians") {
  double sigma = 2.0;
  auto result = compute_lambdas({0.0, 0.0}, {1, 0}, sigma);
  double dndcg = 1.0 - 1.0 / std::log2(3.0);
  CHECK(result.gradients[0] == doctest::Approx(-sigma * 0.5 * dndcg).epsilon(kEps));
  CHECK(result.hessians[0] ==
        doctest::Approx(sigma * sigma * 0.25 * dndcg).epsilon(kEps));
}

TEST_CASE("uniform labels produce a silent query") {
  for (auto labels : {std::vector<int>{1, 1, 1}, std::vector<int>{0, 0, 0}}) {
    auto result = compute_lambdas({0.3, 0.1, 0.7}, labels, 1.0);
    for (double g : result.gradients) CHECK(g == 0.0);
    for (double h : result.hessians) CHECK(h == 0.0);
    CHECK(pairwise_loss({0.3, 0.1, 0.7}, labels, 1.0) == 0.0);
  }
}

TEST_CASE("loss hand computation at equal scores") {
  double dndcg = 1.0 - 1.0 / std::log2(3.0);
  CHECK(pairwise_loss({0.0, 0.0}, {1, 0}, 1.0) ==
        doctest::Approx(std::log(2.0) * dndcg).epsilon(kEps));
}

TEST_CASE("gradients of every query sum to zero") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 50; ++round) {
    auto query = make_query(rng);
    auto result = compute_lambdas(query.scores, query.labels, 1.0);
    double sum = 0;
    for (double g : result.gradients) sum += g;
    CHECK(sum == doctest::Approx(0.0).epsilon(1e-12));
    for (double h : result.hessians) CHECK(h >= 0.0);
  }
}

TEST_CASE("gradients match central finite differences of the loss") {
  std::mt19937_64 rng(7);
  const double eps = 1e-6;
  for (int round = 0; round < 20; ++round) {
    auto query = make_query(rng);
    auto result = compute_lambdas(query.scores, query.labels, 1.0);
    for (std::size_t d = 0; d < query.scores.size(); ++d) {
      auto bumped = query.scores;
      bumped[d] += eps;
      double up = pairwise_loss(bumped, query.labels, 1.0);
      bumped[d] = query.scores[d] - eps;
      double down = pairwise_loss(bumped, query.labels, 1.0);
      double fd = (up - down) / (2.0 * eps);
      double g = result.gradients[d];
      double rel = std::abs(fd - g) / std::max(1e-8, std::abs(fd) + std::abs(g));
      CAPTURE(round);
      CAPTURE(d);
      CHECK(rel < 1e-4);
    }
  }
}

TEST_CASE("hessians match second finite differences of the loss") {
  std::mt19937_64 rng(11);
  const double eps = 1e-3;
  for (int round = 0; round < 10; ++round) {
    auto query = make_query(rng);
    // Widen separations so an eps bump cannot cross a neighbour.
    for (double& s : query.scores) s *= 100.0;
    auto result = compute_lambdas(query.scores, query.labels, 1.0);
    double mid = pairwise_loss(query.scores, query.labels, 1.0);
    for (std::size_t d = 0; d < query.scores.size(); ++d) {
      auto bumped = query.scores;
      bumped[d] += eps;
      double up = pairwise_loss(bumped, query.labels, 1.0);
      bumped[d] = query.scores[d] - eps;
      double down = pairwise_loss(bumped, query.labels, 1.0);
      double fd = (up - 2.0 * mid + down) / (eps * eps);
      double h = result.hessians[d];
      CAPTURE(round);
      CAPTURE(d);
      CHECK(std::abs(fd - h) < 1e-5 + 1e-3 * std::abs(h));
    }
  }
}

TEST_CASE("one gradient step lowers the loss") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    auto query = make_query(rng);
    double before = pairwise_loss(query.scores, query.labels, 1.0);
    if (before == 0.0) continue;
    auto result = compute_lambdas(query.scores, query.labels, 1.0);
    auto moved = query.scores;
    for (std::size_t d = 0; d < moved.size(); ++d)
      moved[d] -= 1e-6 * result.gradients[d];
    // The frozen-delta loss at the new scores, weights re-frozen there; a
    // small enough step cannot reorder, so the comparison is apples to
    // apples.
    double after = pairwise_loss(moved, query.labels, 1.0);
    CHECK(after <= before);
  }
}

TEST_SUITE_END();
