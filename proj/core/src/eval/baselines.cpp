#include "migrank/eval/baselines.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>

#include "migrank/errors.hpp"
#include "migrank/hash.hpp"
#include "migrank/metrics/guideline.hpp"

namespace migrank::eval {

namespace {

// Unbiased draw from [0, bound) by rejection; avoids the
// implementation-defined std::uniform_int_distribution.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
  std::uint64_t value = rng();
  while (value >= limit) value = rng();
  return value % bound;
}

}  // namespace

std::vector<std::size_t> random_rank(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (n < 2) return order;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::uint64_t j = draw_below(rng, static_cast<std::uint64_t>(i) + 1);
    std::swap(order[i], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

std::vector<std::size_t> guideline_rank(
    const std::vector<ltr::RankingDocument>& documents) {
  std::vector<metrics::GuidelineCategory> categories;
  categories.reserve(documents.size());
  for (const ltr::RankingDocument& doc : documents) {
    if (doc.features.size() != metrics::kFeatureCount)
      throw FeatureArityMismatch(metrics::kFeatureCount, doc.features.size());
    std::array<double, metrics::kFeatureCount> values{};
    std::copy(doc.features.begin(), doc.features.end(), values.begin());
    categories.push_back(metrics::classify_guideline_category(
        metrics::FeatureVector::from_array(values)));
  }
  std::vector<std::size_t> order(documents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (categories[a] != categories[b]) return categories[a] < categories[b];
    return documents[a].doc_id < documents[b].doc_id;
  });
  return order;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
  return (base_seed + static_cast<std::uint64_t>(trial)) * 0x9E3779B97F4A7C15ULL;
}

std::uint64_t query_trial_seed(const std::string& query_id, std::uint64_t base_seed,
                               int trial) {
  return fnv1a64(query_id) ^ trial_seed(base_seed, trial);
}

}  // namespace migrank::eval
