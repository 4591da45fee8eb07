#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "migrank/ltr/dataset.hpp"

namespace migrank::eval {

// Uniform random permutation of [0, n) from a seeded deterministic
// generator; the same seed always yields the same order on every platform.
std::vector<std::size_t> random_rank(std::size_t n, std::uint64_t seed);

// Orders documents the way the official migration advice suggests: data
// model classes first, then tests, then utility classes, then the rest;
// ties within a bucket break by ascending doc id. Documents must carry the
// full feature schema (throws FeatureArityMismatch otherwise).
std::vector<std::size_t> guideline_rank(const std::vector<ltr::RankingDocument>& documents);

// Seed for one (query, trial) cell of the random baseline, derived so that
// every query gets an independent stream while staying reproducible from
// the base seed alone.
std::uint64_t query_trial_seed(const std::string& query_id, std::uint64_t base_seed,
                               int trial);

// The trial component of query_trial_seed, logged in reports so a run can
// be replayed.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

}  // namespace migrank::eval
