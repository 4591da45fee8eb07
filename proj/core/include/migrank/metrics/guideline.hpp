#pragma once

#include <string>

#include "migrank/metrics/feature_schema.hpp"

namespace migrank::metrics {

// Migration-order buckets, most urgent first: data-model classes, then
// tests, then utility classes, then everything else.
enum class GuidelineCategory { data_model = 0, test = 1, utility = 2, other = 3 };

GuidelineCategory classify_guideline_category(const FeatureVector& fv);

std::string to_string(GuidelineCategory category);

}  // namespace migrank::metrics
