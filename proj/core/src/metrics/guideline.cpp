#include "migrank/metrics/guideline.hpp"

namespace migrank::metrics {

GuidelineCategory classify_guideline_category(const FeatureVector& fv) {
  if (fv.is_pojo >= 1) return GuidelineCategory::data_model;
  if (fv.is_test >= 1) return GuidelineCategory::test;
  if (fv.methods > 0 && fv.methods == fv.static_methods) return GuidelineCategory::utility;
  return GuidelineCategory::other;
}

std::string to_string(GuidelineCategory category) {
  switch (category) {
    case GuidelineCategory::data_model:
      return "data_model";
    case GuidelineCategory::test:
      return "test";
    case GuidelineCategory::utility:
      return "utility";
    case GuidelineCategory::other:
      return "other";
  }
  return "other";
}

}  // namespace migrank::metrics
