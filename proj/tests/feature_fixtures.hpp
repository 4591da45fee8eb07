#pragma once

#include <string>
#include <vector>

#include "migrank/metrics/feature_schema.hpp"
#include "migrank/metrics/features.hpp"

namespace testsupport {

// One golden extraction case: a small snapshot, a target file and the full
// feature vector computed by hand from the documented counting rules.
struct FeatureFixture {
  std::string name;
  std::string target;
  std::vector<migrank::metrics::SnapshotFile> files;
  migrank::metrics::FeatureVector expected;
};

const std::vector<FeatureFixture>& feature_fixtures();

// Mismatching features as "name: expected E, got G" lines; empty when equal.
std::vector<std::string> diff_features(const migrank::metrics::FeatureVector& expected,
                                       const migrank::metrics::FeatureVector& actual);

}  // namespace testsupport
