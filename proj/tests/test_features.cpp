#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "feature_fixtures.hpp"
#include "migrank/metrics/feature_schema.hpp"
#include "migrank/metrics/features.hpp"

using namespace migrank::metrics;
using testsupport::diff_features;
using testsupport::feature_fixtures;

namespace {

FeatureVector extract_single(const std::string& path, const std::string& source) {
  ProjectSnapshot snapshot(std::vector<SnapshotFile>{{path, source}});
  return snapshot.extract(path).features;
}

bool is_binary_feature(std::string_view name) {
  return name.rfind("is_", 0) == 0 || name == "has_android_coupling";
}

}  // namespace

TEST_SUITE_BEGIN("features");

TEST_CASE("golden corpus matches hand-computed vectors") {
  for (const auto& fixture : feature_fixtures()) {
    CAPTURE(fixture.name);
    ProjectSnapshot snapshot(fixture.files);
    auto result = snapshot.extract(fixture.target);
    auto diffs = diff_features(fixture.expected, result.features);
    std::string joined;
    for (const auto& diff : diffs) joined += diff + "; ";
    INFO("mismatches: ", joined);
    CHECK(diffs.empty());
  }
}

TEST_CASE("unknown paths are rejected") {
  ProjectSnapshot snapshot(std::vector<SnapshotFile>{{"A.java", "class A {}"}});
  CHECK_THROWS_AS(snapshot.extract("B.java"), std::out_of_range);
  CHECK(snapshot.has_file("A.java"));
  CHECK_FALSE(snapshot.has_file("B.java"));
}

TEST_CASE("binary features never leave zero or one") {
  for (const auto& fixture : feature_fixtures()) {
    ProjectSnapshot snapshot(fixture.files);
    auto values = snapshot.extract(fixture.target).features.to_array();
    const auto& names = feature_names();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!is_binary_feature(names[i])) continue;
      CAPTURE(fixture.name);
      CAPTURE(names[i]);
      CHECK((values[i] == 0.0 || values[i] == 1.0));
    }
  }
}

TEST_CASE("derived binaries stay consistent") {
  for (const auto& fixture : feature_fixtures()) {
    ProjectSnapshot snapshot(fixture.files);
    auto fv = snapshot.extract(fixture.target).features;
    CAPTURE(fixture.name);
    bool block = fv.is_activity || fv.is_service || fv.is_broadcast_receiver ||
                 fv.is_content_provider;
    CHECK(fv.is_building_block == (block ? 1.0 : 0.0));
    CHECK(fv.has_android_coupling == (fv.methods_coupled > 0 ? 1.0 : 0.0));
    CHECK(fv.tcc >= 0.0);
    CHECK(fv.tcc <= 1.0);
    CHECK(fv.lcc >= fv.tcc);
    CHECK(fv.lcc <= 1.0);
    if (fv.methods > 0 || fv.fields > 0) CHECK(fv.dit >= 1.0);
  }
}

TEST_CASE("counts of a two-type file equal the sum over its types") {
  const std::string first =
      "class First {\n  int a;\n  int size() { return a; }\n}\n";
  const std::string second =
      "class Second {\n  int a;\n  int twice() { return a + a; }\n}\n";
  auto combined = extract_single("Pair.java", first + "\n" + second);
  auto lone_first = extract_single("First.java", first);
  auto lone_second = extract_single("Second.java", second);

  CHECK(combined.methods == lone_first.methods + lone_second.methods);
  CHECK(combined.fields == lone_first.fields + lone_second.fields);
  CHECK(combined.wmc == lone_first.wmc + lone_second.wmc);
  CHECK(combined.rfc == lone_first.rfc + lone_second.rfc);
  CHECK(combined.unique_words == lone_first.unique_words + lone_second.unique_words);
  CHECK(combined.returns == lone_first.returns + lone_second.returns);
  CHECK(combined.math_operations ==
        lone_first.math_operations + lone_second.math_operations);
  CHECK(combined.dit == std::max(lone_first.dit, lone_second.dit));
  CHECK(combined.max_nested_blocks ==
        std::max(lone_first.max_nested_blocks, lone_second.max_nested_blocks));
  CHECK(combined.tcc == (lone_first.tcc + lone_second.tcc) / 2.0);
}

TEST_CASE("resolving a superclass link never lowers hierarchy features") {
  const std::string child = "class Child extends Unknown { }\n";
  auto detached = extract_single("Child.java", child);
  CHECK(detached.dit == 1);
  CHECK(detached.is_in_android_hierarchy == 0);

  ProjectSnapshot linked({{"Child.java", child},
                          {"Unknown.java", "class Unknown extends Activity { }\n"}});
  auto resolved = linked.extract("Child.java").features;
  CHECK(resolved.dit == 3);
  CHECK(resolved.is_activity == 1);
  CHECK(resolved.dit >= detached.dit);
  CHECK(resolved.is_in_android_hierarchy >= detached.is_in_android_hierarchy);
}

TEST_CASE("cyclic extends chains terminate") {
  ProjectSnapshot snapshot({{"A.java", "class A extends B { }\n"},
                            {"B.java", "class B extends A { }\n"}});
  auto fv = snapshot.extract("A.java").features;
  CHECK(fv.dit == 2);  // A -> B, then the cycle guard stops the walk
  CHECK(fv.is_in_android_hierarchy == 0);
}

TEST_CASE("duplicate simple names resolve to the smallest path") {
  ProjectSnapshot snapshot({
      {"b/Dup.java", "class Dup { }\n"},
      {"a/Dup.java", "class Dup extends Activity { }\n"},
      {"c/Child.java", "class Child extends Dup { }\n"},
  });
  auto fv = snapshot.extract("c/Child.java").features;
  CHECK(fv.dit == 3);  // Dup resolved via a/Dup.java, which reaches Activity
  CHECK(fv.is_activity == 1);
}

TEST_CASE("extraction is pure: repeated runs agree") {
  for (const auto& fixture : feature_fixtures()) {
    ProjectSnapshot snapshot(fixture.files);
    auto first = snapshot.extract(fixture.target).features;
    auto second = snapshot.extract(fixture.target).features;
    CAPTURE(fixture.name);
    CHECK(first == second);
  }
}

TEST_CASE("a file of comments and blank lines yields empty counts") {
  auto fv = extract_single("Empty.java", "// nothing here\n\n/* still nothing */\n");
  CHECK(fv.sloc == 0);
  CHECK(fv.methods == 0);
  CHECK(fv.unique_words == 0);
  CHECK(fv.dit == 0);  // no type declaration at all
}

TEST_CASE("broken sources extract with diagnostics instead of throwing") {
  ProjectSnapshot snapshot(std::vector<SnapshotFile>{
      {"Broken.java", "class Broken { void f() { String s = \"open"}});
  auto result = snapshot.extract("Broken.java");
  CHECK(!result.diagnostics.empty());
  CHECK(result.features.methods == 1);
}

TEST_SUITE_END();
