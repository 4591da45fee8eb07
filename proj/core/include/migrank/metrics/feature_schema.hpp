#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace migrank::metrics {

// Canonical feature list. The macro is the single source of truth for field
// names, JSON key order and the flattened array layout; every consumer
// (extractor, trainer, serializers) goes through it, so the three can never
// drift apart.
//
// C(name): a count, aggregated across a file's top-level types by summing.
// B(name): a 0/1 flag, aggregated by OR.
// M(name): a structural maximum (nesting, hierarchy depth), aggregated by max.
// R(name): a ratio in [0,1], aggregated by averaging over the file's types.
#define MIGRANK_FEATURES(C, B, M, R) \
  C(sloc)                            \
  C(methods)                         \
  C(fields)                          \
  C(wmc)                             \
  M(max_nested_blocks)               \
  C(cbo)                             \
  C(rfc)                             \
  C(public_fields)                   \
  C(public_methods)                  \
  C(lcom)                            \
  R(tcc)                             \
  R(lcc)                             \
  M(dit)                             \
  C(unique_words)                    \
  C(loops)                           \
  C(assignments)                     \
  C(comparisons)                     \
  C(string_literals)                 \
  C(math_operations)                 \
  C(numbers)                         \
  C(default_fields)                  \
  C(default_methods)                 \
  C(final_fields)                    \
  C(final_methods)                   \
  C(static_fields)                   \
  C(static_methods)                  \
  C(private_fields)                  \
  C(private_methods)                 \
  C(protected_fields)                \
  C(protected_methods)               \
  C(abstract_methods)                \
  C(anonymous_classes)               \
  C(inner_classes)                   \
  C(lambdas)                         \
  C(nosi)                            \
  C(synchronized_fields)             \
  C(synchronized_methods)            \
  C(parenthesized_expressions)       \
  C(returns)                         \
  C(try_catches)                     \
  C(log_statements)                  \
  C(variables)                       \
  B(is_pojo)                         \
  B(is_test)                         \
  B(is_activity)                     \
  B(is_view)                         \
  B(is_broadcast_receiver)           \
  B(is_service)                      \
  B(is_content_provider)             \
  B(is_fragment)                     \
  B(is_building_block)               \
  B(is_in_android_hierarchy)         \
  C(parameters_coupled)              \
  C(returns_coupled)                 \
  C(methods_coupled)                 \
  B(has_android_coupling)

#define MIGRANK_COUNT_ONE(name) +1
inline constexpr std::size_t kFeatureCount =
    0 MIGRANK_FEATURES(MIGRANK_COUNT_ONE, MIGRANK_COUNT_ONE, MIGRANK_COUNT_ONE,
                       MIGRANK_COUNT_ONE);
#undef MIGRANK_COUNT_ONE

static_assert(kFeatureCount == 56);

struct FeatureVector {
#define MIGRANK_FIELD(name) double name = 0;
  MIGRANK_FEATURES(MIGRANK_FIELD, MIGRANK_FIELD, MIGRANK_FIELD, MIGRANK_FIELD)
#undef MIGRANK_FIELD

  bool operator==(const FeatureVector&) const = default;

  std::array<double, kFeatureCount> to_array() const {
    std::array<double, kFeatureCount> out{};
    std::size_t i = 0;
#define MIGRANK_PUT(name) out[i++] = name;
    MIGRANK_FEATURES(MIGRANK_PUT, MIGRANK_PUT, MIGRANK_PUT, MIGRANK_PUT)
#undef MIGRANK_PUT
    return out;
  }

  static FeatureVector from_array(const std::array<double, kFeatureCount>& in) {
    FeatureVector fv;
    std::size_t i = 0;
#define MIGRANK_GET(name) fv.name = in[i++];
    MIGRANK_FEATURES(MIGRANK_GET, MIGRANK_GET, MIGRANK_GET, MIGRANK_GET)
#undef MIGRANK_GET
    return fv;
  }
};

// Feature names in canonical order, matching to_array/from_array layout.
inline const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
#define MIGRANK_NAME(name) #name,
      MIGRANK_FEATURES(MIGRANK_NAME, MIGRANK_NAME, MIGRANK_NAME, MIGRANK_NAME)
#undef MIGRANK_NAME
  };
  return names;
}

}  // namespace migrank::metrics
