#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace migrank {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

// 64-bit FNV-1a folded over a raw byte range; chainable via the hash argument.
inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t hash = kFnvOffsetBasis) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= kFnvPrime;
  }
  return hash;
}

inline std::uint64_t fnv1a64(std::string_view text,
                             std::uint64_t hash = kFnvOffsetBasis) {
  return fnv1a64(text.data(), text.size(), hash);
}

}  // namespace migrank
