#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace trivex {

// 64-bit FNV-1a. Stable across platforms and builds, which std::hash is not;
// used for cache keys and export provenance headers.
constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v);

}  // namespace trivex
