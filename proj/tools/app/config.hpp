#pragma once

#include <cstdint>
#include <string>

namespace trivex::app {

inline constexpr int kMaxClass = 6;

struct RunConfig {
  int k = 2;
  int k_max = 5;
  std::uint64_t enum_cap = std::uint64_t{1} << 20;  // group elements
  int dense_cap = 2048;                              // vertices
  int iter_cap = 2000;                               // Lanczos restarts
  double tol = 1e-8;
  std::string out_dir = "trivex-out";
  std::string cache_dir;  // empty disables the cache
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format;  // empty selects the command default

  // Throws InvalidArgument on a non-positive cap or a class outside 1..kMaxClass.
  void validate() const;
};

}  // namespace trivex::app
