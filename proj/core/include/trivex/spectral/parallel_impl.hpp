#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace trivex::spectral {

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn, std::size_t min_items) {
  const auto t = static_cast<std::size_t>(std::max(1, threads));
  if (t == 1 || n < min_items) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + t - 1) / t;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back([&fn, b, e = std::min(n, b + chunk)] { fn(b, e); });
  for (auto& th : pool) th.join();
}

}  // namespace trivex::spectral
