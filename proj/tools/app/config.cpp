#include "app/config.hpp"

#include "trivex/error.hpp"

namespace trivex::app {

void RunConfig::validate() const {
  if (k < 1 || k > kMaxClass) throw InvalidArgument("--k must lie in 1.." + std::to_string(kMaxClass));
  if (k_max < 1 || k_max > kMaxClass) throw InvalidArgument("--k-max must lie in 1.." + std::to_string(kMaxClass));
  if (enum_cap == 0 || dense_cap <= 0 || iter_cap <= 0) throw InvalidArgument("caps must be positive");
  if (!(tol > 0)) throw InvalidArgument("--tol must be positive");
  if (threads < 1) throw InvalidArgument("--threads must be at least 1");
}

}  // namespace trivex::app
