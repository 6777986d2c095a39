#pragma once

#include "app/ledger.hpp"
#include "app/pipeline.hpp"

namespace trivex::app {

// One ledger row per acceptance claim, restricted to classes up to
// config().k_max. A throwing check becomes a failing row; the remaining
// checks still run.
Ledger verify_all(Pipeline& pipe);

}  // namespace trivex::app
