#pragma once

#include <cstddef>

namespace tpk {

/// Bounds for the unlink-certification search. All three are enforced.
struct SearchBudget {
  int max_depth = 32;
  std::size_t max_states = 200000;
  double time_limit_seconds = 30.0;
};

} // namespace tpk
