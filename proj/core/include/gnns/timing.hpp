#pragma once

#include <chrono>
#include <functional>

namespace gnns {

/// Monotonic time source in seconds. Injected so callers (and tests) control
/// what gets timed.
using Clock = std::function<double()>;

inline Clock steady_clock() {
  return [] {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
  };
}

}  // namespace gnns
