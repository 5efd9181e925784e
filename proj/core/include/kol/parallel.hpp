#pragma once

#include <cstddef>
#include <functional>

namespace kol {

/// Worker count: KOL_MAX_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned max_threads();

/// Runs body(i) for i in [0, n). Indices are handed out dynamically, so
/// body must only write to slots owned by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kol
