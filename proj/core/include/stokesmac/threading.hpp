/// Parallelism cap. STOKES_MAC_THREADS limits worker threads; the default
/// of 1 keeps runs reproducible.

#pragma once

#include <functional>

namespace stokesmac {

int max_threads();

/// Runs both callables, on two threads when the cap allows.
void run_pair(const std::function<void()>& a, const std::function<void()>& b);

}  // namespace stokesmac
