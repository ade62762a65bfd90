#pragma once

#include <functional>

namespace netflippa {

// Thread cap for parallel_for. Defaults to the NETFLIPPA_THREADS environment
// variable when set, otherwise the hardware concurrency.
int max_threads();

/// Override the thread cap; 0 restores the environment/hardware default.
void set_max_threads(int n);

// Runs body(i) for i in [begin, end). Iterations must be independent; each
// writes only its own outputs, so parallel and sequential schedules produce
// identical results. Nested calls run inline on the caller's thread.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace netflippa
