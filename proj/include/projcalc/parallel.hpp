#pragma once

#include <cstddef>
#include <functional>

namespace projcalc {

/// Worker count: hardware concurrency, capped by PROJCALC_THREADS when set to a positive integer.
unsigned thread_limit();

/// Runs f(0..n-1) on up to thread_limit() threads. The first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace projcalc
