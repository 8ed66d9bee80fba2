#pragma once

#include <cstdint>
#include <functional>

namespace tamehall {

/// Worker count used by parallel_for; 0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

/// Calls body(begin, end) on disjoint chunks covering [0, count).
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace tamehall
