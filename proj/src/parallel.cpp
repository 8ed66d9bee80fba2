#include "tamehall/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tamehall {

namespace {
std::atomic<int> configured{0};
}

void set_thread_count(int n) { configured = std::max(0, n); }

int thread_count() {
  const int n = configured.load();
  if (n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t workers = std::min<std::uint64_t>(thread_count(), count);
  if (workers <= 1) {
    if (count > 0) body(0, count);
    return;
  }
  // Small chunks handed out dynamically keep uneven work balanced.
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (workers * 16));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        while (true) {
          const std::uint64_t begin = next.fetch_add(chunk);
          if (begin >= count) break;
          body(begin, std::min(count, begin + chunk));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tamehall
