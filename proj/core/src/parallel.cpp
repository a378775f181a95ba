#include "mg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mg {
namespace {

std::atomic<int> g_busy_workers{0};

int worker_budget() {
  static const int budget = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  return budget;
}

}  // namespace

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  int extra = std::min<int>(static_cast<int>(count) - 1, worker_budget() - 1 - g_busy_workers.load());
  if (extra <= 0) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  g_busy_workers += extra;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(extra));
  for (int t = 0; t < extra; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  g_busy_workers -= extra;
  if (error) std::rethrow_exception(error);
}

}  // namespace mg
