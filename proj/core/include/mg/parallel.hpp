#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace mg {

/// Runs body(0..count-1) on up to hardware_concurrency worker threads.
/// Nested calls run inline once the process-wide worker budget is used up.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// parallel_for collecting results by index, so the output order is
/// independent of scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
  std::vector<std::optional<T>> slots(count);
  parallel_for(count, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace mg
