#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ompstat {

// Runs fn(0..count-1) across up to `jobs` worker threads.  Work items must
// write only to their own result slots; merge order is then independent of
// scheduling, which keeps all outputs byte-identical across parallelism
// settings.  The first exception thrown by a worker is rethrown here.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (failure) break;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        break;
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                              count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t j = 0; j < workers; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ompstat
