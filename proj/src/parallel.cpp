#include "wreath/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wreath {

int worker_count() {
  const char* env = std::getenv("WREATH_CHARS_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = static_cast<std::size_t>(worker_count());
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = std::min(workers, count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wreath
