#include "netflippa/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace netflippa {

namespace {

int env_default() {
  if (const char* env = std::getenv("NETFLIPPA_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_max_threads{0};  // 0 = use env_default()

thread_local bool t_in_parallel = false;

}  // namespace

int max_threads() {
  int n = g_max_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : env_default();
}

void set_max_threads(int n) {
  if (n < 0) throw std::invalid_argument("set_max_threads: negative count");
  g_max_threads.store(n, std::memory_order_relaxed);
}

void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  if (begin >= end) return;
  const int count = end - begin;
  const int workers = t_in_parallel ? 1 : std::min(max_threads(), count);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }

  std::atomic<int> next{begin};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&]() {
    t_in_parallel = true;
    while (!failed.load(std::memory_order_relaxed)) {
      int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= end) break;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
    t_in_parallel = false;
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  if (error) std::rethrow_exception(error);
}

}  // namespace netflippa
