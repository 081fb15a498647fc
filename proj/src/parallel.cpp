#include "coxgrowth/parallel.hpp"

namespace coxgrowth {

namespace {
std::atomic<std::size_t> configured_threads{0};
}

std::size_t default_threads() {
  const std::size_t n = configured_threads.load();
  if (n != 0) return n;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_default_threads(std::size_t n) { configured_threads.store(n); }

}  // namespace coxgrowth
