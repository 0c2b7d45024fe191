#include "kinspec/parallel.hpp"

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kinspec {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t, std::size_t, int)>& body) {
  if (workers <= 1 || count <= 1) {
    body(0, count, 0);
    return;
  }
  const auto w = static_cast<std::size_t>(workers) < count ? static_cast<std::size_t>(workers) : count;
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  threads.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t begin = count * k / w;
    const std::size_t end = count * (k + 1) / w;
    threads.emplace_back([&, begin, end, k] {
      try {
        body(begin, end, static_cast<int>(k));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kinspec
