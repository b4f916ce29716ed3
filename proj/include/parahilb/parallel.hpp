#pragma once

// Minimal static work partitioning over std::thread. Each worker gets its own
// accumulator; callers merge them afterwards (all merges are associative).

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace parahilb {

/// Runs body(i, acc) for i in [0, n) on up to `jobs` workers, round-robin.
/// Returns one accumulator per worker in worker order.
template <class Acc, class Body>
std::vector<Acc> parallel_accumulate(std::size_t n, unsigned jobs, Body body) {
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<Acc> accs(workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i, accs[0]);
    return accs;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i, accs[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : pool) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return accs;
}

} // namespace parahilb
