#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace comax {

/// Splits [0, total) into at most `jobs` contiguous shards, runs
/// `fn(begin, end)` on each and returns the partial results in shard order.
/// Callers merge in that order, so the outcome does not depend on scheduling.
template <class Fn>
auto run_sharded(std::uint64_t total, unsigned jobs, Fn fn) {
  using Partial = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  jobs = std::max(1u, jobs);
  const std::uint64_t shards = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));

  std::vector<Partial> partials(shards);
  if (shards == 1) {
    partials[0] = fn(0, total);
    return partials;
  }

  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (std::uint64_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = total * s / shards;
    const std::uint64_t end = total * (s + 1) / shards;
    workers.emplace_back([&, s, begin, end] {
      try {
        partials[s] = fn(begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

}  // namespace comax
