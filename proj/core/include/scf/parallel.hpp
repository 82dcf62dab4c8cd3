#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace scf {

/// Runs per_chunk over [begin, end) on `workers` threads and returns the
/// result of the lowest-index chunk that produced one. per_chunk(c) must
/// itself return the chunk-local first hit, so the combined result equals
/// the sequential scan's first hit regardless of thread count or timing.
/// Chunks above the best hit found so far are skipped.
template <class T, class Fn>
std::optional<T> first_hit_scan(std::int64_t begin, std::int64_t end, int workers, Fn per_chunk) {
  if (begin >= end) return std::nullopt;
  if (workers <= 1) {
    for (std::int64_t c = begin; c < end; ++c)
      if (auto r = per_chunk(c)) return r;
    return std::nullopt;
  }

  std::atomic<std::int64_t> next{begin};
  std::atomic<std::int64_t> best{end};
  std::map<std::int64_t, T> hits;
  std::mutex hits_mutex;

  auto work = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= end) return;
      if (c > best.load()) continue;
      if (auto r = per_chunk(c)) {
        std::lock_guard<std::mutex> lock(hits_mutex);
        hits.emplace(c, std::move(*r));
        std::int64_t cur = best.load();
        while (c < cur && !best.compare_exchange_weak(cur, c)) {
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  if (hits.empty()) return std::nullopt;
  return hits.begin()->second;
}

}  // namespace scf
