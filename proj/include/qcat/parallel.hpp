// Copyright 2026 The qcatalan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qcat::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates work(i) for i in [0, count) on a worker pool and hands each
/// result to sink(i, result) on the calling thread in index order.
/// The first exception thrown by a worker is rethrown after the pool drains.
template <typename Work, typename Sink>
void ordered_parallel_for(std::size_t count, unsigned jobs, Work work, Sink sink) {
  using Result = decltype(work(std::size_t{0}));
  jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(count, 1)));

  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) sink(i, work(i));
    return;
  }

  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop.load()) return;
      try {
        Result r = work(i);
        std::lock_guard lock(mu);
        slots[i].emplace(std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      ready.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t i = 0; i < count; ++i) {
    std::optional<Result> r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value() || failure != nullptr; });
      if (failure) break;
      r = std::move(slots[i]);
      slots[i].reset();
    }
    sink(i, *r);
  }
  stop = true;
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qcat::detail
