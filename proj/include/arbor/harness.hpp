#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "arbor/arbor.hpp"

namespace arbor {

struct SweepConfig {
  int max_size = 8;
  std::size_t guard_elements = 200000;
  int series_order = 10;
  int jobs = 0;  // 0 means hardware concurrency
  std::string format = "json";

  int worker_count() const;
};

/// Reads the same keys from a JSON file; missing keys keep their defaults.
/// Throws std::runtime_error on unreadable files or bad values.
SweepConfig load_config(const std::string& path, SweepConfig base = {});
/// Throws std::invalid_argument on non-positive guards or unknown format.
void validate(const SweepConfig& cfg);

/// fn over items on a small worker pool; results keep the input order.
/// The first exception thrown by fn is rethrown after all workers stop.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
        next = items.size();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Verdict {
  std::string subject;
  bool pass = true;
  std::string detail;
};

/// All arbors of size 1..max_size, in size then encoding order.
std::vector<Arbor> arbors_up_to(int max_size);

/// Ehrhart-Zeta duality and h-vector equality for linear arbors.
std::vector<Verdict> ez_sweep(const SweepConfig& cfg);
/// Ehrhart roots in [-1, 0) and positive coefficients.
std::vector<Verdict> roots_sweep(const SweepConfig& cfg);
/// transmute twice is the identity, and the substitution route agrees
/// with the route through K.
std::vector<Verdict> involution_sweep(const SweepConfig& cfg);

/// Fixed reference values; a mismatch shows expected and computed text.
std::vector<Verdict> golden_suite();

bool all_pass(const std::vector<Verdict>& v);

}  // namespace arbor
