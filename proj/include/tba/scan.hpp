#ifndef TBA_SCAN_HPP_
#define TBA_SCAN_HPP_

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

// Deterministic scan kernels over dense index spaces. The OpenMP variants
// are the production path; the serial ones are the reference implementation
// the tests compare against (and the fallback without OpenMP). Results are
// independent of the worker count: find_first always reports the minimal
// matching index.

namespace tba::scan {

inline constexpr uint64_t npos = ~uint64_t{0};

namespace serial {

template <typename Pred>
uint64_t find_first(uint64_t count, Pred pred) {
  for (uint64_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return npos;
}

template <typename Pred>
bool all_of(uint64_t count, Pred pred) {
  for (uint64_t i = 0; i < count; ++i)
    if (!pred(i)) return false;
  return true;
}

template <typename Pred>
uint64_t count_if(uint64_t count, Pred pred) {
  uint64_t total = 0;
  for (uint64_t i = 0; i < count; ++i)
    if (pred(i)) ++total;
  return total;
}

}  // namespace serial

#ifdef _OPENMP

template <typename Pred>
uint64_t find_first(uint64_t count, Pred pred) {
  std::atomic<uint64_t> best{npos};
  const int64_t n = static_cast<int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t i = 0; i < n; ++i) {
    uint64_t u = static_cast<uint64_t>(i);
    // Indices above the current best cannot improve it.
    if (u >= best.load(std::memory_order_relaxed)) continue;
    if (!pred(u)) continue;
    uint64_t seen = best.load(std::memory_order_relaxed);
    while (u < seen &&
           !best.compare_exchange_weak(seen, u, std::memory_order_relaxed)) {
    }
  }
  return best.load();
}

template <typename Pred>
bool all_of(uint64_t count, Pred pred) {
  std::atomic<bool> ok{true};
  const int64_t n = static_cast<int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t i = 0; i < n; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!pred(static_cast<uint64_t>(i)))
      ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

template <typename Pred>
uint64_t count_if(uint64_t count, Pred pred) {
  uint64_t total = 0;
  const int64_t n = static_cast<int64_t>(count);
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (int64_t i = 0; i < n; ++i)
    if (pred(static_cast<uint64_t>(i))) ++total;
  return total;
}

inline void set_workers(int n) { omp_set_num_threads(n); }
inline int worker_count() { return omp_get_max_threads(); }

#else

template <typename Pred>
uint64_t find_first(uint64_t count, Pred pred) {
  return serial::find_first(count, pred);
}

template <typename Pred>
bool all_of(uint64_t count, Pred pred) {
  return serial::all_of(count, pred);
}

template <typename Pred>
uint64_t count_if(uint64_t count, Pred pred) {
  return serial::count_if(count, pred);
}

inline void set_workers(int) {}
inline int worker_count() { return 1; }

#endif

}  // namespace tba::scan

#endif  // TBA_SCAN_HPP_
