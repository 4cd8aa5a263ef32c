#ifndef MACD_PARALLEL_HPP
#define MACD_PARALLEL_HPP

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace macd {

struct CaseReport {
  std::string suite;
  std::string case_id;
  std::string lhs;
  std::string rhs;
  bool ok = false;
  long ms = 0;
};

using CaseFn = std::function<CaseReport()>;

// Reference implementation: runs every case in order on one thread.
std::vector<CaseReport> run_cases_serial(const std::vector<CaseFn>& cases);

// OpenMP work queue over independent cases; results land in input order, so
// the report stream is byte-identical to the serial one.
std::vector<CaseReport> run_cases_parallel(const std::vector<CaseFn>& cases,
                                           int jobs);

// Dispatches on jobs (<= 1 selects the serial reference).
std::vector<CaseReport> run_cases(const std::vector<CaseFn>& cases, int jobs);

// Concurrent-safe memo map with at-most-once insertion per key.
template <typename K, typename V>
class ConcurrentCache {
 public:
  template <typename Fn>
  V get_or_compute(const K& key, Fn&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return it->second;
  }

 private:
  std::map<K, V> map_;
  std::shared_mutex mutex_;
};

}  // namespace macd

#endif  // MACD_PARALLEL_HPP
