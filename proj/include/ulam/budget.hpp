#pragma once

#include <chrono>
#include <cstdint>

namespace ulam {

/// Work limits for the exact searches. Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;

  static Budget unlimited() { return {}; }
};

/// Tracks node count and wall time against a Budget.
class BudgetClock {
public:
  /// Wall time is sampled every `time_check_interval` ticks (a power of two).
  explicit BudgetClock(const Budget &budget, std::uint64_t time_check_interval = 256)
      : budget_(budget), mask_(time_check_interval - 1), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; returns false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
      exhausted_ = true;
    } else if (budget_.max_seconds > 0.0 && (nodes_ & mask_) == 0 && elapsed() > budget_.max_seconds) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  Budget budget_;
  std::uint64_t mask_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

} // namespace ulam
