#pragma once

// Shared loop for one- and two-sided sums driven by a step function.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/hyperseries.hpp"

namespace qseries::detail {

// Terms must rise this many steps in a row, after this many steps, and
// exceed every partial sum before a tail is declared divergent.
inline constexpr std::size_t kGrowthRun = 30;
inline constexpr std::size_t kGrowthStart = 30;

class Accumulator {
 public:
  Accumulator(const Ext& first, const Truncation& trunc)
      : sum_(first), max_log_(first.log2_abs()), log_eps_(std::log2(trunc.eps)), trunc_(trunc) {}

  const Ext& sum() const { return sum_; }

  // Adds t; returns true when the current tail may stop.
  bool add(const Ext& t) {
    sum_ += t;
    max_log_ = std::max(max_log_, sum_.log2_abs());
    const Real lt = t.log2_abs();
    if (t.is_zero() || lt < log_eps_ + max_log_) {
      ++small_;
    } else {
      small_ = 0;
    }
    return small_ >= trunc_.consecutive_small;
  }

  void start_tail() {
    small_ = 0;
    grow_ = 0;
    last_log_ = -INFINITY;
  }

  // Call after add(); throws when the tail keeps growing.
  void check_growth(std::size_t step, const Ext& t, const char* what) {
    const Real lt = t.log2_abs();
    grow_ = (lt > last_log_ && step > kGrowthStart && lt >= max_log_ - 8) ? grow_ + 1 : 0;
    last_log_ = lt;
    if (grow_ >= kGrowthRun) {
      throw DivergenceDetected(std::string(what) + ": terms keep growing");
    }
  }

 private:
  Ext sum_;
  Real max_log_;
  Real log_eps_;
  Real last_log_ = -INFINITY;
  std::size_t small_ = 0;
  std::size_t grow_ = 0;
  const Truncation& trunc_;
};

[[noreturn]] inline void budget(const char* what, std::size_t n) {
  std::ostringstream os;
  os << what << ": not converged after " << n << " terms";
  throw BudgetExceeded(os.str());
}

// up(n, t_n) -> t_{n+1}, down(n, t_n) -> t_{n-1}, both starting at n = 0.
template <class Up, class Down>
Ext sum_two_tails(const Ext& t0, Up&& up, Down&& down, const Truncation& trunc, TailStats* stats,
                  const char* what) {
  Accumulator acc(t0, trunc);
  TailStats local;
  Ext t = t0;
  acc.start_tail();
  for (std::int64_t n = 0;; ++n) {
    if (local.forward >= trunc.max_terms) budget(what, local.forward);
    t = up(n, t);
    ++local.forward;
    if (acc.add(t)) break;
    acc.check_growth(local.forward, t, what);
  }
  t = t0;
  acc.start_tail();
  for (std::int64_t n = 0;; --n) {
    if (local.backward >= trunc.max_terms) budget(what, local.backward);
    t = down(n, t);
    ++local.backward;
    if (acc.add(t)) break;
    acc.check_growth(local.backward, t, what);
  }
  if (stats) *stats = local;
  return acc.sum();
}

}  // namespace qseries::detail
