// Copyright 2026 The utctime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive bounded checker: evaluates a pure boolean predicate on
// every point of up to three half-open integer ranges, in parallel, and
// reports either Pass or the lexicographically smallest counterexample.
// The result is independent of chunking and worker count.
//
// Predicates must be pure and safe to call concurrently; arguments are
// delivered as exact unsigned 64-bit values, and overflow inside a
// predicate is its author's concern.

#ifndef UTCTIME_RANGE_CHECK_HPP_
#define UTCTIME_RANGE_CHECK_HPP_

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace utctime {

// Half-open interval [lo, hi); empty when lo >= hi.
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

class CheckResult {
 public:
  static CheckResult pass() { return CheckResult({}); }
  static CheckResult fail(std::vector<std::uint64_t> values) {
    return CheckResult(std::move(values));
  }

  bool passed() const { return counterexample_.empty(); }
  // The smallest falsifying tuple in lexicographic order; empty on pass.
  const std::vector<std::uint64_t>& counterexample() const {
    return counterexample_;
  }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;

 private:
  explicit CheckResult(std::vector<std::uint64_t> values)
      : counterexample_(std::move(values)) {}
  std::vector<std::uint64_t> counterexample_;
};

struct CheckOptions {
  unsigned workers = 0;         // 0: hardware concurrency
  std::uint64_t block_size = 0;  // 0: default first-axis block
};

namespace rc_detail {

inline constexpr std::uint64_t kNoFailure =
    std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kDefaultBlock = 1 << 16;

// Scans the first axis in ascending blocks. `probe(x, rest)` reports
// whether some completion of x falsifies the predicate, writing the
// lexicographically smallest completion into `rest`; it must search
// completions in ascending order. Returns the offset of the smallest
// failing x (and its completion), or kNoFailure.
template <typename Probe>
std::uint64_t scan_first_axis(Range r, Probe&& probe,
                              std::array<std::uint64_t, 2>& rest_out,
                              const CheckOptions& opt) {
  if (r.lo >= r.hi) return kNoFailure;
  const std::uint64_t span = r.hi - r.lo;
  std::uint64_t block = opt.block_size != 0 ? opt.block_size : kDefaultBlock;
  if (block == 0 || block > span) block = span;
  const std::uint64_t nblocks = (span - 1) / block + 1;

  unsigned workers = opt.workers != 0 ? opt.workers
                                      : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > nblocks) workers = static_cast<unsigned>(nblocks);

  if (workers <= 1) {
    std::array<std::uint64_t, 2> rest{};
    for (std::uint64_t off = 0; off < span; ++off) {
      if (probe(r.lo + off, rest)) {
        rest_out = rest;
        return off;
      }
    }
    return kNoFailure;
  }

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{kNoFailure};
  std::mutex mu;
  std::array<std::uint64_t, 2> best_rest{};

  auto worker = [&] {
    std::array<std::uint64_t, 2> rest{};
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= nblocks) return;
      const std::uint64_t start = b * block;
      // A block at or past the current best cannot improve the minimum:
      // `best` only decreases and any failure here has offset >= start.
      if (start >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = block < span - start ? start + block : span;
      for (std::uint64_t off = start; off < end; ++off) {
        if (!probe(r.lo + off, rest)) continue;
        // First failure in an ascending scan is this block's minimum.
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (off < cur &&
               !best.compare_exchange_weak(cur, off,
                                           std::memory_order_relaxed)) {
        }
        std::lock_guard<std::mutex> lock(mu);
        if (off <= best.load(std::memory_order_relaxed)) best_rest = rest;
        break;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  const std::uint64_t result = best.load();
  if (result != kNoFailure) {
    std::lock_guard<std::mutex> lock(mu);
    rest_out = best_rest;
  }
  return result;
}

inline void self_check(bool predicate_holds) {
  // A reported counterexample must actually falsify the predicate;
  // anything else means the predicate is impure or racy.
  if (predicate_holds) {
    throw std::logic_error(
        "range_check: reported counterexample satisfies the predicate "
        "(impure predicate?)");
  }
}

}  // namespace rc_detail

template <typename Pred>
CheckResult check_range1(Pred&& pred, Range r, const CheckOptions& opt = {}) {
  std::array<std::uint64_t, 2> rest{};
  const std::uint64_t off = rc_detail::scan_first_axis(
      r,
      [&](std::uint64_t x, std::array<std::uint64_t, 2>&) { return !pred(x); },
      rest, opt);
  if (off == rc_detail::kNoFailure) return CheckResult::pass();
  const std::uint64_t x = r.lo + off;
  rc_detail::self_check(pred(x));
  return CheckResult::fail({x});
}

template <typename Pred>
CheckResult check_range2(Pred&& pred, Range r1, Range r2,
                         const CheckOptions& opt = {}) {
  std::array<std::uint64_t, 2> rest{};
  const std::uint64_t off = rc_detail::scan_first_axis(
      r1,
      [&](std::uint64_t x, std::array<std::uint64_t, 2>& out) {
        for (std::uint64_t y = r2.lo; y < r2.hi; ++y) {
          if (!pred(x, y)) {
            out[0] = y;
            return true;
          }
        }
        return false;
      },
      rest, opt);
  if (off == rc_detail::kNoFailure) return CheckResult::pass();
  const std::uint64_t x = r1.lo + off;
  rc_detail::self_check(pred(x, rest[0]));
  return CheckResult::fail({x, rest[0]});
}

template <typename Pred>
CheckResult check_range3(Pred&& pred, Range r1, Range r2, Range r3,
                         const CheckOptions& opt = {}) {
  std::array<std::uint64_t, 2> rest{};
  const std::uint64_t off = rc_detail::scan_first_axis(
      r1,
      [&](std::uint64_t x, std::array<std::uint64_t, 2>& out) {
        for (std::uint64_t y = r2.lo; y < r2.hi; ++y) {
          for (std::uint64_t z = r3.lo; z < r3.hi; ++z) {
            if (!pred(x, y, z)) {
              out[0] = y;
              out[1] = z;
              return true;
            }
          }
        }
        return false;
      },
      rest, opt);
  if (off == rc_detail::kNoFailure) return CheckResult::pass();
  const std::uint64_t x = r1.lo + off;
  rc_detail::self_check(pred(x, rest[0], rest[1]));
  return CheckResult::fail({x, rest[0], rest[1]});
}

}  // namespace utctime

#endif  // UTCTIME_RANGE_CHECK_HPP_
