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

// Time arithmetic in two deliberately different semantics.
//
// Shifts move one component with carry and then correct an invalid
// result back to the previous valid value (the accounting-style rule:
// 2009-01-31 plus one month is 2009-02-28). Shifts are not invertible.
//
// Formal durations assign every unit a fixed number of atomic seconds
// (a formal month is 30 formal days) and add through timestamps, so the
// usual group laws hold whenever the results stay in range.

#ifndef UTCTIME_TIME_ARITH_HPP_
#define UTCTIME_TIME_ARITH_HPP_

#include <cstdint>

#include "utctime/core_types.hpp"
#include "utctime/possibly.hpp"

namespace utctime {

enum class TimeUnit { kYears, kMonths, kDays, kHours, kMinutes, kSeconds };

// A fixed span of atomic seconds. Calendar-named constructors use the
// formal rates: minute 60, hour 3600, day 86400, month 30 days, year 12
// formal months (360 days).
class FormalDuration {
 public:
  static constexpr std::int64_t kSecondsPerMinute = 60;
  static constexpr std::int64_t kSecondsPerHour = 3600;
  static constexpr std::int64_t kSecondsPerDay = 86400;
  static constexpr std::int64_t kSecondsPerMonth = 30 * kSecondsPerDay;
  static constexpr std::int64_t kSecondsPerYear = 12 * kSecondsPerMonth;

  constexpr FormalDuration() = default;

  static constexpr FormalDuration seconds(std::int64_t n) {
    return FormalDuration(n);
  }
  static constexpr FormalDuration minutes(std::int64_t n) {
    return FormalDuration(n * kSecondsPerMinute);
  }
  static constexpr FormalDuration hours(std::int64_t n) {
    return FormalDuration(n * kSecondsPerHour);
  }
  static constexpr FormalDuration days(std::int64_t n) {
    return FormalDuration(n * kSecondsPerDay);
  }
  static constexpr FormalDuration months(std::int64_t n) {
    return FormalDuration(n * kSecondsPerMonth);
  }
  static constexpr FormalDuration years(std::int64_t n) {
    return FormalDuration(n * kSecondsPerYear);
  }

  constexpr std::int64_t seconds() const { return seconds_; }

  friend constexpr FormalDuration operator+(FormalDuration a, FormalDuration b) {
    return FormalDuration(a.seconds_ + b.seconds_);
  }
  friend constexpr FormalDuration operator-(FormalDuration a) {
    return FormalDuration(-a.seconds_);
  }
  friend constexpr bool operator==(FormalDuration, FormalDuration) = default;

 private:
  constexpr explicit FormalDuration(std::int64_t s) : seconds_(s) {}
  std::int64_t seconds_ = 0;
};

// Adds k units to the matching component of t, carrying into more
// significant components; sub-day units carry through the fixed
// 86400-second day grid. An invalid result is corrected backward to the
// previous valid value (day clamped to the month length, second 60
// corrected down off positive-leap days). A result outside the date
// range is clamped to the minimum or maximum valid time. Requires t
// valid under ls.
Time shift(const LeapSecondTable& ls, const Time& t, TimeUnit unit,
           std::int64_t k);

// As shift, but reports OutOfRange instead of clamping.
Possibly<Time> shift_checked(const LeapSecondTable& ls, const Time& t,
                             TimeUnit unit, std::int64_t k);

// Total variant on raw tuples: same algorithm, no validity judgment on
// the input. Off-contract results are deterministic garbage.
RawTime shift_raw(const LeapSecondTable& ls, const RawTime& t, TimeUnit unit,
                  std::int64_t k);

// t + dur through timestamps, so leap seconds count as real seconds.
// OutOfRange when the sum leaves [0, max_timestamp(ls)].
Possibly<Time> add_formal(const LeapSecondTable& ls, const Time& t,
                          FormalDuration dur);

// Total variant used by the plain CLI path.
RawTime add_formal_raw(const LeapSecondTable& ls, const RawTime& t,
                       FormalDuration dur);

}  // namespace utctime

#endif  // UTCTIME_TIME_ARITH_HPP_
