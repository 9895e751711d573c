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

// Core calendar types. The raw tuples are deliberately unvalidated and
// totally ordered; Date and Time are construction-guarded wrappers whose
// only constructor path checks the validity predicates. All time-level
// notions are parameterized by a leap-second table.
//
// Conventions: months and days are 1-based, years run 0..9999 in the
// proleptic Gregorian calendar (year 0 exists and is a leap year), and
// the second is the smallest unit.

#ifndef UTCTIME_CORE_TYPES_HPP_
#define UTCTIME_CORE_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace utctime {

inline constexpr std::int64_t kMinYear = 0;
inline constexpr std::int64_t kMaxYear = 9999;

// Unvalidated calendar day. February 30th is representable here.
struct RawDate {
  std::int64_t year = 0;
  std::int64_t month = 1;  // January = 1
  std::int64_t day = 1;

  friend constexpr auto operator<=>(const RawDate&, const RawDate&) = default;
};

// Unvalidated date-time tuple.
struct RawTime {
  RawDate date;
  std::int64_t hour = 0;
  std::int64_t minute = 0;
  std::int64_t second = 0;

  friend constexpr auto operator<=>(const RawTime&, const RawTime&) = default;
};

// A positive leap second makes its day 86401 seconds long, a negative
// one 86399.
enum class LeapSign { kPositive, kNegative };

struct LeapEntry {
  RawDate date;
  LeapSign sign = LeapSign::kPositive;

  friend constexpr bool operator==(const LeapEntry&, const LeapEntry&) = default;
};

// Ordered list of leap-second days. The table is plain data; functions
// taking one require valid_leap_table: entries strictly increasing by
// date, every date valid, at most one entry per day.
struct LeapSecondTable {
  std::vector<LeapEntry> entries;
};

// Standard Gregorian rule; total for year >= 0.
bool is_leap_year(std::int64_t year);

// Days in the given month, February leap-aware. Returns 0 when month is
// outside 1..12, which keeps valid_date a single comparison chain.
std::int64_t days_in_month(std::int64_t year, std::int64_t month);

// Checked variant: empty for a month outside 1..12.
std::optional<std::int64_t> days_in_month_checked(std::int64_t year,
                                                  std::int64_t month);

// True iff the tuple names an existing day with kMinYear <= year <= kMaxYear.
bool valid_date(const RawDate& d);

bool valid_leap_table(const LeapSecondTable& ls);

// True iff the tuple names an existing UTC second under `ls`: second 60
// exists only at 23:59 of a positive-leap day, and second 59 of 23:59 is
// removed on a negative-leap day. Requires valid_leap_table(ls).
bool valid_time(const LeapSecondTable& ls, const RawTime& t);

// Lexicographic order on (year, month, day, hour, minute, second).
std::strong_ordering cmp_raw_time(const RawTime& a, const RawTime& b);

// Sign of the leap entry on day `d`, if any. Requires a sorted table.
std::optional<LeapSign> leap_sign_on(const LeapSecondTable& ls,
                                     const RawDate& d);

// A day proven to exist. The factory is the only constructor path.
class Date {
 public:
  static std::optional<Date> make(const RawDate& raw);

  const RawDate& raw() const { return raw_; }

  friend auto operator<=>(const Date& a, const Date& b) {
    return a.raw_ <=> b.raw_;
  }
  friend bool operator==(const Date& a, const Date& b) {
    return a.raw_ == b.raw_;
  }

 private:
  explicit Date(const RawDate& raw) : raw_(raw) {}
  RawDate raw_;
};

// A UTC second proven to exist under the table it was constructed
// against. Validity is relative to that table; re-validate before using
// a Time with a different one.
class Time {
 public:
  static std::optional<Time> make(const LeapSecondTable& ls,
                                  const RawTime& raw);

  const RawTime& raw() const { return raw_; }

  // Projection to the day; valid whenever the time is (the two coercion
  // paths raw-then-date and date-then-raw agree by construction).
  Date date() const;

  friend auto operator<=>(const Time& a, const Time& b) {
    return a.raw_ <=> b.raw_;
  }
  friend bool operator==(const Time& a, const Time& b) {
    return a.raw_ == b.raw_;
  }

 private:
  explicit Time(const RawTime& raw) : raw_(raw) {}
  RawTime raw_;
};

}  // namespace utctime

#endif  // UTCTIME_CORE_TYPES_HPP_
