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

#include "utctime/time_arith.hpp"

#include <random>

#include "doctest.h"
#include "utctime/hinnant.hpp"
#include "utctime/spec_calendar.hpp"

namespace utctime {
namespace {

LeapSecondTable table_of(std::initializer_list<LeapEntry> entries) {
  LeapSecondTable t;
  t.entries = entries;
  return t;
}

Time time_of(const LeapSecondTable& ls, std::int64_t y, std::int64_t mo,
             std::int64_t d, std::int64_t h, std::int64_t mi, std::int64_t s) {
  return Time::make(ls, {{y, mo, d}, h, mi, s}).value();
}

Time random_time(const LeapSecondTable& ls, std::mt19937_64& rng) {
  const std::int64_t day = static_cast<std::int64_t>(
      rng() % static_cast<std::uint64_t>(spec::kDateCount));
  const Date date = Date::make(hinnant::from_datestamp(day)).value();
  const std::int64_t length = spec::seconds_in_day(ls, date);
  const std::int64_t tod =
      static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(length));
  const RawTime raw =
      tod == 86400 ? RawTime{date.raw(), 23, 59, 60}
                   : RawTime{date.raw(), tod / 3600, tod / 60 % 60, tod % 60};
  return Time::make(ls, raw).value();
}

TEST_CASE("month shifts with overflow clamping") {
  const LeapSecondTable empty;
  CHECK(shift(empty, time_of(empty, 2009, 1, 31, 14, 0, 0), TimeUnit::kMonths,
              1) == time_of(empty, 2009, 2, 28, 14, 0, 0));
  CHECK(shift(empty, time_of(empty, 2008, 2, 29, 15, 0, 0), TimeUnit::kMonths,
              24) == time_of(empty, 2010, 2, 28, 15, 0, 0));
  CHECK(shift(empty, time_of(empty, 2009, 2, 28, 14, 0, 0), TimeUnit::kMonths,
              -1) == time_of(empty, 2009, 1, 28, 14, 0, 0));
  CHECK(shift(empty, time_of(empty, 2000, 1, 15, 1, 2, 3), TimeUnit::kMonths,
              -1) == time_of(empty, 1999, 12, 15, 1, 2, 3));
  CHECK(shift(empty, time_of(empty, 2000, 11, 30, 1, 2, 3), TimeUnit::kMonths,
              3) == time_of(empty, 2001, 2, 28, 1, 2, 3));
}

TEST_CASE("shift and its inverse are not mutual inverses") {
  // The pinned regression triple: +1 month then -1 month drifts from
  // the 31st to the 28th.
  const LeapSecondTable empty;
  const Time start = time_of(empty, 2009, 1, 31, 14, 0, 0);
  const Time there = shift(empty, start, TimeUnit::kMonths, 1);
  CHECK(there == time_of(empty, 2009, 2, 28, 14, 0, 0));
  const Time back = shift(empty, there, TimeUnit::kMonths, -1);
  CHECK(back == time_of(empty, 2009, 1, 28, 14, 0, 0));
  CHECK_FALSE(back == start);
}

TEST_CASE("year shifts correct February 29th") {
  const LeapSecondTable empty;
  CHECK(shift(empty, time_of(empty, 2008, 2, 29, 15, 0, 0), TimeUnit::kYears,
              1) == time_of(empty, 2009, 2, 28, 15, 0, 0));
  CHECK(shift(empty, time_of(empty, 2008, 2, 29, 15, 0, 0), TimeUnit::kYears,
              4) == time_of(empty, 2012, 2, 29, 15, 0, 0));
}

TEST_CASE("day shifts ride the datestamp line") {
  const LeapSecondTable empty;
  CHECK(shift(empty, time_of(empty, 2000, 12, 31, 8, 0, 0), TimeUnit::kDays,
              1) == time_of(empty, 2001, 1, 1, 8, 0, 0));
  CHECK(shift(empty, time_of(empty, 2000, 3, 1, 8, 0, 0), TimeUnit::kDays,
              -1) == time_of(empty, 2000, 2, 29, 8, 0, 0));
}

TEST_CASE("sub-day shifts carry on the 86400-second grid") {
  const LeapSecondTable empty;
  CHECK(shift(empty, time_of(empty, 2000, 1, 1, 23, 59, 59), TimeUnit::kSeconds,
              1) == time_of(empty, 2000, 1, 2, 0, 0, 0));
  CHECK(shift(empty, time_of(empty, 2000, 1, 2, 0, 0, 0), TimeUnit::kMinutes,
              -1) == time_of(empty, 2000, 1, 1, 23, 59, 0));
  CHECK(shift(empty, time_of(empty, 2000, 1, 1, 23, 0, 0), TimeUnit::kHours,
              2) == time_of(empty, 2000, 1, 2, 1, 0, 0));
}

TEST_CASE("shifts from and across a leap second") {
  const auto ls = table_of({{{1972, 6, 30}, LeapSign::kPositive},
                            {{1972, 12, 31}, LeapSign::kPositive}});
  const Time leap = time_of(ls, 1972, 6, 30, 23, 59, 60);
  // Zero shift is the identity even on the leap second.
  CHECK(shift(ls, leap, TimeUnit::kSeconds, 0) == leap);
  // The leap second occupies the day's 86400th grid slot.
  CHECK(shift(ls, leap, TimeUnit::kSeconds, -1) ==
        time_of(ls, 1972, 6, 30, 23, 59, 59));
  CHECK(shift(ls, leap, TimeUnit::kSeconds, 1) ==
        time_of(ls, 1972, 7, 1, 0, 0, 1));
  // Grid carry does not manufacture leap seconds.
  CHECK(shift(ls, time_of(ls, 1972, 6, 30, 23, 59, 59), TimeUnit::kSeconds,
              1) == time_of(ls, 1972, 7, 1, 0, 0, 0));
  // Date-unit shifts keep the components and correct second 60 away on
  // days without a positive entry.
  CHECK(shift(ls, leap, TimeUnit::kDays, 1) ==
        time_of(ls, 1972, 7, 1, 23, 59, 59));
  CHECK(shift(ls, leap, TimeUnit::kMonths, 6) ==
        time_of(ls, 1972, 12, 30, 23, 59, 59));
  // ...and keep it where the target day has one.
  const auto dec = shift(ls, leap, TimeUnit::kDays, 184);
  CHECK(dec == time_of(ls, 1972, 12, 31, 23, 59, 60));
}

TEST_CASE("shift onto a negative leap day corrects twice") {
  const auto ls = table_of({{{1972, 6, 30}, LeapSign::kPositive},
                            {{2035, 12, 31}, LeapSign::kNegative}});
  // 23:59:59 does not exist on the negative day; land on :58.
  CHECK(shift(ls, time_of(ls, 2035, 12, 30, 23, 59, 59), TimeUnit::kDays, 1) ==
        time_of(ls, 2035, 12, 31, 23, 59, 58));
  // A grid step onto the removed second corrects backward, so the final
  // second of a negative-leap day is a fixed point of +1s.
  CHECK(shift(ls, time_of(ls, 2035, 12, 31, 23, 59, 58), TimeUnit::kSeconds,
              1) == time_of(ls, 2035, 12, 31, 23, 59, 58));
  CHECK(shift(ls, time_of(ls, 2036, 1, 1, 0, 0, 0), TimeUnit::kSeconds, -1) ==
        time_of(ls, 2035, 12, 31, 23, 59, 58));
}

TEST_CASE("range clamping and the checked variant") {
  const LeapSecondTable empty;
  const Time late = time_of(empty, 9999, 6, 15, 10, 0, 0);
  CHECK(shift(empty, late, TimeUnit::kYears, 1) ==
        time_of(empty, 9999, 12, 31, 23, 59, 59));
  CHECK(shift(empty, late, TimeUnit::kMonths, 7) ==
        time_of(empty, 9999, 12, 31, 23, 59, 59));
  const Time early = time_of(empty, 0, 1, 15, 3, 0, 0);
  CHECK(shift(empty, early, TimeUnit::kDays, -20) ==
        time_of(empty, 0, 1, 1, 0, 0, 0));
  CHECK(shift(empty, early, TimeUnit::kHours, -15 * 24) ==
        time_of(empty, 0, 1, 1, 0, 0, 0));

  const auto checked = shift_checked(empty, late, TimeUnit::kYears, 1);
  REQUIRE_FALSE(checked.is_ok());
  CHECK(checked.kind() == ErrorKind::kOutOfRange);
  const auto fine = shift_checked(empty, late, TimeUnit::kYears, -1);
  REQUIRE(fine.is_ok());
  CHECK(fine.value() == time_of(empty, 9998, 6, 15, 10, 0, 0));

  // The clamped maximum respects a positive entry on the last day.
  const auto top = table_of({{{9999, 12, 31}, LeapSign::kPositive}});
  CHECK(shift(top, time_of(top, 9999, 6, 15, 10, 0, 0), TimeUnit::kYears, 5) ==
        time_of(top, 9999, 12, 31, 23, 59, 60));
}

TEST_CASE("add_formal reproduces the fixed-duration example") {
  const LeapSecondTable empty;
  const auto moved = add_formal(empty, time_of(empty, 2009, 1, 31, 14, 0, 0),
                                FormalDuration::months(1));
  REQUIRE(moved.is_ok());
  CHECK(moved.value() == time_of(empty, 2009, 3, 2, 14, 0, 0));
}

TEST_CASE("add_formal identity and out-of-range") {
  const auto ls = table_of({{{1972, 6, 30}, LeapSign::kPositive}});
  const Time t = time_of(ls, 1972, 6, 30, 23, 59, 60);
  const auto same = add_formal(ls, t, FormalDuration::seconds(0));
  REQUIRE(same.is_ok());
  CHECK(same.value() == t);

  const LeapSecondTable empty;
  const auto under = add_formal(empty, spec::min_time(empty),
                                FormalDuration::seconds(-1));
  REQUIRE_FALSE(under.is_ok());
  CHECK(under.kind() == ErrorKind::kOutOfRange);
  const auto over =
      add_formal(empty, time_of(empty, 9999, 12, 31, 23, 59, 59),
                 FormalDuration::seconds(1));
  REQUIRE_FALSE(over.is_ok());
  CHECK(over.kind() == ErrorKind::kOutOfRange);
}

TEST_CASE("add_formal counts leap seconds as real seconds") {
  const auto ls = table_of({{{1972, 6, 30}, LeapSign::kPositive}});
  const auto crossed = add_formal(ls, time_of(ls, 1972, 6, 30, 23, 59, 59),
                                  FormalDuration::seconds(2));
  REQUIRE(crossed.is_ok());
  CHECK(crossed.value() == time_of(ls, 1972, 7, 1, 0, 0, 0));
}

TEST_CASE("formal durations compose at fixed rates") {
  CHECK(FormalDuration::minutes(1).seconds() == 60);
  CHECK(FormalDuration::hours(1).seconds() == 3600);
  CHECK(FormalDuration::days(1).seconds() == 86400);
  CHECK(FormalDuration::months(1).seconds() == 2592000);
  CHECK(FormalDuration::years(1) == FormalDuration::months(12));
  CHECK((FormalDuration::days(1) + FormalDuration::seconds(-86400)).seconds() ==
        0);
}

TEST_CASE("formal arithmetic is a partial group action") {
  std::mt19937_64 rng(60486048);
  const auto tables = {LeapSecondTable{},
                       table_of({{{1972, 6, 30}, LeapSign::kPositive},
                                 {{1972, 12, 31}, LeapSign::kPositive}})};
  for (const LeapSecondTable& ls : tables) {
    for (int i = 0; i < 2000; ++i) {
      const Time t = random_time(ls, rng);
      const auto a = FormalDuration::seconds(
          static_cast<std::int64_t>(rng() % 20000000) - 10000000);
      const auto b = FormalDuration::seconds(
          static_cast<std::int64_t>(rng() % 20000000) - 10000000);
      const auto via_a = add_formal(ls, t, a);
      if (!via_a.is_ok()) continue;
      const auto stepwise = add_formal(ls, via_a.value(), b);
      const auto direct = add_formal(ls, t, a + b);
      if (stepwise.is_ok() && direct.is_ok()) {
        REQUIRE(stepwise.value() == direct.value());
      }
      const auto back = add_formal(ls, via_a.value(), -a);
      REQUIRE(back.is_ok());
      REQUIRE(back.value() == t);
    }
  }
}

TEST_CASE("second shifts match add_formal on the empty table") {
  const LeapSecondTable empty;
  std::mt19937_64 rng(271828);
  for (int i = 0; i < 2000; ++i) {
    const Time t = random_time(empty, rng);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 2000000) - 1000000;
    const auto formal = add_formal(empty, t, FormalDuration::seconds(k));
    if (!formal.is_ok()) continue;
    REQUIRE(shift(empty, t, TimeUnit::kSeconds, k) == formal.value());
  }
}

TEST_CASE("shift never produces an invalid time") {
  std::mt19937_64 rng(140914);
  const auto tables = {LeapSecondTable{},
                       table_of({{{1972, 6, 30}, LeapSign::kPositive},
                                 {{2035, 12, 31}, LeapSign::kNegative}})};
  static constexpr TimeUnit kUnits[] = {TimeUnit::kYears,   TimeUnit::kMonths,
                                        TimeUnit::kDays,    TimeUnit::kHours,
                                        TimeUnit::kMinutes, TimeUnit::kSeconds};
  for (const LeapSecondTable& ls : tables) {
    for (int i = 0; i < 4000; ++i) {
      const Time t = random_time(ls, rng);
      const TimeUnit unit = kUnits[rng() % 6];
      const std::int64_t k = static_cast<std::int64_t>(rng() % 20001) - 10000;
      const Time shifted = shift(ls, t, unit, k);
      REQUIRE(valid_time(ls, shifted.raw()));
    }
  }
}

TEST_CASE("year shifts preserve the clock and almost always the day") {
  std::mt19937_64 rng(5501);
  const LeapSecondTable empty;
  for (int i = 0; i < 4000; ++i) {
    const Time t = random_time(empty, rng);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 201) - 100;
    const std::int64_t target = t.raw().date.year + k;
    if (target < kMinYear || target > kMaxYear) continue;
    const Time shifted = shift(empty, t, TimeUnit::kYears, k);
    REQUIRE(shifted.raw().date.year == target);
    REQUIRE(shifted.raw().date.month == t.raw().date.month);
    REQUIRE(shifted.raw().hour == t.raw().hour);
    REQUIRE(shifted.raw().minute == t.raw().minute);
    if (t.raw().date.month == 2 && t.raw().date.day == 29 &&
        !is_leap_year(target)) {
      REQUIRE(shifted.raw().date.day == 28);
    } else {
      REQUIRE(shifted.raw().date.day == t.raw().date.day);
    }
  }
}

TEST_CASE("shift_raw is total on garbage") {
  const LeapSecondTable empty;
  const RawTime junk{{2000, 2, 30}, 99, 99, 99};
  const RawTime a = shift_raw(empty, junk, TimeUnit::kMonths, 5);
  const RawTime b = shift_raw(empty, junk, TimeUnit::kMonths, 5);
  CHECK(a == b);
}

}  // namespace
}  // namespace utctime
