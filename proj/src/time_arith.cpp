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

#include "utctime/hinnant.hpp"
#include "utctime/numeric.hpp"
#include "utctime/spec_calendar.hpp"

namespace utctime {
namespace {

struct ShiftOutcome {
  RawTime value;
  bool out_of_range = false;
};

// Correction step: an invalid second is walked back to the previous
// valid one. At most two steps are ever needed from a valid base (60 ->
// 59 -> 58 when the target day is a negative-leap one).
void correct_second(const LeapSecondTable& ls, RawTime& t) {
  for (int i = 0; i < 2 && !valid_time(ls, t); ++i) --t.second;
}

void correct_day(RawTime& t) {
  const std::int64_t limit = days_in_month(t.date.year, t.date.month);
  if (limit > 0 && t.date.day > limit) t.date.day = limit;
}

RawTime min_raw_time() { return RawTime{{kMinYear, 1, 1}, 0, 0, 0}; }

RawTime max_raw_time(const LeapSecondTable& ls) {
  RawTime t{{kMaxYear, 12, 31}, 23, 59, 60};
  correct_second(ls, t);
  return t;
}

ShiftOutcome clamp_low() { return {min_raw_time(), true}; }
ShiftOutcome clamp_high(const LeapSecondTable& ls) {
  return {max_raw_time(ls), true};
}

ShiftOutcome shift_impl(const LeapSecondTable& ls, const RawTime& t,
                        TimeUnit unit, std::int64_t k) {
  if (k == 0) return {t, false};
  RawTime r = t;
  switch (unit) {
    case TimeUnit::kYears: {
      const std::int64_t year = checked_add(r.date.year, k, "shift years");
      if (year < kMinYear) return clamp_low();
      if (year > kMaxYear) return clamp_high(ls);
      r.date.year = year;
      break;
    }
    case TimeUnit::kMonths: {
      const std::int64_t total = checked_add(
          checked_add(checked_mul(r.date.year, 12, "shift months year"),
                      checked_sub(r.date.month, 1, "shift months month"),
                      "shift months base"),
          k, "shift months");
      const std::int64_t year = ediv(total, 12);
      if (year < kMinYear) return clamp_low();
      if (year > kMaxYear) return clamp_high(ls);
      r.date.year = year;
      r.date.month = emod(total, 12) + 1;
      break;
    }
    case TimeUnit::kDays: {
      const std::int64_t stamp =
          checked_add(hinnant::datestamp(r.date), k, "shift days");
      if (stamp < 0) return clamp_low();
      if (stamp > spec::kMaxDatestamp) return clamp_high(ls);
      r.date = hinnant::from_datestamp(stamp);
      break;
    }
    case TimeUnit::kHours:
    case TimeUnit::kMinutes:
    case TimeUnit::kSeconds: {
      const std::int64_t step = unit == TimeUnit::kHours      ? 3600
                                : unit == TimeUnit::kMinutes ? 60
                                                             : 1;
      // Carry on the fixed 86400-second grid; a leap second occupies the
      // day's 86400th slot.
      const std::int64_t within = checked_add(
          checked_add(checked_mul(3600, r.hour, "shift grid hour"),
                      checked_mul(60, r.minute, "shift grid minute"),
                      "shift grid hm"),
          r.second, "shift grid within");
      const std::int64_t total = checked_add(
          checked_add(
              checked_mul(hinnant::datestamp(r.date), spec::kSecondsPerDay,
                          "shift grid base"),
              within, "shift grid tod"),
          checked_mul(k, step, "shift grid amount"), "shift grid");
      const std::int64_t days = ediv(total, spec::kSecondsPerDay);
      if (days < 0) return clamp_low();
      if (days > spec::kMaxDatestamp) return clamp_high(ls);
      const std::int64_t tod = emod(total, spec::kSecondsPerDay);
      r.date = hinnant::from_datestamp(days);
      r.hour = tod / 3600;
      r.minute = tod / 60 % 60;
      r.second = tod % 60;
      break;
    }
  }
  correct_day(r);
  correct_second(ls, r);
  return {r, false};
}

}  // namespace

RawTime shift_raw(const LeapSecondTable& ls, const RawTime& t, TimeUnit unit,
                  std::int64_t k) {
  return shift_impl(ls, t, unit, k).value;
}

Time shift(const LeapSecondTable& ls, const Time& t, TimeUnit unit,
           std::int64_t k) {
  return Time::make(ls, shift_impl(ls, t.raw(), unit, k).value).value();
}

Possibly<Time> shift_checked(const LeapSecondTable& ls, const Time& t,
                             TimeUnit unit, std::int64_t k) {
  const ShiftOutcome out = shift_impl(ls, t.raw(), unit, k);
  if (out.out_of_range) {
    return Possibly<Time>::err(ErrorKind::kOutOfRange,
                               "shifted time leaves years 0..9999");
  }
  return Possibly<Time>::ok(Time::make(ls, out.value).value());
}

Possibly<Time> add_formal(const LeapSecondTable& ls, const Time& t,
                          FormalDuration dur) {
  const std::int64_t sum = checked_add(hinnant::timestamp(ls, t.raw()),
                                       dur.seconds(), "add_formal sum");
  if (sum < 0 || sum > spec::max_timestamp(ls)) {
    return Possibly<Time>::err(ErrorKind::kOutOfRange,
                               "timestamp leaves 0..max_timestamp");
  }
  return Possibly<Time>::ok(
      Time::make(ls, hinnant::from_timestamp(ls, sum)).value());
}

RawTime add_formal_raw(const LeapSecondTable& ls, const RawTime& t,
                       FormalDuration dur) {
  return hinnant::from_timestamp(
      ls, checked_add(hinnant::timestamp(ls, t), dur.seconds(),
                      "add_formal_raw sum"));
}

}  // namespace utctime
