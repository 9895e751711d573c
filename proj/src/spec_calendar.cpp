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

#include "utctime/spec_calendar.hpp"

#include "utctime/numeric.hpp"

namespace utctime::spec {

Date min_date() { return Date::make({0, 1, 1}).value(); }

Time min_time(const LeapSecondTable& ls) {
  return Time::make(ls, {{0, 1, 1}, 0, 0, 0}).value();
}

Date max_date() { return Date::make({kMaxYear, 12, 31}).value(); }

Date next_date(const Date& d) {
  RawDate r = d.raw();
  r.day += 1;
  if (!valid_date(r)) {
    r.day = 1;
    r.month += 1;
    if (r.month == 13) {
      r.month = 1;
      r.year += 1;
      if (r.year > kMaxYear) r.year = kMinYear;
    }
  }
  return Date::make(r).value();
}

Time next_time(const LeapSecondTable& ls, const Time& t) {
  RawTime r = t.raw();
  r.second += 1;
  if (!valid_time(ls, r)) {
    // Either the minute is exhausted or a negative leap removed 23:59:59.
    r.second = 0;
    r.minute += 1;
    if (r.minute == 60) {
      r.minute = 0;
      r.hour += 1;
      if (r.hour == 24) {
        r.hour = 0;
        r.date = next_date(Date::make(r.date).value()).raw();
      }
    }
  }
  return Time::make(ls, r).value();
}

std::int64_t seconds_in_day(const LeapSecondTable& ls, const Date& d) {
  const auto sign = leap_sign_on(ls, d.raw());
  if (sign == LeapSign::kPositive) return kSecondsPerDay + 1;
  if (sign == LeapSign::kNegative) return kSecondsPerDay - 1;
  return kSecondsPerDay;
}

std::int64_t max_timestamp(const LeapSecondTable& ls) {
  std::int64_t extra = 0;
  for (const LeapEntry& e : ls.entries) {
    extra += e.sign == LeapSign::kPositive ? 1 : -1;
  }
  return kSecondsPerDay * kDateCount - 1 + extra;
}

std::int64_t datestamp(const Date& d) {
  std::int64_t count = 0;
  for (Date cur = min_date(); cur < d; cur = next_date(cur)) ++count;
  return count;
}

Date from_datestamp(std::int64_t n) {
  Date cur = min_date();
  for (std::int64_t i = emod(n, kDateCount); i > 0; --i) cur = next_date(cur);
  return cur;
}

std::int64_t timestamp(const LeapSecondTable& ls, const Time& t) {
  const Date target = t.date();
  std::int64_t total = 0;
  for (Date cur = min_date(); cur < target; cur = next_date(cur)) {
    total += seconds_in_day(ls, cur);
  }
  // Seconds of the day preceding t; holds for second 60 as well, whose
  // 86400 predecessors are exactly the day's regular seconds.
  return total + 3600 * t.raw().hour + 60 * t.raw().minute + t.raw().second;
}

Time from_timestamp(const LeapSecondTable& ls, std::int64_t n) {
  Time cur = min_time(ls);
  for (std::int64_t i = emod(n, max_timestamp(ls) + 1); i > 0; --i) {
    cur = next_time(ls, cur);
  }
  return cur;
}

}  // namespace utctime::spec
