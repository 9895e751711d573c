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

#include "utctime/core_types.hpp"

#include <algorithm>

namespace utctime {

bool is_leap_year(std::int64_t year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

std::int64_t days_in_month(std::int64_t year, std::int64_t month) {
  static constexpr std::int64_t kLengths[12] = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return kLengths[month - 1];
}

std::optional<std::int64_t> days_in_month_checked(std::int64_t year,
                                                  std::int64_t month) {
  if (month < 1 || month > 12) return std::nullopt;
  return days_in_month(year, month);
}

bool valid_date(const RawDate& d) {
  return d.year >= kMinYear && d.year <= kMaxYear && d.month >= 1 &&
         d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

bool valid_leap_table(const LeapSecondTable& ls) {
  for (std::size_t i = 0; i < ls.entries.size(); ++i) {
    if (!valid_date(ls.entries[i].date)) return false;
    if (i > 0 && !(ls.entries[i - 1].date < ls.entries[i].date)) return false;
  }
  return true;
}

std::optional<LeapSign> leap_sign_on(const LeapSecondTable& ls,
                                     const RawDate& d) {
  auto it = std::lower_bound(
      ls.entries.begin(), ls.entries.end(), d,
      [](const LeapEntry& e, const RawDate& key) { return e.date < key; });
  if (it == ls.entries.end() || !(it->date == d)) return std::nullopt;
  return it->sign;
}

bool valid_time(const LeapSecondTable& ls, const RawTime& t) {
  if (!valid_date(t.date)) return false;
  if (t.hour < 0 || t.hour > 23) return false;
  if (t.minute < 0 || t.minute > 59) return false;
  if (t.second < 0 || t.second > 60) return false;
  const bool final_minute = t.hour == 23 && t.minute == 59;
  if (t.second == 60) {
    return final_minute && leap_sign_on(ls, t.date) == LeapSign::kPositive;
  }
  if (t.second == 59 && final_minute &&
      leap_sign_on(ls, t.date) == LeapSign::kNegative) {
    return false;
  }
  return true;
}

std::strong_ordering cmp_raw_time(const RawTime& a, const RawTime& b) {
  return a <=> b;
}

std::optional<Date> Date::make(const RawDate& raw) {
  if (!valid_date(raw)) return std::nullopt;
  return Date(raw);
}

std::optional<Time> Time::make(const LeapSecondTable& ls, const RawTime& raw) {
  if (!valid_time(ls, raw)) return std::nullopt;
  return Time(raw);
}

Date Time::date() const {
  // valid_time guarantees the projection is a valid date.
  return Date::make(raw_.date).value();
}

}  // namespace utctime
