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

// Reference layer: counting-based conversions built from cyclic
// successor functions. Transparently correct and deliberately slow;
// serves as the differential-testing oracle for the era-based kernels
// in hinnant.hpp. Nothing here is meant for hot paths.

#ifndef UTCTIME_SPEC_CALENDAR_HPP_
#define UTCTIME_SPEC_CALENDAR_HPP_

#include <cstdint>

#include "utctime/core_types.hpp"

namespace utctime::spec {

inline constexpr std::int64_t kSecondsPerDay = 86400;
inline constexpr std::int64_t kDaysPerEra = 146097;  // 400 Gregorian years
// Datestamp of 9999-12-31: 10000*365 + (2500 - 100 + 25) - 1.
inline constexpr std::int64_t kMaxDatestamp = 3652424;
// Number of valid dates, and the period of next_date.
inline constexpr std::int64_t kDateCount = kMaxDatestamp + 1;

Date min_date();                             // 0000-01-01
Time min_time(const LeapSecondTable& ls);    // 0000-01-01T00:00:00
Date max_date();                             // 9999-12-31

// Cyclic successor in date order; 9999-12-31 wraps to 0000-01-01.
Date next_date(const Date& d);

// Cyclic successor in time order under `ls`. Steps through second 60 at
// 23:59 of positive-leap days and skips 23:59:59 on negative-leap days.
Time next_time(const LeapSecondTable& ls, const Time& t);

// 86400, or 86401 / 86399 on a positive / negative leap day.
std::int64_t seconds_in_day(const LeapSecondTable& ls, const Date& d);

// Largest timestamp under `ls`: one second less than the total second
// count of the full date range.
std::int64_t max_timestamp(const LeapSecondTable& ls);

// Number of valid dates strictly smaller than d, computed by iterating
// next_date from the minimum date. O(result).
std::int64_t datestamp(const Date& d);

// next_date iterated n times from the minimum date; cyclic, so the
// index is reduced modulo kDateCount. O(n).
Date from_datestamp(std::int64_t n);

// Number of valid times under `ls` strictly smaller than t: the sum of
// seconds_in_day over all days before t plus the seconds preceding t
// within its day. O(days before t).
std::int64_t timestamp(const LeapSecondTable& ls, const Time& t);

// next_time iterated n times from the minimum time; cyclic modulo
// max_timestamp(ls) + 1. O(n) -- an oracle for small n or windows only.
Time from_timestamp(const LeapSecondTable& ls, std::int64_t n);

}  // namespace utctime::spec

#endif  // UTCTIME_SPEC_CALENDAR_HPP_
