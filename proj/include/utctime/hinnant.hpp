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

// Fast conversion layer, after Howard Hinnant's era-based civil-calendar
// algorithms: years are shifted to start on March 1 so the leap day is
// the last day of the shifted year, and the calendar is decomposed into
// 400-year eras of 146097 days. Time conversions add a leap-second
// offset on top.
//
// Every function here is total on raw inputs and deterministic; the
// contracts (agreement with the reference layer in spec_calendar.hpp)
// hold for valid inputs under a valid leap table. Off-contract results
// are unspecified but stable.

#ifndef UTCTIME_HINNANT_HPP_
#define UTCTIME_HINNANT_HPP_

#include <cstdint>

#include "utctime/core_types.hpp"

namespace utctime::hinnant {

// Era arithmetic anchors at 0000-03-01; the 60 days of January and leap
// February of year 0 re-anchor results to the 0000-01-01 epoch.
inline constexpr std::int64_t kEpochShift = 60;

// Signed count of leap seconds, bounded by the table size.
using Offset = std::int64_t;

// Days between the start of a shifted year and shifted month m (March =
// 0): the linear interpolant (153 m + 2) / 5 of the month-length table.
std::int64_t doy_of_shifted_month(std::int64_t m);

// Inverse interpolant (5 doy + 2) / 153, mapping a day of the shifted
// year (0..365) to its shifted month (0..11).
std::int64_t shifted_month_of_doy(std::int64_t doy);

// Days since 0000-01-01. Equals spec::datestamp on valid dates; total on
// any raw tuple.
std::int64_t datestamp(const RawDate& d);

// Inverse of datestamp for 0 <= n <= spec::kMaxDatestamp; total on any n.
RawDate from_datestamp(std::int64_t n);

// Signed sum of leap entries on days strictly before d.
Offset offset_rd(const LeapSecondTable& ls, const RawDate& d);

// Seconds since 0000-01-01T00:00:00, leap seconds counted. Equals
// spec::timestamp on valid times.
std::int64_t timestamp(const LeapSecondTable& ls, const RawTime& t);

// Signed sum of leap entries whose final second has a timestamp < n.
Offset offset_ts(const LeapSecondTable& ls, std::int64_t n);

// Inverse of timestamp for 0 <= n <= spec::max_timestamp(ls); total on
// any n. A timestamp addressing a positive leap second decodes to
// 23:59:60 of its day rather than rolling into the next one.
RawTime from_timestamp(const LeapSecondTable& ls, std::int64_t n);

}  // namespace utctime::hinnant

#endif  // UTCTIME_HINNANT_HPP_
