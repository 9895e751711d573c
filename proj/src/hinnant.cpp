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

#include "utctime/hinnant.hpp"

#include "utctime/numeric.hpp"
#include "utctime/spec_calendar.hpp"

namespace utctime::hinnant {
namespace {

constexpr std::int64_t kSecondsPerDay = spec::kSecondsPerDay;
constexpr std::int64_t kDaysPerEra = spec::kDaysPerEra;

// Bound on every intermediate of the conversion kernels for in-range
// inputs; the checked-arithmetic sweeps assert it.
constexpr std::int64_t kIntermediateBound = std::int64_t{1} << 62;

struct TimestampOffset {
  Offset offset = 0;
  // True when n is exactly the final second of a positive leap day,
  // i.e. the timestamp that must decode to 23:59:60.
  bool at_positive_final = false;
};

// Walks the table accumulating the offset contributed by entries whose
// final second lies strictly before n. The final second of entry k is
// day-start + 86400 (positive) or + 86398 (negative), shifted by the
// offsets of the entries before k.
TimestampOffset offset_ts_impl(const LeapSecondTable& ls, std::int64_t n) {
  TimestampOffset result;
  std::int64_t preceding = 0;
  for (const LeapEntry& e : ls.entries) {
    const bool positive = e.sign == LeapSign::kPositive;
    const std::int64_t final_ts = checked_add(
        checked_mul(kSecondsPerDay, datestamp(e.date), "offset_ts day"),
        (positive ? kSecondsPerDay : kSecondsPerDay - 2) + preceding,
        "offset_ts final");
    if (final_ts >= n) {
      // Final-second timestamps increase along a sorted table; nothing
      // later can precede n.
      result.at_positive_final = final_ts == n && positive;
      break;
    }
    preceding += positive ? 1 : -1;
  }
  result.offset = preceding;
  return result;
}

}  // namespace

std::int64_t doy_of_shifted_month(std::int64_t m) {
  return ediv(checked_add(checked_mul(153, m, "doy interp"), 2, "doy interp"), 5);
}

std::int64_t shifted_month_of_doy(std::int64_t doy) {
  return ediv(checked_add(checked_mul(5, doy, "month interp"), 2, "month interp"),
              153);
}

std::int64_t datestamp(const RawDate& d) {
  const std::int64_t year =
      checked_sub(d.year, d.month <= 2 ? 1 : 0, "datestamp year");
  const std::int64_t shifted_month = d.month + (d.month > 2 ? -3 : 9);
  const std::int64_t era = ediv(year, 400);
  const std::int64_t yoe = emod(year, 400);  // [0, 400)
  const std::int64_t doy =
      checked_add(doy_of_shifted_month(shifted_month),
                  checked_sub(d.day, 1, "datestamp day"), "datestamp doy");
  const std::int64_t doe =
      checked_add(yoe * 365 + yoe / 4 - yoe / 100, doy, "datestamp doe");
  if (valid_date(d)) {
    assert_in_bounds(doe, 0, kDaysPerEra - 1, "datestamp doe");
  }
  return checked_add(checked_mul(era, kDaysPerEra, "datestamp era"),
                     checked_add(doe, kEpochShift, "datestamp shift"),
                     "datestamp result");
}

RawDate from_datestamp(std::int64_t n) {
  const std::int64_t z = checked_sub(n, kEpochShift, "from_datestamp shift");
  const std::int64_t era = ediv(z, kDaysPerEra);
  const std::int64_t doe = emod(z, kDaysPerEra);  // [0, 146097) for any z
  assert_in_bounds(doe, 0, kDaysPerEra - 1, "from_datestamp doe");
  const std::int64_t h = doe - doe / 1460 + doe / 36524 - doe / 146096;
  const std::int64_t yoe = h / 365;  // [0, 400)
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  assert_in_bounds(doy, 0, 365, "from_datestamp doy");
  const std::int64_t shifted_month = shifted_month_of_doy(doy);
  const std::int64_t day = doy - doy_of_shifted_month(shifted_month) + 1;
  const std::int64_t month =
      shifted_month < 10 ? shifted_month + 3 : shifted_month - 9;
  const std::int64_t year = yoe + era * 400 + (month <= 2 ? 1 : 0);
  return RawDate{year, month, day};
}

Offset offset_rd(const LeapSecondTable& ls, const RawDate& d) {
  Offset offset = 0;
  for (const LeapEntry& e : ls.entries) {
    if (!(e.date < d)) break;
    offset += e.sign == LeapSign::kPositive ? 1 : -1;
  }
  return offset;
}

std::int64_t timestamp(const LeapSecondTable& ls, const RawTime& t) {
  const std::int64_t days = datestamp(t.date);
  const std::int64_t tod = checked_add(
      checked_add(checked_mul(3600, t.hour, "timestamp hour"),
                  checked_mul(60, t.minute, "timestamp minute"), "timestamp hm"),
      t.second, "timestamp tod");
  // Signed throughout: a table of negative entries could drag the sum
  // below zero, so the absolute value is taken at the end.
  const std::int64_t value = checked_add(
      checked_add(checked_mul(kSecondsPerDay, days, "timestamp day"), tod,
                  "timestamp sum"),
      offset_rd(ls, t.date), "timestamp offset");
  assert_in_bounds(value, -kIntermediateBound, kIntermediateBound,
                   "timestamp value");
  return value < 0 ? -value : value;
}

Offset offset_ts(const LeapSecondTable& ls, std::int64_t n) {
  return offset_ts_impl(ls, n).offset;
}

RawTime from_timestamp(const LeapSecondTable& ls, std::int64_t n) {
  const TimestampOffset off = offset_ts_impl(ls, n);
  const std::int64_t plain = checked_sub(n, off.offset, "from_timestamp offset");
  const std::int64_t days = ediv(plain, kSecondsPerDay);
  const std::int64_t tod = emod(plain, kSecondsPerDay);  // [0, 86400)
  if (off.at_positive_final) {
    // The offset subtraction put the leap second at the next day's
    // boundary; decode it as the 61st second of its own day instead.
    return RawTime{from_datestamp(days - 1), 23, 59, 60};
  }
  return RawTime{from_datestamp(days), tod / 3600, tod / 60 % 60, tod % 60};
}

}  // namespace utctime::hinnant
