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

// Wire formats: the fixed-width time format `YYYY-MM-DDThh:mm:ss` and
// the line-oriented leap-second table format `YYYY-MM-DD <P|N>` with
// `#` comments. Parsing is strict and validity-agnostic; validation is
// a separate step.

#ifndef UTCTIME_TEXT_HPP_
#define UTCTIME_TEXT_HPP_

#include <string>
#include <string_view>

#include "utctime/core_types.hpp"
#include "utctime/possibly.hpp"

namespace utctime {

// Accepts exactly `YYYY-MM-DDThh:mm:ss`, zero-padded, literal 'T'. The
// tuple is returned without any validity judgment (February 30th
// parses); ParseError on any deviation.
Possibly<RawTime> parse_time(std::string_view text);

// Accepts exactly `YYYY-MM-DD`.
Possibly<RawDate> parse_date(std::string_view text);

// Inverse of parse_time on its accepted language, for components within
// the printable widths (year <= 9999, two digits elsewhere).
std::string format_time(const RawTime& t);

std::string format_date(const RawDate& d);

// One entry per line, `YYYY-MM-DD P` (positive) or `YYYY-MM-DD N`
// (negative); blank lines and lines starting with '#' are skipped.
// ParseError on a malformed line, InvalidLeapTable when the parsed
// entries are unsorted, duplicated, or name invalid dates.
Possibly<LeapSecondTable> parse_leap_table(std::string_view text);

}  // namespace utctime

#endif  // UTCTIME_TEXT_HPP_
