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

#include "utctime/text.hpp"

#include <cstdio>

namespace utctime {
namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return !s.empty();
}

std::int64_t digits_value(std::string_view s) {
  std::int64_t value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

// Matches `YYYY-MM-DD` at the start of `text`.
bool scan_date(std::string_view text, RawDate& out) {
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return false;
  const std::string_view y = text.substr(0, 4);
  const std::string_view m = text.substr(5, 2);
  const std::string_view d = text.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return false;
  out = RawDate{digits_value(y), digits_value(m), digits_value(d)};
  return true;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDate:
      return "InvalidDate";
    case ErrorKind::kInvalidTime:
      return "InvalidTime";
    case ErrorKind::kInvalidLeapTable:
      return "InvalidLeapTable";
    case ErrorKind::kOutOfRange:
      return "OutOfRange";
    case ErrorKind::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Possibly<RawDate> parse_date(std::string_view text) {
  RawDate d;
  if (text.size() != 10 || !scan_date(text, d)) {
    return Possibly<RawDate>::err(
        ErrorKind::kParseError,
        "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  return Possibly<RawDate>::ok(d);
}

Possibly<RawTime> parse_time(std::string_view text) {
  const auto fail = [&] {
    return Possibly<RawTime>::err(
        ErrorKind::kParseError,
        "expected YYYY-MM-DDThh:mm:ss, got '" + std::string(text) + "'");
  };
  RawDate date;
  if (text.size() != 19 || !scan_date(text, date)) return fail();
  if (text[10] != 'T' || text[13] != ':' || text[16] != ':') return fail();
  const std::string_view h = text.substr(11, 2);
  const std::string_view m = text.substr(14, 2);
  const std::string_view s = text.substr(17, 2);
  if (!all_digits(h) || !all_digits(m) || !all_digits(s)) return fail();
  return Possibly<RawTime>::ok(
      RawTime{date, digits_value(h), digits_value(m), digits_value(s)});
}

std::string format_date(const RawDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lld",
                static_cast<long long>(d.year), static_cast<long long>(d.month),
                static_cast<long long>(d.day));
  return buf;
}

std::string format_time(const RawTime& t) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lldT%02lld:%02lld:%02lld",
                static_cast<long long>(t.date.year),
                static_cast<long long>(t.date.month),
                static_cast<long long>(t.date.day),
                static_cast<long long>(t.hour),
                static_cast<long long>(t.minute),
                static_cast<long long>(t.second));
  return buf;
}

Possibly<LeapSecondTable> parse_leap_table(std::string_view text) {
  LeapSecondTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line =
        eol == std::string_view::npos ? text : text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    // Tolerate CRLF input and trailing blanks.
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    RawDate date;
    if (line.size() != 12 || !scan_date(line, date) || line[10] != ' ' ||
        (line[11] != 'P' && line[11] != 'N')) {
      return Possibly<LeapSecondTable>::err(
          ErrorKind::kParseError, "leap table line " + std::to_string(line_no) +
                                      ": expected 'YYYY-MM-DD P|N'");
    }
    table.entries.push_back(LeapEntry{
        date, line[11] == 'P' ? LeapSign::kPositive : LeapSign::kNegative});
  }
  if (!valid_leap_table(table)) {
    return Possibly<LeapSecondTable>::err(
        ErrorKind::kInvalidLeapTable,
        "entries must be valid dates, strictly increasing");
  }
  return Possibly<LeapSecondTable>::ok(std::move(table));
}

}  // namespace utctime
