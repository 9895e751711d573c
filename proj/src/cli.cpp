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

#include "utctime/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "utctime/core_types.hpp"
#include "utctime/hinnant.hpp"
#include "utctime/possibly.hpp"
#include "utctime/range_check.hpp"
#include "utctime/spec_calendar.hpp"
#include "utctime/text.hpp"
#include "utctime/time_arith.hpp"

namespace utctime::cli {
namespace {

// Option values far outside anything the 0..9999 date range can absorb
// are rejected up front so the arithmetic below stays in bounds.
constexpr std::int64_t kAmountLimit = 1000000000000000;  // 10^15

const char kUsage[] =
    "usage: utctime <command> [options]\n"
    "commands:\n"
    "  to-timestamp   [--leap FILE] [--plain] TIME\n"
    "  from-timestamp [--leap FILE] [--plain] N\n"
    "  shift          [--leap FILE] [--plain] --unit UNIT --amount K TIME\n"
    "  add-formal     [--leap FILE] [--plain] [--seconds N] [--minutes N]\n"
    "                 [--hours N] [--days N] [--months N] [--years N] TIME\n"
    "  max-timestamp  [--leap FILE]\n"
    "  selftest\n"
    "TIME is YYYY-MM-DDThh:mm:ss; --plain skips validation and exits 0.\n";

struct CommandError {
  Error error;
  bool show_usage = false;
};

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kOutOfRange ? 2 : 1;
}

[[noreturn]] void fail(ErrorKind kind, std::string detail) {
  throw CommandError{Error{kind, std::move(detail)}};
}

[[noreturn]] void fail(Error e) { throw CommandError{std::move(e)}; }

[[noreturn]] void fail_usage(std::string detail) {
  throw CommandError{Error{ErrorKind::kParseError, std::move(detail)}, true};
}

struct Options {
  LeapSecondTable leap;
  bool plain = false;
  std::optional<std::string> unit;
  std::optional<std::int64_t> amount;
  // seconds, minutes, hours, days, months, years
  std::optional<std::int64_t> duration[6];
  std::vector<std::string> positionals;
};

// Which options a subcommand admits.
struct Grammar {
  bool plain = false;
  bool unit_amount = false;
  bool durations = false;
};

std::int64_t parse_signed(const std::string& text, const std::string& flag) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    fail(ErrorKind::kOutOfRange, flag + " value out of supported range");
  }
  if (ec != std::errc() || ptr != last) {
    fail(ErrorKind::kParseError, flag + " expects an integer, got '" + text + "'");
  }
  if (value > kAmountLimit || value < -kAmountLimit) {
    fail(ErrorKind::kOutOfRange, flag + " value out of supported range");
  }
  return value;
}

std::int64_t parse_timestamp_arg(const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorKind::kParseError,
         "N expects a non-negative integer, got '" + text + "'");
  }
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::kOutOfRange, "N out of supported range");
  }
  return value;
}

LeapSecondTable load_leap_table(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    fail(ErrorKind::kParseError, "cannot open leap table file '" + path + "'");
  }
  std::ostringstream content;
  content << file.rdbuf();
  auto table = parse_leap_table(content.str());
  if (!table) fail(table.error());
  return std::move(table).value();
}

Options parse_options(const std::vector<std::string>& args, std::size_t start,
                      const Grammar& grammar) {
  static const char* kDurationFlags[6] = {"--seconds", "--minutes", "--hours",
                                          "--days",    "--months",  "--years"};
  Options opt;
  const auto reject_unless = [&](bool admitted, const std::string& flag) {
    if (!admitted) {
      fail(ErrorKind::kParseError,
           "option '" + flag + "' does not apply to this command");
    }
  };
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& arg = args[i];
    const auto take_value = [&](const char* flag) -> const std::string& {
      if (i + 1 == args.size()) {
        fail(ErrorKind::kParseError,
             std::string("option '") + flag + "' needs a value");
      }
      return args[++i];
    };
    if (arg == "--plain") {
      reject_unless(grammar.plain, arg);
      opt.plain = true;
    } else if (arg == "--leap") {
      opt.leap = load_leap_table(take_value("--leap"));
    } else if (arg == "--unit") {
      reject_unless(grammar.unit_amount, arg);
      opt.unit = take_value("--unit");
    } else if (arg == "--amount") {
      reject_unless(grammar.unit_amount, arg);
      opt.amount = parse_signed(take_value("--amount"), "--amount");
    } else if (arg.size() >= 2 && arg[0] == '-' && arg[1] == '-') {
      bool matched = false;
      for (int d = 0; d < 6 && !matched; ++d) {
        if (arg == kDurationFlags[d]) {
          reject_unless(grammar.durations, arg);
          opt.duration[d] = parse_signed(take_value(kDurationFlags[d]),
                                         kDurationFlags[d]);
          matched = true;
        }
      }
      if (!matched) {
        fail(ErrorKind::kParseError, "unknown option '" + arg + "'");
      }
    } else {
      opt.positionals.push_back(arg);
    }
  }
  return opt;
}

const std::string& single_positional(const Options& opt, const char* name) {
  if (opt.positionals.empty()) {
    fail(ErrorKind::kParseError, std::string("missing ") + name + " argument");
  }
  if (opt.positionals.size() > 1) {
    fail(ErrorKind::kParseError,
         "unexpected argument '" + opt.positionals[1] + "'");
  }
  return opt.positionals[0];
}

RawTime parse_time_arg(const std::string& text) {
  auto parsed = parse_time(text);
  if (!parsed) fail(parsed.error());
  return parsed.value();
}

// Checked-mode validation, classifying the date and time layers apart.
void validate_time(const LeapSecondTable& ls, const RawTime& t) {
  if (!valid_date(t.date)) {
    fail(ErrorKind::kInvalidDate, format_date(t.date) + " is not a valid date");
  }
  if (!valid_time(ls, t)) {
    fail(ErrorKind::kInvalidTime,
         format_time(t) + " is not a valid time under the leap table");
  }
}

TimeUnit parse_unit(const std::string& name) {
  if (name == "years") return TimeUnit::kYears;
  if (name == "months") return TimeUnit::kMonths;
  if (name == "days") return TimeUnit::kDays;
  if (name == "hours") return TimeUnit::kHours;
  if (name == "minutes") return TimeUnit::kMinutes;
  if (name == "seconds") return TimeUnit::kSeconds;
  fail(ErrorKind::kParseError,
       "unknown unit '" + name +
           "' (expected years|months|days|hours|minutes|seconds)");
}

int cmd_to_timestamp(const Options& opt, std::ostream& out) {
  const RawTime t = parse_time_arg(single_positional(opt, "TIME"));
  if (!opt.plain) validate_time(opt.leap, t);
  out << hinnant::timestamp(opt.leap, t) << '\n';
  return 0;
}

int cmd_from_timestamp(const Options& opt, std::ostream& out) {
  const std::int64_t n = parse_timestamp_arg(single_positional(opt, "N"));
  if (!opt.plain) {
    const std::int64_t max = spec::max_timestamp(opt.leap);
    if (n > max) {
      fail(ErrorKind::kOutOfRange, "timestamp " + std::to_string(n) +
                                       " exceeds max-timestamp " +
                                       std::to_string(max));
    }
  }
  out << format_time(hinnant::from_timestamp(opt.leap, n)) << '\n';
  return 0;
}

int cmd_shift(const Options& opt, std::ostream& out) {
  if (!opt.unit) fail(ErrorKind::kParseError, "shift requires --unit");
  if (!opt.amount) fail(ErrorKind::kParseError, "shift requires --amount");
  const TimeUnit unit = parse_unit(*opt.unit);
  const RawTime t = parse_time_arg(single_positional(opt, "TIME"));
  if (opt.plain) {
    out << format_time(shift_raw(opt.leap, t, unit, *opt.amount)) << '\n';
    return 0;
  }
  validate_time(opt.leap, t);
  auto shifted = shift_checked(opt.leap, Time::make(opt.leap, t).value(), unit,
                               *opt.amount);
  if (!shifted) fail(shifted.error());
  out << format_time(shifted.value().raw()) << '\n';
  return 0;
}

int cmd_add_formal(const Options& opt, std::ostream& out) {
  bool any = false;
  __int128 total = 0;
  static constexpr std::int64_t kRates[6] = {
      1,
      FormalDuration::kSecondsPerMinute,
      FormalDuration::kSecondsPerHour,
      FormalDuration::kSecondsPerDay,
      FormalDuration::kSecondsPerMonth,
      FormalDuration::kSecondsPerYear};
  for (int d = 0; d < 6; ++d) {
    if (!opt.duration[d]) continue;
    any = true;
    total += static_cast<__int128>(*opt.duration[d]) * kRates[d];
  }
  if (!any) {
    fail(ErrorKind::kParseError,
         "add-formal requires at least one duration option");
  }
  constexpr __int128 kTotalLimit = __int128{1} << 62;
  if (total > kTotalLimit || total < -kTotalLimit) {
    fail(ErrorKind::kOutOfRange, "formal duration out of supported range");
  }
  const FormalDuration dur =
      FormalDuration::seconds(static_cast<std::int64_t>(total));
  const RawTime t = parse_time_arg(single_positional(opt, "TIME"));
  if (opt.plain) {
    out << format_time(add_formal_raw(opt.leap, t, dur)) << '\n';
    return 0;
  }
  validate_time(opt.leap, t);
  auto result = add_formal(opt.leap, Time::make(opt.leap, t).value(), dur);
  if (!result) fail(result.error());
  out << format_time(result.value().raw()) << '\n';
  return 0;
}

int cmd_max_timestamp(const Options& opt, std::ostream& out) {
  if (!opt.positionals.empty()) {
    fail(ErrorKind::kParseError,
         "unexpected argument '" + opt.positionals[0] + "'");
  }
  out << spec::max_timestamp(opt.leap) << '\n';
  return 0;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  bool all_pass = true;

  const auto report = [&](const char* name, bool pass, Clock::time_point t0) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    out << name << ": " << (pass ? "PASS" : "FAIL") << '\n';
    err << name << ": " << ms << " ms\n";
    all_pass = all_pass && pass;
  };

  // Year-of-era extraction inequality over a full 146097-day era.
  auto t0 = Clock::now();
  const CheckResult era = check_range1(
      [](std::uint64_t x) {
        const std::int64_t v = static_cast<std::int64_t>(x);
        const std::int64_t h = v - v / 1460 + v / 36524 - v / 146096;
        return v >= (h / 365) * 365 + h / 1460 - h / 36500;
      },
      Range{0, static_cast<std::uint64_t>(spec::kDaysPerEra)});
  report("era-inequality", era.passed(), t0);

  // Every valid date round-trips through the era-based conversions.
  t0 = Clock::now();
  bool roundtrip = true;
  Date d = spec::min_date();
  for (std::int64_t i = 0; i < spec::kDateCount; ++i) {
    if (hinnant::datestamp(d.raw()) != i ||
        !(hinnant::from_datestamp(i) == d.raw())) {
      roundtrip = false;
      break;
    }
    d = spec::next_date(d);
  }
  roundtrip = roundtrip && d == spec::min_date();
  report("date-roundtrip", roundtrip, t0);

  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  (void)in;  // all current commands take their input from argv
  try {
    if (args.empty()) {
      fail_usage("missing command");
    }
    const std::string& command = args[0];
    if (command == "selftest") {
      if (args.size() > 1) {
        fail(ErrorKind::kParseError, "unexpected argument '" + args[1] + "'");
      }
      return cmd_selftest(out, err);
    }
    if (command == "to-timestamp") {
      return cmd_to_timestamp(parse_options(args, 1, {.plain = true}), out);
    }
    if (command == "from-timestamp") {
      return cmd_from_timestamp(parse_options(args, 1, {.plain = true}), out);
    }
    if (command == "shift") {
      return cmd_shift(
          parse_options(args, 1, {.plain = true, .unit_amount = true}), out);
    }
    if (command == "add-formal") {
      return cmd_add_formal(
          parse_options(args, 1, {.plain = true, .durations = true}), out);
    }
    if (command == "max-timestamp") {
      return cmd_max_timestamp(parse_options(args, 1, {}), out);
    }
    fail_usage("unknown command '" + command + "'");
  } catch (const CommandError& e) {
    err << "error: " << to_string(e.error.kind) << ": " << e.error.detail
        << '\n';
    if (e.show_usage) err << kUsage;
    return exit_code_for(e.error.kind);
  }
}

}  // namespace utctime::cli
