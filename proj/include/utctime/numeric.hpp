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

// Shared integer helpers with explicit conventions: total Euclidean
// division (n / 0 == 0) and overflow-diagnosing arithmetic used by the
// conversion kernels.

#ifndef UTCTIME_NUMERIC_HPP_
#define UTCTIME_NUMERIC_HPP_

#include <compare>
#include <cstdint>

namespace utctime {

// Called when checked arithmetic detects an out-of-bounds value or an
// overflow. `site` names the computation that tripped. The default
// handler prints to stderr and aborts; tests install counting handlers.
using BoundsHandler = void (*)(std::int64_t value, std::int64_t lo,
                               std::int64_t hi, const char* site);

// Installs `handler` and returns the previous one. Pass nullptr to
// restore the default abort-on-violation behavior.
BoundsHandler set_bounds_handler(BoundsHandler handler);

// Euclidean quotient, total: remainder is always in [0, |d|), and
// ediv(n, 0) == 0. Division never traps; the zero-divisor default
// matches the total-function style of the reference layer.
std::int64_t ediv(std::int64_t n, std::int64_t d);

// Euclidean remainder: n - ediv(n, d) * d. In particular emod(n, 0) == n.
std::int64_t emod(std::int64_t n, std::int64_t d);

// Returns x unchanged. With checked arithmetic enabled, reports a
// diagnostic when x is outside [lo, hi] (both inclusive).
std::int64_t assert_in_bounds(std::int64_t x, std::int64_t lo, std::int64_t hi,
                              const char* site);

// Wrapping-safe arithmetic. The result is the two's-complement value in
// every build; with checked arithmetic enabled an overflow additionally
// reports a diagnostic.
std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* site);
std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char* site);
std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* site);

// Signed 64-bit integer whose arithmetic routes through the checked
// helpers. Division is the total Euclidean one.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t value) : value_(value) {}  // NOLINT

  constexpr std::int64_t value() const { return value_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    return checked_add(a.value_, b.value_, "CheckedInt+");
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    return checked_sub(a.value_, b.value_, "CheckedInt-");
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    return checked_mul(a.value_, b.value_, "CheckedInt*");
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    return ediv(a.value_, b.value_);
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    return emod(a.value_, b.value_);
  }
  friend CheckedInt operator-(CheckedInt a) {
    return checked_sub(0, a.value_, "CheckedInt neg");
  }
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

 private:
  std::int64_t value_ = 0;
};

}  // namespace utctime

#endif  // UTCTIME_NUMERIC_HPP_
