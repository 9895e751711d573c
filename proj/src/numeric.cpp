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

#include "utctime/numeric.hpp"

#include <cstdio>
#include <cstdlib>

namespace utctime {
namespace {

void default_handler(std::int64_t value, std::int64_t lo, std::int64_t hi,
                     const char* site) {
  std::fprintf(stderr,
               "utctime: checked arithmetic violation at %s: %lld not in "
               "[%lld, %lld]\n",
               site, static_cast<long long>(value), static_cast<long long>(lo),
               static_cast<long long>(hi));
  std::abort();
}

BoundsHandler g_handler = &default_handler;

#ifdef UTCTIME_CHECKED_ARITHMETIC
void report_overflow(std::int64_t a, std::int64_t b, const char* site) {
  // Reported with the operands; the wrapped result is returned by the caller.
  g_handler(a, b, b, site);
}
#endif

}  // namespace

BoundsHandler set_bounds_handler(BoundsHandler handler) {
  BoundsHandler previous = g_handler;
  g_handler = handler != nullptr ? handler : &default_handler;
  return previous == &default_handler ? nullptr : previous;
}

std::int64_t ediv(std::int64_t n, std::int64_t d) {
  if (d == 0) return 0;
  if (d == -1) return checked_sub(0, n, "ediv d=-1");
  std::int64_t q = n / d;
  if (n % d < 0) q += d > 0 ? -1 : 1;
  return q;
}

std::int64_t emod(std::int64_t n, std::int64_t d) {
  if (d == 0) return n;
  std::int64_t r = n % d;
  if (r < 0) {
    // r + |d|, computed in unsigned space so |INT64_MIN| is fine.
    r = static_cast<std::int64_t>(
        static_cast<std::uint64_t>(r) +
        (d > 0 ? static_cast<std::uint64_t>(d)
               : ~static_cast<std::uint64_t>(d) + 1));
  }
  return r;
}

std::int64_t assert_in_bounds(std::int64_t x, std::int64_t lo, std::int64_t hi,
                              const char* site) {
#ifdef UTCTIME_CHECKED_ARITHMETIC
  if (x < lo || x > hi) g_handler(x, lo, hi, site);
#else
  (void)lo;
  (void)hi;
  (void)site;
#endif
  return x;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* site) {
  std::int64_t result;
  if (__builtin_add_overflow(a, b, &result)) {
#ifdef UTCTIME_CHECKED_ARITHMETIC
    report_overflow(a, b, site);
#endif
  }
  (void)site;
  return result;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char* site) {
  std::int64_t result;
  if (__builtin_sub_overflow(a, b, &result)) {
#ifdef UTCTIME_CHECKED_ARITHMETIC
    report_overflow(a, b, site);
#endif
  }
  (void)site;
  return result;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* site) {
  std::int64_t result;
  if (__builtin_mul_overflow(a, b, &result)) {
#ifdef UTCTIME_CHECKED_ARITHMETIC
    report_overflow(a, b, site);
#endif
  }
  (void)site;
  return result;
}

}  // namespace utctime
