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

// Success-or-structured-error carrier for the checked API variants. The
// plain variants stay total and judgment-free; the checked ones classify
// exactly what went wrong.

#ifndef UTCTIME_POSSIBLY_HPP_
#define UTCTIME_POSSIBLY_HPP_

#include <string>
#include <utility>
#include <variant>

namespace utctime {

enum class ErrorKind {
  kInvalidDate,
  kInvalidTime,
  kInvalidLeapTable,
  kOutOfRange,
  kParseError,
};

const char* to_string(ErrorKind kind);

struct Error {
  ErrorKind kind;
  std::string detail;
};

template <typename T>
class Possibly {
 public:
  static Possibly ok(T value) { return Possibly(std::move(value)); }
  static Possibly err(ErrorKind kind, std::string detail) {
    return Possibly(Error{kind, std::move(detail)});
  }
  static Possibly err(Error e) { return Possibly(std::move(e)); }

  bool is_ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return is_ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }

  const Error& error() const { return std::get<Error>(state_); }
  ErrorKind kind() const { return error().kind; }

 private:
  explicit Possibly(T value) : state_(std::move(value)) {}
  explicit Possibly(Error e) : state_(std::move(e)) {}

  std::variant<T, Error> state_;
};

}  // namespace utctime

#endif  // UTCTIME_POSSIBLY_HPP_
