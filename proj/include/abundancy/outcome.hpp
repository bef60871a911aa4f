// Copyright 2026 The Abundancy Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace abundancy {

/// A value, or the reason there is none. Used where "not applicable" is an
/// ordinary answer rather than an error.
template <typename T>
class Outcome {
 public:
  static Outcome success(T value) { return Outcome(std::move(value), {}); }
  static Outcome failure(std::string reason) { return Outcome(std::nullopt, std::move(reason)); }

  bool has_value() const { return value_.has_value(); }
  explicit operator bool() const { return has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("Outcome has no value: " + reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  /// Empty when a value is present.
  const std::string& reason() const { return reason_; }

 private:
  Outcome(std::optional<T> value, std::string reason) : value_(std::move(value)), reason_(std::move(reason)) {}

  std::optional<T> value_;
  std::string reason_;
};

/// Pass/fail with an explanation on failure.
struct Verification {
  bool ok = true;
  std::string reason;

  static Verification pass() { return {}; }
  static Verification fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace abundancy
