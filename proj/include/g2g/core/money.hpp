/*
 * Copyright 2026 The g2g Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "g2g/core/result.hpp"

namespace g2g {

// Exact currency amount in integer cents. Single currency (USD).
class Money {
 public:
  constexpr Money() = default;
  static constexpr Money from_cents(std::int64_t cents) { return Money(cents); }

  // Accepts "12", "12.5", "12.50", "-3.07". More than two fractional digits
  // is rejected rather than rounded.
  static Result<Money> parse(std::string_view text);
  // Nearest cent, half away from zero. For JSON numbers on the wire.
  static Money from_double(double dollars);

  constexpr std::int64_t cents() const { return cents_; }
  double dollars() const { return static_cast<double>(cents_) / 100.0; }
  // Always two fractional digits: "16.50", "-0.07".
  std::string to_string() const;

  constexpr bool is_zero() const { return cents_ == 0; }
  constexpr bool is_negative() const { return cents_ < 0; }

  constexpr Money operator+(Money o) const { return Money(cents_ + o.cents_); }
  constexpr Money operator-(Money o) const { return Money(cents_ - o.cents_); }
  constexpr Money& operator+=(Money o) {
    cents_ += o.cents_;
    return *this;
  }
  constexpr Money& operator-=(Money o) {
    cents_ -= o.cents_;
    return *this;
  }
  constexpr auto operator<=>(const Money&) const = default;

 private:
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}
  std::int64_t cents_ = 0;
};

// Rounds a real-valued amount of cents to the nearest cent (half away from
// zero). Used wherever a ratio produces a currency figure.
std::int64_t round_cents(long double cents);

// Rounds to 2 decimals, half away from zero, for released aggregates.
double round2(double value);

}  // namespace g2g
