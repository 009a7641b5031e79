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

#include "g2g/core/money.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace g2g {

Result<Money> Money::parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidValue,
                 "not a decimal amount: '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t whole = 0;
  std::size_t digits = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return bad();
    if (whole > (std::numeric_limits<std::int64_t>::max() / 1000)) return bad();
    whole = whole * 10 + (c - '0');
    ++digits;
  }
  std::int64_t frac = 0;
  std::size_t frac_digits = 0;
  if (i < text.size()) {
    ++i;  // '.'
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') return bad();
      if (++frac_digits > 2) return bad();
      frac = frac * 10 + (c - '0');
    }
    if (frac_digits == 0) return bad();
  }
  if (digits == 0) return bad();
  if (frac_digits == 1) frac *= 10;
  std::int64_t cents = whole * 100 + frac;
  return Money(negative ? -cents : cents);
}

Money Money::from_double(double dollars) {
  return Money(round_cents(static_cast<long double>(dollars) * 100.0L));
}

std::string Money::to_string() const {
  std::int64_t abs = cents_ < 0 ? -cents_ : cents_;
  std::string out = cents_ < 0 ? "-" : "";
  out += std::to_string(abs / 100);
  out += '.';
  std::int64_t frac = abs % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

std::int64_t round_cents(long double cents) {
  return static_cast<std::int64_t>(std::llround(cents));
}

double round2(double value) {
  // Snap to the nearest representable value first so 0.125 stored as
  // 0.12499999 still rounds up.
  long double scaled = static_cast<long double>(value) * 100.0L;
  long double snapped = std::nearbyint(scaled * 1e6L) / 1e6L;
  return static_cast<double>(std::llround(snapped)) / 100.0;
}

}  // namespace g2g
