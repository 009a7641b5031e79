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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "g2g/core/result.hpp"

namespace g2g {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;
using Date = std::chrono::year_month_day;

// ISO-8601 date-time with a mandatory offset ("Z" or "+hh:mm"/"-hh:mm"),
// optional fractional seconds. Converted to UTC.
Result<Timestamp> parse_timestamp(std::string_view text);
// "YYYY-MM-DDTHH:MM:SSZ", with ".mmm" only when milliseconds are non-zero.
std::string format_timestamp(Timestamp ts);

Result<Date> parse_date(std::string_view text);
std::string format_date(Date d);

Date date_of(Timestamp ts);
Timestamp start_of(Date d);
// Minutes since UTC midnight.
int minute_of_day(Timestamp ts);
// 0 = Monday ... 6 = Sunday.
int weekday_index(Date d);

struct IsoWeek {
  int year = 0;
  int week = 0;
  auto operator<=>(const IsoWeek&) const = default;
};
IsoWeek iso_week(Date d);
// "2024-W23"
std::string format_iso_week(IsoWeek w);

// Inclusive calendar-date interval.
struct DateRange {
  Date from;
  Date to;
  bool empty() const { return std::chrono::sys_days(to) < std::chrono::sys_days(from); }
  bool contains(Date d) const {
    auto day = std::chrono::sys_days(d);
    return day >= std::chrono::sys_days(from) && day <= std::chrono::sys_days(to);
  }
};

class Clock {
 public:
  virtual ~Clock() = default;
  virtual Timestamp now() const = 0;
};

class SystemClock final : public Clock {
 public:
  Timestamp now() const override {
    return std::chrono::time_point_cast<std::chrono::milliseconds>(
        std::chrono::system_clock::now());
  }
};

// Manually driven clock for tests and deterministic seeding. Every read
// optionally advances by a fixed step so successive events stay ordered.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(Timestamp start, std::chrono::milliseconds step = {})
      : now_ms_(start.time_since_epoch().count()), step_ms_(step.count()) {}

  Timestamp now() const override {
    return Timestamp(std::chrono::milliseconds(now_ms_.fetch_add(step_ms_)));
  }
  void set(Timestamp t) { now_ms_.store(t.time_since_epoch().count()); }
  void advance(std::chrono::milliseconds d) { now_ms_.fetch_add(d.count()); }

 private:
  mutable std::atomic<std::int64_t> now_ms_;
  std::int64_t step_ms_;
};

}  // namespace g2g
