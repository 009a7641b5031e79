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

#include <bitset>
#include <string_view>

#include "g2g/core/result.hpp"
#include "g2g/core/time.hpp"

namespace g2g {

// Five-field cron schedule (minute hour day-of-month month day-of-week, UTC)
// with '*', 'a', 'a-b', '*/n', 'a-b/n' and comma lists, plus the @hourly,
// @daily, @weekly and @monthly shorthands. Day-of-week 0 and 7 are Sunday.
struct CronSchedule {
  std::bitset<60> minutes;
  std::bitset<24> hours;
  std::bitset<32> days;    // 1..31
  std::bitset<13> months;  // 1..12
  std::bitset<7> weekdays;
  bool any_day = true;      // day-of-month field was '*'
  bool any_weekday = true;  // day-of-week field was '*'
};

Result<CronSchedule> parse_cron(std::string_view spec);

// First matching minute strictly after `after`.
Timestamp next_run(const CronSchedule& schedule, Timestamp after);

}  // namespace g2g
