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

#include "g2g/analytics/hours.hpp"

#include <algorithm>

namespace g2g {

void for_each_hour_bucket(const IncomeEntry& e,
                          const std::function<void(int weekday, int hour, std::int64_t minutes)>& fn) {
  if (!e.start_minute || e.duration_minutes <= 0) return;
  int weekday = weekday_index(e.work_date);
  std::int64_t minute = *e.start_minute;
  std::int64_t left = e.duration_minutes;
  while (left > 0) {
    std::int64_t in_day = minute % (24 * 60);
    int day_shift = static_cast<int>(minute / (24 * 60));
    int hour = static_cast<int>(in_day / 60);
    std::int64_t take = std::min<std::int64_t>(left, 60 - in_day % 60);
    fn((weekday + day_shift) % 7, hour, take);
    minute += take;
    left -= take;
  }
}

}  // namespace g2g
