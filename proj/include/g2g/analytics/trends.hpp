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

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

struct TrendsReport {
  DateRange range;
  Money total_income;
  Money total_expenses;
  Money net_earnings;
  std::int64_t minutes_worked = 0;
  double hours_worked = 0;
  Money hourly_rate;
  bool zero_hours = false;
  // Days with income, in date order; grouped by month on the wire.
  std::map<std::chrono::sys_days, Money> daily;
  // Every ISO week touching the range, zero weeks included.
  std::vector<std::pair<IsoWeek, Money>> weekly_series;
  // Mean earnings per worked hour at each hour of day (UTC).
  std::array<Money, 24> hourly_profile{};
  double paid_time_share = 1.0;
};

// Pure over one worker's live entries. EMPTY_RANGE when to < from.
Result<TrendsReport> personal_trends(const std::vector<IncomeEntry>& income,
                                     const std::vector<ExpenseEntry>& expenses, DateRange range);

void to_json(json& j, const TrendsReport& r);

}  // namespace g2g
