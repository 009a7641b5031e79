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

#include "g2g/analytics/trends.hpp"

#include "g2g/analytics/hours.hpp"

namespace g2g {

using std::chrono::sys_days;

Result<TrendsReport> personal_trends(const std::vector<IncomeEntry>& income,
                                     const std::vector<ExpenseEntry>& expenses, DateRange range) {
  if (range.empty()) {
    return Error(ErrorCode::kEmptyRange, "range end precedes its start", "to");
  }
  TrendsReport r;
  r.range = range;
  std::map<IsoWeek, Money> weeks;
  for (auto d = sys_days(range.from); d <= sys_days(range.to); d += std::chrono::days(7)) {
    weeks[iso_week(Date(d))] = Money{};
  }
  weeks[iso_week(range.to)] = Money{};

  std::int64_t unpaid = 0;
  bool any_unpaid = false;
  std::array<long double, 24> alloc{};
  std::array<std::int64_t, 24> bucket_minutes{};
  for (const auto& e : income) {
    if (!range.contains(e.work_date)) continue;
    r.total_income += e.income_amount;
    r.minutes_worked += e.duration_minutes;
    r.daily[sys_days(e.work_date)] += e.income_amount;
    weeks[iso_week(e.work_date)] += e.income_amount;
    if (e.unpaid_minutes) {
      any_unpaid = true;
      unpaid += *e.unpaid_minutes;
    }
    const auto cents = static_cast<long double>(e.income_amount.cents());
    const auto duration = static_cast<long double>(e.duration_minutes);
    for_each_hour_bucket(e, [&](int, int hour, std::int64_t minutes) {
      alloc[hour] += cents * static_cast<long double>(minutes) / duration;
      bucket_minutes[hour] += minutes;
    });
  }
  for (const auto& x : expenses) {
    if (range.contains(x.expense_date)) r.total_expenses += x.amount;
  }
  r.net_earnings = r.total_income - r.total_expenses;
  r.hours_worked = static_cast<double>(r.minutes_worked) / 60.0;
  if (r.minutes_worked == 0) {
    r.zero_hours = true;
  } else {
    r.hourly_rate = Money::from_cents(round_cents(static_cast<long double>(r.total_income.cents()) * 60.0L /
                                                  static_cast<long double>(r.minutes_worked)));
  }
  for (int h = 0; h < 24; ++h) {
    if (bucket_minutes[h] > 0) {
      r.hourly_profile[h] =
          Money::from_cents(round_cents(alloc[h] * 60.0L / static_cast<long double>(bucket_minutes[h])));
    }
  }
  r.weekly_series.assign(weeks.begin(), weeks.end());
  if (any_unpaid && r.minutes_worked + unpaid > 0) {
    r.paid_time_share = static_cast<double>(r.minutes_worked) / static_cast<double>(r.minutes_worked + unpaid);
  }
  return r;
}

void to_json(json& j, const TrendsReport& r) {
  json daily = json::object();
  for (const auto& [day, amount] : r.daily) {
    std::string date = format_date(Date(day));
    daily[date.substr(0, 7)][date] = amount;
  }
  json weekly = json::array();
  for (const auto& [week, amount] : r.weekly_series) {
    weekly.push_back({{"week", format_iso_week(week)}, {"income", amount}});
  }
  j = json{{"range", {{"from", date_to_json(r.range.from)}, {"to", date_to_json(r.range.to)}}},
           {"total_income", r.total_income},
           {"total_expenses", r.total_expenses},
           {"net_earnings", r.net_earnings},
           {"hours_worked", r.hours_worked},
           {"hourly_rate", r.hourly_rate},
           {"zero_hours", r.zero_hours},
           {"daily_by_month", daily},
           {"weekly_series", weekly},
           {"hourly_profile", r.hourly_profile},
           {"paid_time_share", r.paid_time_share}};
}

}  // namespace g2g
