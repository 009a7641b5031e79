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

#include "g2g/analytics/planner.hpp"

#include <array>
#include <set>

#include "g2g/analytics/hours.hpp"

namespace g2g {

Result<Projection> project_earnings(const std::vector<IncomeEntry>& history, const PlanInput& plan) {
  if (plan.slots.empty()) return Error(ErrorCode::kEmptyPlan, "plan has no slots", "slots");
  if (plan.lookback_weeks < 1 || plan.lookback_weeks > 520) {
    return Error(ErrorCode::kInvalidValue, "lookback_weeks must be in 1..520", "lookback_weeks");
  }
  std::set<PlanSlot> slots;
  for (const auto& s : plan.slots) {
    if (s.weekday < 0 || s.weekday > 6 || s.hour < 0 || s.hour > 23) {
      return Error(ErrorCode::kInvalidValue, "slot out of range", "slots");
    }
    slots.insert(s);
  }

  using std::chrono::sys_days;
  const auto end = sys_days(plan.as_of) - std::chrono::days(1);
  const DateRange window{Date(sys_days(plan.as_of) - std::chrono::days(7 * plan.lookback_weeks)), Date(end)};

  std::array<long double, 7 * 24> alloc{};
  std::array<std::int64_t, 7 * 24> minutes{};
  long double total_cents = 0;
  std::int64_t total_minutes = 0;
  for (const auto& e : history) {
    if (!window.contains(e.work_date) || e.duration_minutes <= 0) continue;
    const auto cents = static_cast<long double>(e.income_amount.cents());
    total_cents += cents;
    total_minutes += e.duration_minutes;
    for_each_hour_bucket(e, [&](int weekday, int hour, std::int64_t m) {
      alloc[weekday * 24 + hour] += cents * static_cast<long double>(m) / static_cast<long double>(e.duration_minutes);
      minutes[weekday * 24 + hour] += m;
    });
  }

  Projection p;
  if (total_minutes == 0) {
    for (const auto& s : slots) p.per_slot.push_back({s, Money{}, true});
    p.confidence = Confidence::kNoHistory;
    return p;
  }
  p.overall_rate = Money::from_cents(round_cents(total_cents * 60.0L / static_cast<long double>(total_minutes)));
  bool any_fallback = false;
  for (const auto& s : slots) {
    const int b = s.weekday * 24 + s.hour;
    SlotProjection sp{s, p.overall_rate, true};
    if (minutes[b] > 0) {
      sp.expected = Money::from_cents(round_cents(alloc[b] * 60.0L / static_cast<long double>(minutes[b])));
      sp.fallback = false;
    } else {
      any_fallback = true;
    }
    p.total_expected += sp.expected;
    p.per_slot.push_back(sp);
  }
  p.confidence = any_fallback ? Confidence::kSparseHistory : Confidence::kOk;
  return p;
}

void to_json(json& j, const Projection& p) {
  json slots = json::array();
  for (const auto& s : p.per_slot) {
    slots.push_back({{"weekday", s.slot.weekday},
                     {"hour", s.slot.hour},
                     {"expected", s.expected},
                     {"fallback", s.fallback}});
  }
  j = json{{"total_expected", p.total_expected},
           {"per_slot", slots},
           {"confidence", p.confidence},
           {"overall_rate", p.overall_rate}};
}

}  // namespace g2g
