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

#include <random>

#include <gtest/gtest.h>

#include "g2g/analytics/planner.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

// Constant rate r in history gives r times the number of distinct slots.
TEST(PropPlanner, ConstantRateIsLinear) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t per_minute = 5 + static_cast<std::int64_t>(rng() % 100);  // cents
    const auto as_of = std::chrono::sys_days(day("2024-06-10")) + std::chrono::days(rng() % 30);
    PlanInput plan;
    plan.as_of = Date(as_of);
    plan.lookback_weeks = 1 + static_cast<int>(rng() % 10);
    std::vector<IncomeEntry> hist;
    const int n = 1 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) {
      const auto minutes = 1 + static_cast<std::int64_t>(rng() % 300);
      auto e = entry("e" + std::to_string(i), "wkr_1", "2024-01-01", static_cast<int>(rng() % 1440), minutes,
                     per_minute * minutes);
      e.work_date = Date(as_of - std::chrono::days(1 + rng() % (7 * plan.lookback_weeks)));
      hist.push_back(e);
    }
    // Outside the lookback window at a different rate: must be ignored.
    auto stale = entry("old", "wkr_1", "2020-01-01", 0, 60, 999999);
    hist.push_back(stale);
    std::set<PlanSlot> distinct;
    const int slots = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < slots; ++i) {
      PlanSlot s{static_cast<int>(rng() % 7), static_cast<int>(rng() % 24)};
      plan.slots.push_back(s);
      distinct.insert(s);
    }
    auto p = project_earnings(hist, plan);
    ASSERT_TRUE(p);
    ASSERT_EQ(p->total_expected.cents(), per_minute * 60 * static_cast<std::int64_t>(distinct.size())) << trial;
    Money sum;
    for (const auto& s : p->per_slot) sum += s.expected;
    ASSERT_EQ(sum, p->total_expected);
    ASSERT_NE(p->confidence, Confidence::kNoHistory);
  }
}
