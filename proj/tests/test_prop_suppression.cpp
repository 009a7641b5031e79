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

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "g2g/analytics/insights.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

namespace {

std::vector<WorkerData> random_workers(std::mt19937_64& rng) {
  std::vector<WorkerData> ws;
  const int n = 1 + static_cast<int>(rng() % 40);
  for (int i = 0; i < n; ++i) {
    WorkerData w;
    w.profile.worker_id = "wkr_" + std::to_string(i);
    w.profile.platforms = {Platform::kUber};
    if (rng() % 5) w.profile.demographics.age_band = static_cast<AgeBand>(rng() % 6);
    if (rng() % 3) w.profile.rating_snapshot = 3.0 + static_cast<double>(rng() % 200) / 100.0;
    const int entries = static_cast<int>(rng() % 4);
    for (int j = 0; j < entries; ++j) {
      auto e = entry("e" + std::to_string(j), w.profile.worker_id, "2024-06-03", 0,
                     1 + static_cast<std::int64_t>(rng() % 300), 100 + static_cast<std::int64_t>(rng() % 9000));
      e.tips = usd(static_cast<std::int64_t>(rng() % 100));
      w.income.push_back(e);
    }
    ws.push_back(std::move(w));
  }
  return ws;
}

// Independent per-worker value and cohort mean.
std::map<std::string, std::pair<int, double>> brute(const std::vector<WorkerData>& ws, Dimension dim) {
  std::map<std::string, std::pair<int, double>> out;
  for (const auto& w : ws) {
    std::optional<double> v;
    if (dim == Dimension::kRatings) {
      v = w.profile.rating_snapshot;
    } else if (!w.income.empty()) {
      double income = 0, tips = 0, minutes = 0;
      for (const auto& e : w.income) {
        income += static_cast<double>(e.income_amount.cents());
        tips += static_cast<double>(e.tips->cents());
        minutes += static_cast<double>(e.duration_minutes);
      }
      if (dim == Dimension::kHourlyIncomeRate) v = income / 100.0 / (minutes / 60.0);
      else if (income > tips) v = tips / (income - tips) * 100.0;
    }
    if (!v) continue;
    auto key = w.profile.demographics.age_band ? std::string(enum_name(*w.profile.demographics.age_band)) : "unspecified";
    out[key].first += 1;
    out[key].second += *v;
  }
  return out;
}

}  // namespace

TEST(PropSuppression, ReleasedCellsMeetKAndMatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto ws = random_workers(rng);
    for (auto dim : all_enum_values<Dimension>()) {
      auto exact = brute(ws, dim);
      std::set<std::string> prev_released;
      for (int k = 1; k <= 10; ++k) {
        auto t = collective_insight(ws, {}, enum_name(dim), "age", k);
        ASSERT_TRUE(t);
        std::set<std::string> released;
        for (const auto& c : t->cells) {
          if (c.suppressed) {
            ASSERT_FALSE(c.count);
            ASSERT_FALSE(c.value);
            continue;
          }
          released.insert(c.cohort_key);
          ASSERT_GE(*c.count, k);
          auto [n, sum] = exact.at(c.cohort_key);
          ASSERT_EQ(*c.count, n);
          ASSERT_NEAR(*c.value, sum / n, 0.005 + 1e-9);
          ASSERT_DOUBLE_EQ(*c.value, round2(*c.value));
        }
        // Raising k never reveals a cell.
        if (k > 1) {
          for (const auto& key : released) ASSERT_TRUE(prev_released.contains(key));
        }
        prev_released = released;
      }
    }
  }
}

TEST(PropSuppression, RawCellsMonotoneInK) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<CohortCell> cells;
    for (int i = 0; i < 8; ++i) cells.push_back({"c" + std::to_string(i), static_cast<std::int64_t>(rng() % 12), 1.5});
    std::size_t last = cells.size() + 1;
    for (int k = 1; k <= 10; ++k) {
      auto r = suppress_cohorts(cells, k);
      std::size_t released = 0;
      for (const auto& c : *r) released += c.suppressed ? 0 : 1;
      ASSERT_LE(released, last);
      last = released;
    }
  }
}
