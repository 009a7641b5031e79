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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"
#include "g2g/privacy/suppress.hpp"

namespace g2g {

enum class Dimension { kHourlyIncomeRate, kTippingRate, kRatings };
enum class Breakdown {
  kAge,
  kGender,
  kEthnicity,
  kHouseholdIncome,
  kEducation,
  kTenure,
  kWorkStatus,
  kPlatform,
};

template <> struct EnumNames<Dimension> {
  static constexpr std::array<std::string_view, 3> names{"hourly_income_rate", "tipping_rate", "ratings"};
};
template <> struct EnumNames<Breakdown> {
  static constexpr std::array<std::string_view, 8> names{
      "age", "gender", "ethnicity", "household_income", "education", "tenure", "work_status", "platform"};
};

inline constexpr std::string_view kUnspecifiedCohort = "unspecified";

struct WorkerData {
  WorkerProfile profile;
  std::vector<IncomeEntry> income;
};

struct InsightTable {
  Dimension dimension = Dimension::kHourlyIncomeRate;
  Breakdown breakdown = Breakdown::kAge;
  int k = 5;
  std::vector<ReleasedCell> cells;
  std::optional<double> self_marker;
};

// One value per worker. nullopt when the worker has nothing to contribute
// (no worked hours; tips equal to all income; no rating).
std::optional<double> worker_value(Dimension dim, const WorkerProfile& profile,
                                   const std::vector<IncomeEntry>& income);

// Exact per-cohort inputs before suppression. Exposed for oracles.
std::vector<CohortCell> cohort_cells(const std::vector<WorkerData>& workers, Dimension dim,
                                     Breakdown breakdown);

Result<InsightTable> collective_insight(const std::vector<WorkerData>& workers, const ViewerContext& viewer,
                                        std::string_view dimension, std::string_view breakdown, int k,
                                        const Perturbation& perturb = {});

void to_json(json& j, const InsightTable& t);

}  // namespace g2g
