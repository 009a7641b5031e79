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

#include "g2g/analytics/insights.hpp"

#include <map>

namespace g2g {

std::optional<double> worker_value(Dimension dim, const WorkerProfile& profile,
                                   const std::vector<IncomeEntry>& income) {
  if (dim == Dimension::kRatings) return profile.rating_snapshot;
  std::int64_t cents = 0;
  std::int64_t tips = 0;
  std::int64_t minutes = 0;
  for (const auto& e : income) {
    cents += e.income_amount.cents();
    tips += e.tips ? e.tips->cents() : 0;
    minutes += e.duration_minutes;
  }
  if (income.empty()) return std::nullopt;
  if (dim == Dimension::kHourlyIncomeRate) {
    if (minutes <= 0) return std::nullopt;
    return static_cast<double>(cents) / 100.0 / (static_cast<double>(minutes) / 60.0);
  }
  if (cents - tips <= 0) return std::nullopt;
  return static_cast<double>(tips) / static_cast<double>(cents - tips) * 100.0;
}

namespace {

template <typename E>
void add_enum_cohorts(std::vector<std::string>& keys) {
  for (auto v : all_enum_values<E>()) keys.emplace_back(enum_name(v));
}

template <typename E>
std::string key_of(const std::optional<E>& v) {
  return v ? std::string(enum_name(*v)) : std::string(kUnspecifiedCohort);
}

std::vector<std::string> cohort_order(Breakdown b) {
  std::vector<std::string> keys;
  switch (b) {
    case Breakdown::kAge: add_enum_cohorts<AgeBand>(keys); break;
    case Breakdown::kGender: add_enum_cohorts<Gender>(keys); break;
    case Breakdown::kEthnicity: add_enum_cohorts<Ethnicity>(keys); break;
    case Breakdown::kHouseholdIncome: add_enum_cohorts<IncomeBand>(keys); break;
    case Breakdown::kEducation: add_enum_cohorts<Education>(keys); break;
    case Breakdown::kTenure: add_enum_cohorts<TenureBand>(keys); break;
    case Breakdown::kWorkStatus: add_enum_cohorts<WorkStatus>(keys); break;
    case Breakdown::kPlatform: add_enum_cohorts<Platform>(keys); return keys;
  }
  keys.emplace_back(kUnspecifiedCohort);
  return keys;
}

std::string demographic_key(const Demographics& d, Breakdown b) {
  switch (b) {
    case Breakdown::kAge: return key_of(d.age_band);
    case Breakdown::kGender: return key_of(d.gender);
    case Breakdown::kEthnicity: return key_of(d.ethnicity);
    case Breakdown::kHouseholdIncome: return key_of(d.household_income_band);
    case Breakdown::kEducation: return key_of(d.education);
    case Breakdown::kTenure: return key_of(d.tenure_band);
    case Breakdown::kWorkStatus: return key_of(d.work_status);
    case Breakdown::kPlatform: break;
  }
  return std::string(kUnspecifiedCohort);
}

}  // namespace

std::vector<CohortCell> cohort_cells(const std::vector<WorkerData>& workers, Dimension dim,
                                     Breakdown breakdown) {
  struct Acc {
    std::int64_t count = 0;
    double sum = 0;
  };
  std::map<std::string, Acc> acc;
  auto add = [&](const std::string& key, std::optional<double> v) {
    if (!v) return;
    acc[key].count += 1;
    acc[key].sum += *v;
  };
  for (const auto& w : workers) {
    if (w.profile.role != Role::kWorker) continue;
    if (breakdown == Breakdown::kPlatform) {
      for (auto p : w.profile.platforms) {
        std::vector<IncomeEntry> on_platform;
        for (const auto& e : w.income) {
          if (e.platform == p) on_platform.push_back(e);
        }
        add(std::string(enum_name(p)), worker_value(dim, w.profile, on_platform));
      }
    } else {
      add(demographic_key(w.profile.demographics, breakdown), worker_value(dim, w.profile, w.income));
    }
  }
  std::vector<CohortCell> cells;
  for (const auto& key : cohort_order(breakdown)) {
    auto it = acc.find(key);
    if (it == acc.end()) {
      if (key != kUnspecifiedCohort) cells.push_back({key, 0, 0});
      continue;
    }
    cells.push_back({key, it->second.count, it->second.sum / static_cast<double>(it->second.count)});
  }
  return cells;
}

Result<InsightTable> collective_insight(const std::vector<WorkerData>& workers, const ViewerContext& viewer,
                                        std::string_view dimension, std::string_view breakdown, int k,
                                        const Perturbation& perturb) {
  auto dim = parse_enum<Dimension>(dimension);
  if (!dim) return Error(ErrorCode::kUnknownDimension, "unknown dimension '" + std::string(dimension) + "'", "dimension");
  auto attr = parse_enum<Breakdown>(breakdown);
  if (!attr) return Error(ErrorCode::kUnknownAttribute, "unknown attribute '" + std::string(breakdown) + "'", "breakdown");
  auto cells = suppress_cohorts(cohort_cells(workers, *dim, *attr), k, perturb);
  if (!cells) return cells.error();
  InsightTable t;
  t.dimension = *dim;
  t.breakdown = *attr;
  t.k = k;
  t.cells = std::move(*cells);
  if (viewer.role == Role::kWorker) {
    for (const auto& w : workers) {
      if (w.profile.worker_id != viewer.viewer_id) continue;
      if (auto v = worker_value(*dim, w.profile, w.income)) t.self_marker = round2(*v);
    }
  }
  return t;
}

void to_json(json& j, const InsightTable& t) {
  json cells = json::array();
  for (const auto& c : t.cells) {
    json cell{{"cohort", c.cohort_key}, {"suppressed", c.suppressed}};
    if (c.count) cell["count"] = *c.count;
    if (c.value) cell["value"] = *c.value;
    cells.push_back(std::move(cell));
  }
  j = json{{"dimension", t.dimension}, {"breakdown", t.breakdown}, {"k", t.k}, {"cells", cells}};
  if (t.self_marker) j["self_marker"] = *t.self_marker;
}

}  // namespace g2g
