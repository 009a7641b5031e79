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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2g/core/result.hpp"

namespace g2g {

struct CohortCell {
  std::string cohort_key;
  std::int64_t count = 0;  // distinct workers
  double aggregate = 0;
};

// A suppressed cell carries its key only.
struct ReleasedCell {
  std::string cohort_key;
  bool suppressed = false;
  std::optional<std::int64_t> count;
  std::optional<double> value;
  bool operator==(const ReleasedCell&) const = default;
};

// Optional noise applied to a released aggregate before rounding. Off unless
// a caller passes one.
using Perturbation = std::function<double(const std::string& cohort_key, double value)>;

// Releases cells with count >= k, aggregates rounded to 2 decimals, input
// order preserved. INVALID_K when k < 1.
Result<std::vector<ReleasedCell>> suppress_cohorts(const std::vector<CohortCell>& cells, int k,
                                                   const Perturbation& perturb = {});

}  // namespace g2g
