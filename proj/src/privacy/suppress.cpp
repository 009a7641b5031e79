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

#include "g2g/privacy/suppress.hpp"

#include "g2g/core/money.hpp"

namespace g2g {

Result<std::vector<ReleasedCell>> suppress_cohorts(const std::vector<CohortCell>& cells, int k,
                                                   const Perturbation& perturb) {
  if (k < 1) return Error(ErrorCode::kInvalidK, "k must be >= 1, got " + std::to_string(k), "k");
  std::vector<ReleasedCell> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    ReleasedCell r;
    r.cohort_key = c.cohort_key;
    if (c.count < k) {
      r.suppressed = true;
    } else {
      double v = perturb ? perturb(c.cohort_key, c.aggregate) : c.aggregate;
      r.count = c.count;
      r.value = round2(v);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace g2g
