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

#include <vector>

#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

struct PlanSlot {
  int weekday = 0;  // 0 = Monday
  int hour = 0;     // UTC
  auto operator<=>(const PlanSlot&) const = default;
};

struct PlanInput {
  std::vector<PlanSlot> slots;
  int lookback_weeks = 8;
  // History is the lookback window of whole days before this date.
  Date as_of{};
};

enum class Confidence { kOk, kSparseHistory, kNoHistory };

template <> struct EnumNames<Confidence> {
  static constexpr std::array<std::string_view, 3> names{"ok", "sparse_history", "no_history"};
};

struct SlotProjection {
  PlanSlot slot;
  Money expected;
  bool fallback = false;
};

struct Projection {
  Money total_expected;
  std::vector<SlotProjection> per_slot;
  Confidence confidence = Confidence::kNoHistory;
  Money overall_rate;
};

// Slots are a set: repeats collapse. EMPTY_PLAN when no slot is given;
// INVALID_VALUE for an out-of-range slot or lookback.
Result<Projection> project_earnings(const std::vector<IncomeEntry>& history, const PlanInput& plan);

void to_json(json& j, const Projection& p);

}  // namespace g2g
