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
#include <cstdint>
#include <functional>

#include "g2g/domain/types.hpp"

namespace g2g {

// Splits an entry's working interval into (weekday, hour) buckets. The
// callback receives the bucket and the minutes of overlap; an interval that
// runs past midnight continues into the next weekday. Entries without a
// start time are skipped.
void for_each_hour_bucket(const IncomeEntry& e,
                          const std::function<void(int weekday, int hour, std::int64_t minutes)>& fn);

}  // namespace g2g
