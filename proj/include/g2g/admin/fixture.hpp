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

#include <string_view>

#include "g2g/core/result.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

inline constexpr std::string_view kFieldStudyFixture = "field-study";

// Populates an empty store with the seven-day field study: 14 active workers
// (7 drivers, 5 petsitters, 2 freelancers), their stories, likes, income and
// expense uploads and trends visits. Ids and timestamps come from the
// fixture itself, so two seeds give identical stores. NON_EMPTY_DB when the
// store already holds records.
Status seed_field_study(Store& store);

// Dispatches on fixture name; INVALID_VALUE for unknown names.
Status seed_fixture(Store& store, std::string_view name);

}  // namespace g2g
