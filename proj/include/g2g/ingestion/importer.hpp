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
#include <vector>

#include "g2g/core/crypto.hpp"
#include "g2g/ingestion/trips_csv.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

// Idempotent upsert keyed by dedupe_key. Entries whose key is already in the
// worker's ledger (or repeated within the batch) count as duplicates. Any
// entry not owned by `worker` fails the whole batch with OWNERSHIP_MISMATCH.
Result<ImportReport> import_entries(Store& store, IdSource& ids, const WorkerId& worker,
                                    const std::vector<IncomeEntry>& entries);

// Stable id for a CSV-derived entry, so re-imports address the same record.
EntryId csv_entry_id(const WorkerId& worker, std::string_view dedupe_key);

// parse -> normalize -> import, with one merged report:
// accepted + duplicates + rejected = data rows in the file.
Result<ImportReport> import_trips_csv(Store& store, IdSource& ids, const WorkerId& worker,
                                      std::string_view bytes, CsvMode mode = CsvMode::kStrict);

}  // namespace g2g
