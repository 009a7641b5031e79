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

#include "g2g/ingestion/importer.hpp"

#include <set>

#include "g2g/privacy/audit.hpp"

namespace g2g {

EntryId csv_entry_id(const WorkerId& worker, std::string_view dedupe_key) {
  std::string material = worker;
  material += '\x1f';
  material += dedupe_key;
  return "inc_" + sha256_hex(material).substr(0, 20);
}

Result<ImportReport> import_entries(Store& store, IdSource& ids, const WorkerId& worker,
                                    const std::vector<IncomeEntry>& entries) {
  for (const auto& e : entries) {
    if (e.worker_id != worker) {
      return Error(ErrorCode::kOwnershipMismatch,
                   "entry " + e.entry_id + " belongs to another worker", "worker_id");
    }
  }
  auto lock = store.lock_owner(worker);
  std::set<std::string> known;
  {
    auto snap = store.snapshot();
    for (const auto& rec : store.scan_owner(RecordKind::kIncome, worker, snap)) {
      known.insert(rec.payload.value("dedupe_key", ""));
    }
  }

  ImportReport report;
  WriteBatch batch;
  for (const auto& e : entries) {
    if (!known.insert(e.dedupe_key).second) {
      ++report.duplicates;
      continue;
    }
    json payload = e;
    Record rec;
    rec.kind = RecordKind::kIncome;
    rec.id = e.entry_id;
    rec.owner = worker;
    rec.version = 1;
    rec.payload = payload;
    rec.expires_at = e.expires_at;
    batch.put(std::move(rec));
    batch.append_audit(make_event(ids, store.clock(), worker, SubjectKind::kIncome, e.entry_id,
                                  AuditAction::kCreate, json{{"after", payload}}));
    ++report.accepted;
  }
  if (auto s = store.commit(batch); !s) return s.error();
  return report;
}

Result<ImportReport> import_trips_csv(Store& store, IdSource& ids, const WorkerId& worker,
                                      std::string_view bytes, CsvMode mode) {
  auto parsed = parse_trips_csv(bytes, mode);
  if (!parsed) return parsed.error();
  ImportReport report = std::move(parsed->report);

  std::vector<IncomeEntry> entries;
  for (std::size_t i = 0; i < parsed->records.size(); ++i) {
    const auto& trip = parsed->records[i];
    auto key = trip_dedupe_key(Platform::kUber, trip.trip_id);
    auto entry = normalize_trip(trip, worker, csv_entry_id(worker, key));
    if (!entry) {
      report.rejected.push_back(RowError{parsed->lines[i], entry.error()});
      continue;
    }
    entries.push_back(std::move(*entry));
  }
  auto stored = import_entries(store, ids, worker, entries);
  if (!stored) return stored.error();
  report.accepted = stored->accepted;
  report.duplicates += stored->duplicates;
  return report;
}

}  // namespace g2g
