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

#include <memory>
#include <vector>

#include "g2g/core/crypto.hpp"
#include "g2g/domain/validate.hpp"
#include "g2g/ingestion/importer.hpp"
#include "g2g/storage/blobs.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

// A worker's own income and expense records. Every read and write is
// confined to the caller's records; another worker's id is NOT_FOUND.
class Ledger {
 public:
  Ledger(Store store, std::shared_ptr<IdSource> ids) : store_(std::move(store)), ids_(std::move(ids)) {}

  Result<IncomeEntry> create_income(const ViewerContext& worker, const json& draft);
  Result<IncomeEntry> update_income(const ViewerContext& worker, const EntryId& id, const json& patch);
  // Also drops the entry from the evidence of the owner's stories, in the
  // same atomic batch.
  Status delete_income(const ViewerContext& worker, const EntryId& id);
  std::vector<IncomeEntry> list_income(const ViewerContext& worker) const;
  Result<ImportReport> import_csv(const ViewerContext& worker, std::string_view bytes, CsvMode mode);

  Result<ExpenseEntry> create_expense(const ViewerContext& worker, const json& draft);
  Result<ExpenseEntry> update_expense(const ViewerContext& worker, const EntryId& id, const json& patch);
  Status delete_expense(const ViewerContext& worker, const EntryId& id);
  std::vector<ExpenseEntry> list_expenses(const ViewerContext& worker) const;

  // Stores an image for the caller and returns its digest.
  Result<StoredBlob> upload_image(const ViewerContext& worker, std::string_view bytes, std::string_view content_type);

  // Retention: hard-deletes expired records with the same cascade and
  // tombstones as a user delete. Returns how many went.
  std::size_t sweep_expired();

 private:
  Status require_worker(const ViewerContext& v) const;
  Result<IncomeEntry> build_income(const ViewerContext& worker, const json& draft, const EntryId& id,
                                   EntrySource source, const std::string& dedupe_key);
  Result<ExpenseEntry> build_expense(const ViewerContext& worker, const json& draft, const EntryId& id);
  void cascade_evidence(WriteBatch& batch, const WorkerId& owner, const EntryId& id, const Snapshot& snap) const;
  Status erase_with_tombstone(RecordKind kind, SubjectKind subject, const WorkerId& actor, const Record& rec);

  Store store_;
  std::shared_ptr<IdSource> ids_;
};

// Deleting actor recorded for retention sweeps.
inline constexpr std::string_view kSystemActor = "system";

}  // namespace g2g
