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

#include "g2g/service/ledger.hpp"

#include <algorithm>

#include "g2g/privacy/audit.hpp"

namespace g2g {

namespace {

template <typename T>
Record ledger_record(RecordKind kind, const T& e, std::int64_t version) {
  Record r;
  r.kind = kind;
  r.id = e.entry_id;
  r.owner = e.worker_id;
  r.version = version;
  r.payload = e;
  r.expires_at = e.expires_at;
  return r;
}

json merge_patch(json base, const json& patch) {
  for (const auto& [k, v] : patch.items()) {
    if (v.is_null()) base.erase(k);
    else base[k] = v;
  }
  return base;
}

}  // namespace

Status Ledger::require_worker(const ViewerContext& v) const {
  if (v.role != Role::kWorker) return Error(ErrorCode::kForbidden, "only workers keep a ledger");
  return ok_status();
}

Result<IncomeEntry> Ledger::build_income(const ViewerContext& worker, const json& body, const EntryId& id,
                                         EntrySource source, const std::string& dedupe_key) {
  auto parsed = income_draft_from_json(body);
  if (!parsed) return parsed.error();
  auto& [draft, platform] = *parsed;
  if (!platform) return Error(ErrorCode::kMissingRequired, "platform is required", "platform");
  if (!worker.platforms.contains(*platform)) {
    return Error(ErrorCode::kPlatformNotInProfile,
                 "platform " + std::string(enum_name(*platform)) + " is not in your profile", "platform");
  }
  IncomeContext ctx;
  ctx.entry_id = id;
  ctx.worker_id = worker.viewer_id;
  ctx.caller_platforms = worker.platforms;
  ctx.source = source;
  ctx.dedupe_key = dedupe_key;
  return validate_income_entry(draft, *platform, ctx);
}

Result<IncomeEntry> Ledger::create_income(const ViewerContext& worker, const json& draft) {
  if (auto s = require_worker(worker); !s) return s.error();
  auto entry = build_income(worker, draft, ids_->next("inc"), EntrySource::kManual, "");
  if (!entry) return entry.error();
  WriteBatch batch;
  Record rec = ledger_record(RecordKind::kIncome, *entry, 1);
  batch.put(rec);
  batch.append_audit(make_event(*ids_, store_.clock(), worker.viewer_id, SubjectKind::kIncome, entry->entry_id,
                                AuditAction::kCreate, json{{"after", rec.payload}}));
  if (auto s = store_.commit(batch); !s) return s.error();
  return entry;
}

Result<IncomeEntry> Ledger::update_income(const ViewerContext& worker, const EntryId& id, const json& patch) {
  if (auto s = require_worker(worker); !s) return s.error();
  if (!patch.is_object()) return Error(ErrorCode::kBadRequest, "patch must be a JSON object");
  auto lock = store_.lock_owner(worker.viewer_id);
  auto rec = store_.get(RecordKind::kIncome, id);
  if (!rec || rec->owner != worker.viewer_id) return Error(ErrorCode::kNotFound, "no such income entry");
  auto current = rec->payload.get<IncomeEntry>();
  auto next = build_income(worker, merge_patch(income_to_draft_json(current), patch), id, current.source,
                           current.dedupe_key);
  if (!next) return next.error();
  if (*next == current) return next;
  WriteBatch batch;
  Record out = ledger_record(RecordKind::kIncome, *next, rec->version + 1);
  batch.put(out);
  batch.append_audit(make_event(*ids_, store_.clock(), worker.viewer_id, SubjectKind::kIncome, id,
                                AuditAction::kEdit, field_diff(rec->payload, out.payload)));
  if (auto s = store_.commit(batch); !s) return s.error();
  return next;
}

void Ledger::cascade_evidence(WriteBatch& batch, const WorkerId& owner, const EntryId& id,
                              const Snapshot& snap) const {
  for (const auto& rec : store_.scan_owner(RecordKind::kStory, owner, snap)) {
    Story s = rec.payload.get<Story>();
    auto it = std::find(s.evidence.begin(), s.evidence.end(), id);
    if (it == s.evidence.end()) continue;
    s.evidence.erase(it);
    Record r = rec;
    r.version = rec.version + 1;
    r.payload = s;
    batch.put(std::move(r));
  }
}

Status Ledger::erase_with_tombstone(RecordKind kind, SubjectKind subject, const WorkerId& actor,
                                    const Record& rec) {
  auto snap = store_.snapshot();
  WriteBatch batch;
  batch.erase(kind, rec.id, rec.version);
  if (kind == RecordKind::kIncome) cascade_evidence(batch, rec.owner, rec.id, snap);
  batch.append_audit(make_event(*ids_, store_.clock(), actor, subject, rec.id, AuditAction::kDelete));
  return store_.commit(batch);
}

Status Ledger::delete_income(const ViewerContext& worker, const EntryId& id) {
  if (auto s = require_worker(worker); !s) return s;
  auto lock = store_.lock_owner(worker.viewer_id);
  auto rec = store_.get(RecordKind::kIncome, id);
  if (!rec || rec->owner != worker.viewer_id) return Error(ErrorCode::kNotFound, "no such income entry");
  return erase_with_tombstone(RecordKind::kIncome, SubjectKind::kIncome, worker.viewer_id, *rec);
}

std::vector<IncomeEntry> Ledger::list_income(const ViewerContext& worker) const {
  std::vector<IncomeEntry> out;
  if (worker.role != Role::kWorker) return out;
  auto snap = store_.snapshot();
  for (const auto& rec : store_.scan_owner(RecordKind::kIncome, worker.viewer_id, snap)) {
    out.push_back(rec.payload.get<IncomeEntry>());
  }
  return out;
}

Result<ImportReport> Ledger::import_csv(const ViewerContext& worker, std::string_view bytes, CsvMode mode) {
  if (auto s = require_worker(worker); !s) return s.error();
  if (!worker.platforms.contains(Platform::kUber)) {
    return Error(ErrorCode::kPlatformNotInProfile, "trip CSV uploads are for uber drivers", "platform");
  }
  return import_trips_csv(store_, *ids_, worker.viewer_id, bytes, mode);
}

Result<ExpenseEntry> Ledger::build_expense(const ViewerContext& worker, const json& body, const EntryId& id) {
  auto draft = expense_draft_from_json(body);
  if (!draft) return draft.error();
  if (draft->platform && !worker.platforms.contains(*draft->platform)) {
    return Error(ErrorCode::kPlatformNotInProfile,
                 "platform " + std::string(enum_name(*draft->platform)) + " is not in your profile", "platform");
  }
  if (draft->photo) {
    auto blob = store_.get(RecordKind::kBlob, blob_record_id(worker.viewer_id, draft->photo->blob_digest));
    if (blob) draft->photo->content_type = blob->payload.value("content_type", "image");
  }
  ExpenseContext ctx;
  ctx.entry_id = id;
  ctx.worker_id = worker.viewer_id;
  ctx.blob_exists = [&](const std::string& digest) {
    return store_.get(RecordKind::kBlob, blob_record_id(worker.viewer_id, digest)).ok();
  };
  return validate_expense_entry(*draft, ctx);
}

Result<ExpenseEntry> Ledger::create_expense(const ViewerContext& worker, const json& draft) {
  if (auto s = require_worker(worker); !s) return s.error();
  auto entry = build_expense(worker, draft, ids_->next("exp"));
  if (!entry) return entry.error();
  WriteBatch batch;
  Record rec = ledger_record(RecordKind::kExpense, *entry, 1);
  batch.put(rec);
  batch.append_audit(make_event(*ids_, store_.clock(), worker.viewer_id, SubjectKind::kExpense, entry->entry_id,
                                AuditAction::kCreate, json{{"after", rec.payload}}));
  if (auto s = store_.commit(batch); !s) return s.error();
  return entry;
}

Result<ExpenseEntry> Ledger::update_expense(const ViewerContext& worker, const EntryId& id, const json& patch) {
  if (auto s = require_worker(worker); !s) return s.error();
  if (!patch.is_object()) return Error(ErrorCode::kBadRequest, "patch must be a JSON object");
  auto lock = store_.lock_owner(worker.viewer_id);
  auto rec = store_.get(RecordKind::kExpense, id);
  if (!rec || rec->owner != worker.viewer_id) return Error(ErrorCode::kNotFound, "no such expense");
  auto current = rec->payload.get<ExpenseEntry>();
  auto next = build_expense(worker, merge_patch(expense_to_draft_json(current), patch), id);
  if (!next) return next.error();
  if (*next == current) return next;
  WriteBatch batch;
  Record out = ledger_record(RecordKind::kExpense, *next, rec->version + 1);
  batch.put(out);
  batch.append_audit(make_event(*ids_, store_.clock(), worker.viewer_id, SubjectKind::kExpense, id,
                                AuditAction::kEdit, field_diff(rec->payload, out.payload)));
  if (auto s = store_.commit(batch); !s) return s.error();
  return next;
}

Status Ledger::delete_expense(const ViewerContext& worker, const EntryId& id) {
  if (auto s = require_worker(worker); !s) return s;
  auto lock = store_.lock_owner(worker.viewer_id);
  auto rec = store_.get(RecordKind::kExpense, id);
  if (!rec || rec->owner != worker.viewer_id) return Error(ErrorCode::kNotFound, "no such expense");
  return erase_with_tombstone(RecordKind::kExpense, SubjectKind::kExpense, worker.viewer_id, *rec);
}

std::vector<ExpenseEntry> Ledger::list_expenses(const ViewerContext& worker) const {
  std::vector<ExpenseEntry> out;
  if (worker.role != Role::kWorker) return out;
  auto snap = store_.snapshot();
  for (const auto& rec : store_.scan_owner(RecordKind::kExpense, worker.viewer_id, snap)) {
    out.push_back(rec.payload.get<ExpenseEntry>());
  }
  return out;
}

Result<StoredBlob> Ledger::upload_image(const ViewerContext& worker, std::string_view bytes,
                                        std::string_view content_type) {
  if (auto s = require_worker(worker); !s) return s.error();
  BlobStore blobs(BlobStore::root_for(store_.path()));
  auto blob = blobs.put_image(bytes, content_type);
  if (!blob) return blob.error();
  auto id = blob_record_id(worker.viewer_id, blob->digest);
  if (store_.get(RecordKind::kBlob, id)) return blob;
  Record rec;
  rec.kind = RecordKind::kBlob;
  rec.id = id;
  rec.owner = worker.viewer_id;
  rec.version = store_.version_of(RecordKind::kBlob, id, store_.snapshot()) + 1;
  rec.payload = json{{"digest", blob->digest}, {"content_type", blob->content_type}, {"size", blob->size}};
  WriteBatch batch;
  batch.put(rec);
  batch.append_audit(make_event(*ids_, store_.clock(), worker.viewer_id, SubjectKind::kBlob, id,
                                AuditAction::kCreate, json{{"after", rec.payload}}));
  if (auto s = store_.commit(batch); !s) return s.error();
  return blob;
}

std::size_t Ledger::sweep_expired() {
  std::size_t n = 0;
  for (const auto& rec : store_.scan_expired(store_.clock().now())) {
    std::optional<SubjectKind> subject;
    switch (rec.kind) {
      case RecordKind::kStory: subject = SubjectKind::kStory; break;
      case RecordKind::kIncome: subject = SubjectKind::kIncome; break;
      case RecordKind::kExpense: subject = SubjectKind::kExpense; break;
      case RecordKind::kInvite: subject = SubjectKind::kInvite; break;
      default: break;
    }
    if (!subject) continue;
    auto lock = store_.lock_owner(rec.owner);
    if (erase_with_tombstone(rec.kind, *subject, std::string(kSystemActor), rec)) ++n;
  }
  return n;
}

}  // namespace g2g
