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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2g/core/result.hpp"
#include "g2g/core/time.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

enum class RecordKind { kProfile, kStory, kIncome, kExpense, kAudit, kInvite, kBlob };

template <> struct EnumNames<RecordKind> {
  static constexpr std::array<std::string_view, 7> names{
      "profile", "story", "income", "expense", "audit", "invite", "blob"};
};

struct Record {
  RecordKind kind = RecordKind::kProfile;
  std::string id;
  // Owning worker, when the record has one. Indexed for per-worker scans.
  std::string owner;
  // On put: the version being written, which must be current + 1
  // (1 for a new id). On read: the stored version.
  std::int64_t version = 0;
  json payload;
  std::optional<Timestamp> expires_at;
};

// A read handle pinned to one committed state. Move-only; cheap to hold for
// the duration of one request.
class Snapshot {
 public:
  Snapshot(Snapshot&&) noexcept;
  Snapshot& operator=(Snapshot&&) noexcept;
  ~Snapshot();

  struct Impl;

 private:
  friend class Store;
  explicit Snapshot(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

// Atomic multi-record write. Either every operation applies or none does.
class WriteBatch {
 public:
  void put(Record record) { ops_.push_back(Op{OpType::kPut, std::move(record), {}}); }
  // Hard delete: the record vanishes from every read path; the id's version
  // still advances so a stale writer cannot resurrect it.
  void erase(RecordKind kind, std::string id, std::int64_t expected_version) {
    Record r;
    r.kind = kind;
    r.id = std::move(id);
    r.version = expected_version;
    ops_.push_back(Op{OpType::kErase, std::move(r), {}});
  }
  void append_audit(AuditEvent event) {
    ops_.push_back(Op{OpType::kAudit, {}, std::move(event)});
  }
  bool empty() const { return ops_.empty(); }
  std::size_t size() const { return ops_.size(); }

 private:
  friend class Store;
  enum class OpType { kPut, kErase, kAudit };
  struct Op {
    OpType type;
    Record record;
    AuditEvent event;
  };
  std::vector<Op> ops_;
};

struct StoreOptions {
  // fsync on every commit. Tests that never crash may turn this off.
  bool durable = true;
  std::shared_ptr<const Clock> clock;
};

struct ExportManifest {
  int schema_version = 1;
  std::map<std::string, std::int64_t> record_counts;
  std::int64_t audit_events = 0;
  std::string content_digest;
};

// Embedded transactional record store (SQLite in WAL mode). The handle is
// cheap to copy and safe to share across threads; writes are serialized,
// readers work from snapshots and never block writers.
class Store {
 public:
  static Result<Store> open(const std::filesystem::path& path, StoreOptions options = {});

  Snapshot snapshot() const;

  Result<std::int64_t> put(const Record& record);
  Status append_audit(const AuditEvent& event);
  Status commit(const WriteBatch& batch);

  Result<Record> get(RecordKind kind, std::string_view id, const Snapshot& snap) const;
  Result<Record> get(RecordKind kind, std::string_view id) const;
  std::vector<Record> scan(RecordKind kind, const Snapshot& snap,
                           const std::function<bool(const Record&)>& predicate = {}) const;
  std::vector<Record> scan_owner(RecordKind kind, std::string_view owner, const Snapshot& snap) const;
  // Current (live or deleted) version of an id, 0 when never written.
  std::int64_t version_of(RecordKind kind, std::string_view id, const Snapshot& snap) const;

  std::vector<AuditEvent> audit_history(SubjectKind kind, std::string_view subject_id,
                                        const Snapshot& snap) const;
  // Whole log in append order.
  std::vector<AuditEvent> audit_log(const Snapshot& snap) const;

  // True when no live non-audit record exists.
  bool empty() const;
  // Serializes read-modify-write sequences that touch one owner's records
  // (imports, cascading deletes). Striped; never held across requests.
  std::unique_lock<std::mutex> lock_owner(std::string_view owner) const;

  // Live-but-expired records (expiry <= now), for sweeps that cascade.
  std::vector<Record> scan_expired(Timestamp now) const;
  // Hard-deletes every record whose expiry is <= now. Returns the count.
  std::size_t sweep_expired(Timestamp now);

  // Newline-delimited JSON dump: records.ndjson, audit.ndjson, manifest.json.
  Result<ExportManifest> export_ndjson(const std::filesystem::path& dir) const;

  const std::filesystem::path& path() const;
  const Clock& clock() const;

  struct Impl;

 private:
  explicit Store(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace g2g
