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

#include "g2g/storage/store.hpp"

#include <sqlite3.h>

#include <array>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "g2g/core/crypto.hpp"

namespace g2g {

namespace {

constexpr int kSchemaVersion = 1;

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS meta(
  key TEXT PRIMARY KEY,
  value TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS records(
  kind INTEGER NOT NULL,
  id TEXT NOT NULL,
  owner TEXT NOT NULL DEFAULT '',
  version INTEGER NOT NULL,
  deleted INTEGER NOT NULL DEFAULT 0,
  expires_at INTEGER,
  payload TEXT NOT NULL,
  PRIMARY KEY(kind, id)
) WITHOUT ROWID;
CREATE INDEX IF NOT EXISTS records_owner ON records(kind, owner);
CREATE TABLE IF NOT EXISTS audit(
  seq INTEGER PRIMARY KEY AUTOINCREMENT,
  event_id TEXT NOT NULL UNIQUE,
  subject_kind INTEGER NOT NULL,
  subject_id TEXT NOT NULL,
  at INTEGER NOT NULL,
  payload TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS audit_subject ON audit(subject_kind, subject_id, seq);
CREATE TRIGGER IF NOT EXISTS audit_no_update BEFORE UPDATE ON audit
  BEGIN SELECT RAISE(ABORT, 'audit log is append-only'); END;
CREATE TRIGGER IF NOT EXISTS audit_no_delete BEFORE DELETE ON audit
  BEGIN SELECT RAISE(ABORT, 'audit log is append-only'); END;
)sql";

class Db {
 public:
  Db() = default;
  Db(const Db&) = delete;
  Db& operator=(const Db&) = delete;
  ~Db() {
    if (db_) sqlite3_close_v2(db_);
  }

  Status open(const std::filesystem::path& path, bool durable) {
    int rc = sqlite3_open_v2(path.c_str(), &db_,
                             SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_NOMUTEX, nullptr);
    if (rc != SQLITE_OK) return Error(ErrorCode::kIo, "cannot open " + path.string() + ": " + errmsg());
    sqlite3_busy_timeout(db_, 10000);
    if (auto s = exec("PRAGMA journal_mode=WAL;"); !s) return s;
    return exec(durable ? "PRAGMA synchronous=FULL;" : "PRAGMA synchronous=OFF;");
  }

  Status exec(const char* sql) {
    char* err = nullptr;
    if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
      std::string msg = err ? err : "unknown";
      sqlite3_free(err);
      return Error(ErrorCode::kIo, msg);
    }
    return ok_status();
  }

  std::string errmsg() const { return db_ ? sqlite3_errmsg(db_) : "no handle"; }
  sqlite3* raw() const { return db_; }

 private:
  sqlite3* db_ = nullptr;
};

class Stmt {
 public:
  Stmt(const Db& db, const char* sql) {
    if (sqlite3_prepare_v2(db.raw(), sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw std::runtime_error(std::string("prepare failed: ") + db.errmsg());
    }
  }
  Stmt(const Stmt&) = delete;
  Stmt& operator=(const Stmt&) = delete;
  ~Stmt() { sqlite3_finalize(stmt_); }

  Stmt& bind(int idx, std::int64_t v) {
    sqlite3_bind_int64(stmt_, idx, v);
    return *this;
  }
  Stmt& bind(int idx, std::string_view v) {
    sqlite3_bind_text(stmt_, idx, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
    return *this;
  }
  Stmt& bind_null(int idx) {
    sqlite3_bind_null(stmt_, idx);
    return *this;
  }

  // True while rows remain.
  bool step() {
    int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw std::runtime_error(std::string("step failed: ") +
                             sqlite3_errmsg(sqlite3_db_handle(stmt_)));
  }

  std::int64_t int64(int col) const { return sqlite3_column_int64(stmt_, col); }
  bool is_null(int col) const { return sqlite3_column_type(stmt_, col) == SQLITE_NULL; }
  std::string text(int col) const {
    auto* p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char*>(p),
                           static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
             : std::string();
  }

 private:
  sqlite3_stmt* stmt_ = nullptr;
};

std::int64_t to_ms(Timestamp t) { return t.time_since_epoch().count(); }
Timestamp from_ms(std::int64_t v) { return Timestamp(std::chrono::milliseconds(v)); }

Record read_record(const Stmt& s) {
  // Column order: kind, id, owner, version, expires_at, payload
  Record r;
  r.kind = static_cast<RecordKind>(s.int64(0));
  r.id = s.text(1);
  r.owner = s.text(2);
  r.version = s.int64(3);
  if (!s.is_null(4)) r.expires_at = from_ms(s.int64(4));
  r.payload = json::parse(s.text(5));
  return r;
}

constexpr const char* kLiveFilter = " deleted = 0 AND (expires_at IS NULL OR expires_at > ?) ";

}  // namespace

struct Snapshot::Impl {
  std::shared_ptr<Store::Impl> owner;
  std::unique_ptr<Db> db;
  Timestamp now{};
  ~Impl();
};

struct Store::Impl {
  std::filesystem::path path;
  StoreOptions options;
  std::mutex write_mu;
  std::array<std::mutex, 64> owner_mu;
  Db writer;
  std::mutex pool_mu;
  std::vector<std::unique_ptr<Db>> idle_readers;

  std::unique_ptr<Db> acquire_reader() {
    {
      std::lock_guard lock(pool_mu);
      if (!idle_readers.empty()) {
        auto db = std::move(idle_readers.back());
        idle_readers.pop_back();
        return db;
      }
    }
    auto db = std::make_unique<Db>();
    if (auto s = db->open(path, options.durable); !s) throw std::runtime_error(s.error().message);
    return db;
  }

  void release_reader(std::unique_ptr<Db> db) {
    std::lock_guard lock(pool_mu);
    if (idle_readers.size() < 16) idle_readers.push_back(std::move(db));
  }

  Status apply_put(const Record& r) {
    if (r.kind == RecordKind::kAudit) {
      return Error(ErrorCode::kImmutableKind, "audit records are written with append_audit");
    }
    Stmt cur(writer, "SELECT version FROM records WHERE kind = ? AND id = ?");
    cur.bind(1, static_cast<std::int64_t>(r.kind)).bind(2, r.id);
    std::int64_t current = cur.step() ? cur.int64(0) : 0;
    if (r.version != current + 1) {
      return Error(ErrorCode::kVersionConflict,
                   std::string(enum_name(r.kind)) + " " + r.id + ": expected version " +
                       std::to_string(current + 1) + ", got " + std::to_string(r.version));
    }
    Stmt up(writer,
            "INSERT INTO records(kind, id, owner, version, deleted, expires_at, payload) "
            "VALUES(?, ?, ?, ?, 0, ?, ?) "
            "ON CONFLICT(kind, id) DO UPDATE SET owner = excluded.owner, version = excluded.version, "
            "deleted = 0, expires_at = excluded.expires_at, payload = excluded.payload");
    up.bind(1, static_cast<std::int64_t>(r.kind)).bind(2, r.id).bind(3, r.owner).bind(4, r.version);
    if (r.expires_at) up.bind(5, to_ms(*r.expires_at));
    else up.bind_null(5);
    up.bind(6, r.payload.dump());
    up.step();
    return ok_status();
  }

  Status apply_erase(const Record& r) {
    Stmt cur(writer, "SELECT version, deleted FROM records WHERE kind = ? AND id = ?");
    cur.bind(1, static_cast<std::int64_t>(r.kind)).bind(2, r.id);
    if (!cur.step() || cur.int64(1) != 0) {
      return Error(ErrorCode::kNotFound, std::string(enum_name(r.kind)) + " " + r.id + " not found");
    }
    if (cur.int64(0) != r.version) {
      return Error(ErrorCode::kVersionConflict, std::string(enum_name(r.kind)) + " " + r.id +
                                                    " changed since it was read");
    }
    Stmt up(writer,
            "UPDATE records SET deleted = 1, version = version + 1, payload = '{}', "
            "expires_at = NULL WHERE kind = ? AND id = ?");
    up.bind(1, static_cast<std::int64_t>(r.kind)).bind(2, r.id);
    up.step();
    return ok_status();
  }

  Status apply_audit(AuditEvent event) {
    Stmt dup(writer, "SELECT 1 FROM audit WHERE event_id = ?");
    dup.bind(1, event.event_id);
    if (event.event_id.empty() || dup.step()) {
      return Error(ErrorCode::kInvalidValue, "audit event id '" + event.event_id + "' is empty or already used");
    }
    // Timestamps never go backwards within one subject.
    Stmt last(writer,
              "SELECT at FROM audit WHERE subject_kind = ? AND subject_id = ? "
              "ORDER BY seq DESC LIMIT 1");
    last.bind(1, static_cast<std::int64_t>(event.subject_kind)).bind(2, event.subject_id);
    if (last.step() && last.int64(0) > to_ms(event.at)) event.at = from_ms(last.int64(0));
    Stmt ins(writer, "INSERT INTO audit(event_id, subject_kind, subject_id, at, payload) VALUES(?, ?, ?, ?, ?)");
    ins.bind(1, event.event_id)
        .bind(2, static_cast<std::int64_t>(event.subject_kind))
        .bind(3, event.subject_id)
        .bind(4, to_ms(event.at))
        .bind(5, json(event).dump());
    ins.step();
    return ok_status();
  }

  Status run_batch(const WriteBatch::Op* ops, std::size_t n);
};

Snapshot::Impl::~Impl() {
  if (db && owner) {
    db->exec("COMMIT;");
    owner->release_reader(std::move(db));
  }
}

Snapshot::Snapshot(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
Snapshot::Snapshot(Snapshot&&) noexcept = default;
Snapshot& Snapshot::operator=(Snapshot&&) noexcept = default;
Snapshot::~Snapshot() = default;

Result<Store> Store::open(const std::filesystem::path& path, StoreOptions options) {
  auto impl = std::make_shared<Impl>();
  impl->path = path;
  if (!options.clock) options.clock = std::make_shared<SystemClock>();
  impl->options = options;
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  if (auto s = impl->writer.open(path, options.durable); !s) return s.error();
  if (auto s = impl->writer.exec(kSchema); !s) return s.error();
  try {
    Stmt v(impl->writer, "SELECT value FROM meta WHERE key = 'schema_version'");
    if (v.step()) {
      if (std::stoi(v.text(0)) != kSchemaVersion) {
        return Error(ErrorCode::kIo, "unsupported schema version " + v.text(0));
      }
    } else {
      Stmt ins(impl->writer, "INSERT INTO meta(key, value) VALUES('schema_version', ?)");
      ins.bind(1, std::to_string(kSchemaVersion));
      ins.step();
    }
  } catch (const std::exception& ex) {
    return Error(ErrorCode::kIo, ex.what());
  }
  return Store(std::move(impl));
}

Snapshot Store::snapshot() const {
  auto impl = std::make_unique<Snapshot::Impl>();
  impl->owner = impl_;
  impl->db = impl_->acquire_reader();
  impl->now = impl_->options.clock->now();
  if (auto s = impl->db->exec("BEGIN;"); !s) throw std::runtime_error(s.error().message);
  // The read transaction starts at the first read; pin it now.
  Stmt pin(*impl->db, "SELECT count(*) FROM meta");
  pin.step();
  return Snapshot(std::move(impl));
}

Status Store::Impl::run_batch(const WriteBatch::Op* ops, std::size_t n) {
  std::lock_guard lock(write_mu);
  if (auto s = writer.exec("BEGIN IMMEDIATE;"); !s) return s;
  try {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& op = ops[i];
      Status s = ok_status();
      switch (op.type) {
        case WriteBatch::OpType::kPut: s = apply_put(op.record); break;
        case WriteBatch::OpType::kErase: s = apply_erase(op.record); break;
        case WriteBatch::OpType::kAudit: s = apply_audit(op.event); break;
      }
      if (!s) {
        writer.exec("ROLLBACK;");
        return s;
      }
    }
  } catch (const std::exception& ex) {
    writer.exec("ROLLBACK;");
    return Error(ErrorCode::kIo, ex.what());
  }
  return writer.exec("COMMIT;");
}

Result<std::int64_t> Store::put(const Record& record) {
  WriteBatch b;
  b.put(record);
  if (auto s = commit(b); !s) return s.error();
  return record.version;
}

Status Store::append_audit(const AuditEvent& event) {
  WriteBatch b;
  b.append_audit(event);
  return commit(b);
}

Status Store::commit(const WriteBatch& batch) {
  if (batch.ops_.empty()) return ok_status();
  return impl_->run_batch(batch.ops_.data(), batch.ops_.size());
}

Result<Record> Store::get(RecordKind kind, std::string_view id, const Snapshot& snap) const {
  Stmt s(*snap.impl_->db,
         (std::string("SELECT kind, id, owner, version, expires_at, payload FROM records "
                      "WHERE kind = ? AND id = ? AND") + kLiveFilter).c_str());
  s.bind(1, static_cast<std::int64_t>(kind)).bind(2, id).bind(3, to_ms(snap.impl_->now));
  if (!s.step()) {
    return Error(ErrorCode::kNotFound, std::string(enum_name(kind)) + " " + std::string(id) + " not found");
  }
  return read_record(s);
}

Result<Record> Store::get(RecordKind kind, std::string_view id) const {
  auto snap = snapshot();
  return get(kind, id, snap);
}

std::vector<Record> Store::scan(RecordKind kind, const Snapshot& snap,
                                const std::function<bool(const Record&)>& predicate) const {
  Stmt s(*snap.impl_->db,
         (std::string("SELECT kind, id, owner, version, expires_at, payload FROM records "
                      "WHERE kind = ? AND") + kLiveFilter + "ORDER BY id").c_str());
  s.bind(1, static_cast<std::int64_t>(kind)).bind(2, to_ms(snap.impl_->now));
  std::vector<Record> out;
  while (s.step()) {
    Record r = read_record(s);
    if (!predicate || predicate(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> Store::scan_owner(RecordKind kind, std::string_view owner,
                                      const Snapshot& snap) const {
  Stmt s(*snap.impl_->db,
         (std::string("SELECT kind, id, owner, version, expires_at, payload FROM records "
                      "WHERE kind = ? AND owner = ? AND") + kLiveFilter + "ORDER BY id").c_str());
  s.bind(1, static_cast<std::int64_t>(kind)).bind(2, owner).bind(3, to_ms(snap.impl_->now));
  std::vector<Record> out;
  while (s.step()) out.push_back(read_record(s));
  return out;
}

std::int64_t Store::version_of(RecordKind kind, std::string_view id, const Snapshot& snap) const {
  Stmt s(*snap.impl_->db, "SELECT version FROM records WHERE kind = ? AND id = ?");
  s.bind(1, static_cast<std::int64_t>(kind)).bind(2, id);
  return s.step() ? s.int64(0) : 0;
}

std::vector<AuditEvent> Store::audit_history(SubjectKind kind, std::string_view subject_id,
                                             const Snapshot& snap) const {
  Stmt s(*snap.impl_->db,
         "SELECT payload, at FROM audit WHERE subject_kind = ? AND subject_id = ? ORDER BY seq");
  s.bind(1, static_cast<std::int64_t>(kind)).bind(2, subject_id);
  std::vector<AuditEvent> out;
  while (s.step()) {
    AuditEvent e = json::parse(s.text(0)).get<AuditEvent>();
    e.at = from_ms(s.int64(1));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<AuditEvent> Store::audit_log(const Snapshot& snap) const {
  Stmt s(*snap.impl_->db, "SELECT payload, at FROM audit ORDER BY seq");
  std::vector<AuditEvent> out;
  while (s.step()) {
    AuditEvent e = json::parse(s.text(0)).get<AuditEvent>();
    e.at = from_ms(s.int64(1));
    out.push_back(std::move(e));
  }
  return out;
}

bool Store::empty() const {
  auto snap = snapshot();
  Stmt s(*snap.impl_->db, "SELECT 1 FROM records WHERE deleted = 0 LIMIT 1");
  return !s.step();
}

std::vector<Record> Store::scan_expired(Timestamp now) const {
  auto snap = snapshot();
  Stmt s(*snap.impl_->db,
         "SELECT kind, id, owner, version, expires_at, payload FROM records "
         "WHERE deleted = 0 AND expires_at IS NOT NULL AND expires_at <= ? ORDER BY kind, id");
  s.bind(1, to_ms(now));
  std::vector<Record> out;
  while (s.step()) out.push_back(read_record(s));
  return out;
}

std::size_t Store::sweep_expired(Timestamp now) {
  std::lock_guard lock(impl_->write_mu);
  Stmt s(impl_->writer,
         "UPDATE records SET deleted = 1, version = version + 1, payload = '{}', expires_at = NULL "
         "WHERE deleted = 0 AND expires_at IS NOT NULL AND expires_at <= ?");
  s.bind(1, to_ms(now));
  s.step();
  return static_cast<std::size_t>(sqlite3_changes(impl_->writer.raw()));
}

Result<ExportManifest> Store::export_ndjson(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  auto snap = snapshot();
  ExportManifest manifest;
  std::string records_text;
  {
    Stmt s(*snap.impl_->db,
           "SELECT kind, id, owner, version, expires_at, payload FROM records WHERE deleted = 0 "
           "ORDER BY kind, id");
    while (s.step()) {
      Record r = read_record(s);
      json line{{"kind", std::string(enum_name(r.kind))},
                {"id", r.id},
                {"owner", r.owner},
                {"version", r.version},
                {"payload", r.payload}};
      if (r.expires_at) line["expires_at"] = timestamp_to_json(*r.expires_at);
      records_text += line.dump() + "\n";
      ++manifest.record_counts[std::string(enum_name(r.kind))];
    }
  }
  std::string audit_text;
  for (const auto& e : audit_log(snap)) {
    audit_text += json(e).dump() + "\n";
    ++manifest.audit_events;
  }
  manifest.content_digest = sha256_hex(records_text + audit_text);

  auto write = [&](const std::string& name, const std::string& text) -> Status {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) return Error(ErrorCode::kIo, "cannot write " + (dir / name).string());
    return ok_status();
  };
  if (auto s = write("records.ndjson", records_text); !s) return s.error();
  if (auto s = write("audit.ndjson", audit_text); !s) return s.error();
  json m{{"schema_version", manifest.schema_version},
         {"record_counts", manifest.record_counts},
         {"audit_events", manifest.audit_events},
         {"content_digest", manifest.content_digest}};
  if (auto s = write("manifest.json", m.dump(2) + "\n"); !s) return s.error();
  return manifest;
}

std::unique_lock<std::mutex> Store::lock_owner(std::string_view owner) const {
  return std::unique_lock(impl_->owner_mu[std::hash<std::string_view>{}(owner) % impl_->owner_mu.size()]);
}

const std::filesystem::path& Store::path() const { return impl_->path; }
const Clock& Store::clock() const { return *impl_->options.clock; }

}  // namespace g2g
