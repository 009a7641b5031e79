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

#include "g2g/service/auth.hpp"

#include <algorithm>
#include <cctype>

#include "g2g/privacy/audit.hpp"

namespace g2g {

namespace {

std::mutex& username_mutex() {
  static std::mutex mu;
  return mu;
}

bool valid_username(std::string_view u) {
  if (u.size() < 3 || u.size() > 32) return false;
  if (u == "anonymous") return false;
  return std::all_of(u.begin(), u.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

std::string fold(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Result<std::vector<std::string>> create_invites(Store& store, IdSource& ids, std::string_view secret,
                                                const InviteSpec& spec, const WorkerId& actor) {
  if (secret.empty()) return Error(ErrorCode::kInvalidValue, "invite secret is not configured");
  if (spec.role == Role::kWorker && !spec.platform) {
    return Error(ErrorCode::kPlatformRequiredForWorker, "worker invites need a platform", "platform");
  }
  if (spec.role != Role::kWorker && spec.platform) {
    return Error(ErrorCode::kPlatformNotAllowedForRole,
                 std::string(enum_name(spec.role)) + " accounts have no platform", "platform");
  }
  if (spec.count < 1 || spec.count > 1000) {
    return Error(ErrorCode::kInvalidValue, "count must be in 1..1000", "count");
  }
  const Timestamp now = store.clock().now();
  std::vector<std::string> tokens;
  WriteBatch batch;
  for (int i = 0; i < spec.count; ++i) {
    std::string token = random_hex(16);
    Record rec;
    rec.kind = RecordKind::kInvite;
    rec.id = hmac_sha256_hex(secret, token);
    rec.version = 1;
    rec.payload = json{{"role", spec.role},
                       {"expires_at", timestamp_to_json(now + spec.ttl)},
                       {"redeemed", false}};
    if (spec.platform) rec.payload["platform"] = *spec.platform;
    batch.put(rec);
    batch.append_audit(make_event(ids, store.clock(), actor, SubjectKind::kInvite, rec.id, AuditAction::kCreate,
                                  json{{"after", rec.payload}}));
    tokens.push_back(std::move(token));
  }
  if (auto s = store.commit(batch); !s) return s.error();
  return tokens;
}

Result<Redemption> redeem_invite(Store& store, IdSource& ids, std::string_view secret, std::string_view token,
                                 std::string_view username, const Demographics& demographics) {
  if (secret.empty() || token.empty()) return Error(ErrorCode::kTokenInvalid, "unknown invite token", "token");
  auto invite = store.get(RecordKind::kInvite, hmac_sha256_hex(secret, token));
  if (!invite) return Error(ErrorCode::kTokenInvalid, "unknown invite token", "token");
  const json& p = invite->payload;
  if (p.value("redeemed", false)) return Error(ErrorCode::kTokenUsed, "invite already redeemed", "token");
  const Timestamp now = store.clock().now();
  if (timestamp_from_json(p.at("expires_at")) <= now) {
    return Error(ErrorCode::kTokenExpired, "invite has expired", "token");
  }
  if (!valid_username(username)) {
    return Error(ErrorCode::kInvalidValue, "username must be 3-32 letters, digits, '_', '-' or '.'", "username");
  }

  std::lock_guard lock(username_mutex());
  auto snap = store.snapshot();
  const std::string wanted = fold(username);
  bool taken = !store.scan(RecordKind::kProfile, snap, [&](const Record& r) {
                       return fold(r.payload.value("username", "")) == wanted;
                     }).empty();
  if (taken) return Error(ErrorCode::kUsernameTaken, "username is taken", "username");

  WorkerProfile profile;
  profile.worker_id = ids.next("wkr");
  profile.username = std::string(username);
  profile.role = p.at("role").get<Role>();
  if (p.contains("platform")) profile.platforms.insert(p.at("platform").get<Platform>());
  profile.demographics = demographics;
  profile.created_at = now;

  Record burned = *invite;
  burned.version = invite->version + 1;
  burned.payload["redeemed"] = true;
  Record prof;
  prof.kind = RecordKind::kProfile;
  prof.id = profile.worker_id;
  prof.owner = profile.worker_id;
  prof.version = 1;
  prof.payload = profile;
  WriteBatch batch;
  batch.put(burned);
  batch.put(prof);
  batch.append_audit(make_event(ids, store.clock(), profile.worker_id, SubjectKind::kInvite, burned.id,
                                AuditAction::kEdit, field_diff(invite->payload, burned.payload)));
  batch.append_audit(make_event(ids, store.clock(), profile.worker_id, SubjectKind::kProfile, prof.id,
                                AuditAction::kCreate, json{{"after", prof.payload}}));
  if (auto s = store.commit(batch); !s) {
    // A concurrent redemption won the version race.
    if (s.error().code == ErrorCode::kVersionConflict) {
      return Error(ErrorCode::kTokenUsed, "invite already redeemed", "token");
    }
    return s.error();
  }
  return Redemption{profile};
}

ViewerContext viewer_of(const WorkerProfile& p) {
  return ViewerContext{p.worker_id, p.role, p.platforms};
}

std::string SessionTable::open(const WorkerId& worker) {
  std::string token = random_hex(32);
  std::lock_guard lock(mu_);
  sessions_[token] = Entry{worker, clock_->now()};
  return token;
}

std::optional<WorkerId> SessionTable::touch(const std::string& token) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(token);
  if (it == sessions_.end()) return std::nullopt;
  const Timestamp now = clock_->now();
  if (now - it->second.last_seen > idle_) {
    sessions_.erase(it);
    return std::nullopt;
  }
  it->second.last_seen = now;
  return it->second.worker;
}

void SessionTable::close(const std::string& token) {
  std::lock_guard lock(mu_);
  sessions_.erase(token);
}

bool RateLimiter::allow(const std::string& key) {
  std::lock_guard lock(mu_);
  const Timestamp now = clock_->now();
  auto& q = hits_[key];
  while (!q.empty() && now - q.front() >= std::chrono::minutes(1)) q.pop_front();
  if (static_cast<int>(q.size()) >= limit_) return false;
  q.push_back(now);
  return true;
}

}  // namespace g2g
