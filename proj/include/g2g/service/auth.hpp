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

#include <chrono>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "g2g/core/crypto.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

struct InviteSpec {
  Role role = Role::kWorker;
  std::optional<Platform> platform;  // required for workers, refused otherwise
  int count = 1;
  std::chrono::hours ttl{24 * 14};
};

// Tokens are returned once and never stored; the invite record is keyed by
// HMAC(secret, token).
Result<std::vector<std::string>> create_invites(Store& store, IdSource& ids, std::string_view secret,
                                                const InviteSpec& spec, const WorkerId& actor);

struct Redemption {
  WorkerProfile profile;
};

// Burns the token and creates the profile in one batch. TOKEN_INVALID,
// TOKEN_USED, TOKEN_EXPIRED, USERNAME_TAKEN, INVALID_VALUE (username).
Result<Redemption> redeem_invite(Store& store, IdSource& ids, std::string_view secret, std::string_view token,
                                 std::string_view username, const Demographics& demographics);

ViewerContext viewer_of(const WorkerProfile& p);

// Opaque bearer tokens with idle expiry, kept in memory.
class SessionTable {
 public:
  SessionTable(std::shared_ptr<const Clock> clock, std::chrono::milliseconds idle)
      : clock_(std::move(clock)), idle_(idle) {}

  std::string open(const WorkerId& worker);
  // Refreshes the idle timer. nullopt when unknown or idle too long.
  std::optional<WorkerId> touch(const std::string& token);
  void close(const std::string& token);

 private:
  struct Entry {
    WorkerId worker;
    Timestamp last_seen;
  };
  std::shared_ptr<const Clock> clock_;
  std::chrono::milliseconds idle_;
  std::mutex mu_;
  std::map<std::string, Entry> sessions_;
};

// Sliding one-minute window per key.
class RateLimiter {
 public:
  RateLimiter(std::shared_ptr<const Clock> clock, int per_minute) : clock_(std::move(clock)), limit_(per_minute) {}
  bool allow(const std::string& key);

 private:
  std::shared_ptr<const Clock> clock_;
  int limit_;
  std::mutex mu_;
  std::map<std::string, std::deque<Timestamp>> hits_;
};

}  // namespace g2g
