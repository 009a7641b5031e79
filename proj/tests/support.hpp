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

#include <atomic>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <unistd.h>

#include <gtest/gtest.h>

#include "g2g/core/crypto.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/storage/store.hpp"

namespace g2g::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(G2G_TEST_DATA) / name;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("g2g_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" +
             std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline Timestamp at(const char* iso) { return *parse_timestamp(iso); }
inline Date day(const char* iso) { return *parse_date(iso); }
inline Money usd(std::int64_t cents) { return Money::from_cents(cents); }

// "message [field: message; ...]" for assertion output.
inline std::string why(const Error& e) {
  std::string out = e.message;
  for (const auto& v : e.violations) out += " [" + v.field + ": " + v.message + "]";
  return out;
}

// A store in a fresh temp dir with a manual clock and sequential ids.
struct Env {
  TempDir dir;
  std::shared_ptr<ManualClock> clock = std::make_shared<ManualClock>(at("2024-06-10T12:00:00Z"));
  std::shared_ptr<SequentialIds> ids = std::make_shared<SequentialIds>();
  Store store;

  Env() : store(open(dir.path() / "g2g.db", clock)) {}

  static Store open(const std::filesystem::path& p, std::shared_ptr<const Clock> c) {
    auto s = Store::open(p, StoreOptions{false, std::move(c)});
    if (!s) throw std::runtime_error(s.error().message);
    return *s;
  }

  WorkerProfile add_profile(const std::string& username, Role role = Role::kWorker,
                            std::set<Platform> platforms = {Platform::kUber}, Demographics demo = {}) {
    WorkerProfile p;
    p.worker_id = ids->next("wkr");
    p.username = username;
    p.role = role;
    if (role == Role::kWorker) p.platforms = std::move(platforms);
    p.demographics = demo;
    p.created_at = clock->now();
    Record r;
    r.kind = RecordKind::kProfile;
    r.id = p.worker_id;
    r.owner = p.worker_id;
    r.version = 1;
    r.payload = p;
    auto put = store.put(r);
    if (!put) throw std::runtime_error(put.error().message);
    return p;
  }

  static ViewerContext viewer(const WorkerProfile& p) { return ViewerContext{p.worker_id, p.role, p.platforms}; }
};

// Minimal valid uber entry for pure analytics tests.
inline IncomeEntry entry(const std::string& id, const WorkerId& worker, const char* date, int start_minute,
                         std::int64_t minutes, std::int64_t cents, Platform p = Platform::kUber) {
  IncomeEntry e;
  e.entry_id = id;
  e.worker_id = worker;
  e.platform = p;
  e.work_date = day(date);
  e.start_minute = start_minute;
  e.duration_minutes = minutes;
  e.work_type = p == Platform::kUber ? WorkType::kTrip : p == Platform::kRover ? WorkType::kWalk : WorkType::kHourly;
  e.income_amount = usd(cents);
  e.dedupe_key = "manual:" + id;
  return e;
}

}  // namespace g2g::testing
