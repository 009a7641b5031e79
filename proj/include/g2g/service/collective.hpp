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
#include <memory>
#include <string>
#include <vector>

#include "g2g/admin/export.hpp"
#include "g2g/admin/tax.hpp"
#include "g2g/analytics/insights.hpp"
#include "g2g/analytics/planner.hpp"
#include "g2g/analytics/trends.hpp"
#include "g2g/analytics/usage.hpp"
#include "g2g/feed/feed.hpp"
#include "g2g/service/auth.hpp"
#include "g2g/service/ledger.hpp"

namespace g2g {

struct ServiceConfig {
  int k = 5;
  std::string invite_secret;
  std::chrono::milliseconds session_idle = std::chrono::hours(24);
  int writes_per_minute = 60;
  std::vector<TaxDay> tax_calendar;
  std::vector<TaxResource> tax_resources;
};

// Everything behind the HTTP boundary, sharing one store handle.
class Collective {
 public:
  Collective(Store store, std::shared_ptr<IdSource> ids, std::shared_ptr<const Clock> clock, ServiceConfig config);

  Store& store() { return store_; }
  StoryFeed& feed() { return feed_; }
  Ledger& ledger() { return ledger_; }
  SessionTable& sessions() { return sessions_; }
  RateLimiter& limiter() { return limiter_; }
  const ServiceConfig& config() const { return config_; }
  const Clock& clock() const { return *clock_; }

  Result<WorkerProfile> profile(const WorkerId& id) const;

  // Returns the new session token with the profile.
  Result<std::pair<std::string, WorkerProfile>> redeem(std::string_view token, std::string_view username,
                                                       const Demographics& demographics);
  Result<std::vector<std::string>> create_invites(const ViewerContext& admin, const InviteSpec& spec);

  // Counts as a trends visit.
  Result<TrendsReport> personal_trends(const ViewerContext& worker, DateRange range);
  Result<InsightTable> insights(const ViewerContext& viewer, std::string_view dimension,
                                std::string_view breakdown) const;
  // plan.as_of defaults to today when unset.
  Result<Projection> project(const ViewerContext& worker, PlanInput plan) const;
  Result<json> tax_resources(const ViewerContext& worker) const;

  Result<UsageStats> usage_report(const ViewerContext& admin) const;
  Result<StoryStatistics> story_statistics(const ViewerContext& admin) const;
  // Admins export for any audience; policymakers and advocates for their own.
  Result<ExportBundle> export_bundle(const ViewerContext& viewer, Role audience) const;

 private:
  Status count_trends_visit(const WorkerId& id);

  Store store_;
  std::shared_ptr<IdSource> ids_;
  std::shared_ptr<const Clock> clock_;
  ServiceConfig config_;
  StoryFeed feed_;
  Ledger ledger_;
  SessionTable sessions_;
  RateLimiter limiter_;
};

}  // namespace g2g
