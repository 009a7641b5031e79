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

#include "g2g/service/collective.hpp"

namespace g2g {

namespace {

Status require_role(const ViewerContext& v, std::initializer_list<Role> roles) {
  for (Role r : roles) {
    if (v.role == r) return ok_status();
  }
  return Error(ErrorCode::kForbidden, std::string(enum_name(v.role)) + " accounts cannot do this");
}

}  // namespace

Collective::Collective(Store store, std::shared_ptr<IdSource> ids, std::shared_ptr<const Clock> clock,
                       ServiceConfig config)
    : store_(store),
      ids_(ids),
      clock_(clock),
      config_(std::move(config)),
      feed_(store, ids),
      ledger_(store, ids),
      sessions_(clock, config_.session_idle),
      limiter_(clock, config_.writes_per_minute) {}

Result<WorkerProfile> Collective::profile(const WorkerId& id) const {
  auto rec = store_.get(RecordKind::kProfile, id);
  if (!rec) return Error(ErrorCode::kNotFound, "no such account");
  return rec->payload.get<WorkerProfile>();
}

Result<std::pair<std::string, WorkerProfile>> Collective::redeem(std::string_view token, std::string_view username,
                                                                 const Demographics& demographics) {
  auto r = redeem_invite(store_, *ids_, config_.invite_secret, token, username, demographics);
  if (!r) return r.error();
  return std::pair{sessions_.open(r->profile.worker_id), r->profile};
}

Result<std::vector<std::string>> Collective::create_invites(const ViewerContext& admin, const InviteSpec& spec) {
  if (auto s = require_role(admin, {Role::kAdmin}); !s) return s.error();
  return g2g::create_invites(store_, *ids_, config_.invite_secret, spec, admin.viewer_id);
}

Status Collective::count_trends_visit(const WorkerId& id) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto rec = store_.get(RecordKind::kProfile, id);
    if (!rec) return rec.error();
    Record next = *rec;
    next.version = rec->version + 1;
    next.payload["trends_visits"] = rec->payload.value("trends_visits", std::int64_t{0}) + 1;
    auto put = store_.put(next);
    if (put) return ok_status();
    if (put.error().code != ErrorCode::kVersionConflict) return put.error();
  }
  return Error(ErrorCode::kVersionConflict, "profile is busy");
}

Result<TrendsReport> Collective::personal_trends(const ViewerContext& worker, DateRange range) {
  if (auto s = require_role(worker, {Role::kWorker}); !s) return s.error();
  auto report = g2g::personal_trends(ledger_.list_income(worker), ledger_.list_expenses(worker), range);
  if (!report) return report.error();
  if (auto s = count_trends_visit(worker.viewer_id); !s) return s.error();
  return report;
}

Result<InsightTable> Collective::insights(const ViewerContext& viewer, std::string_view dimension,
                                          std::string_view breakdown) const {
  if (auto s = require_role(viewer, {Role::kWorker, Role::kPolicymaker, Role::kAdvocate}); !s) return s.error();
  auto snap = store_.snapshot();
  Dataset d = load_dataset(store_, snap);
  std::map<WorkerId, std::vector<IncomeEntry>> income;
  for (auto& e : d.income) income[e.worker_id].push_back(std::move(e));
  std::vector<WorkerData> workers;
  for (auto& p : d.profiles) {
    if (p.role != Role::kWorker) continue;
    auto id = p.worker_id;
    workers.push_back(WorkerData{std::move(p), std::move(income[id])});
  }
  return collective_insight(workers, viewer, dimension, breakdown, config_.k);
}

Result<Projection> Collective::project(const ViewerContext& worker, PlanInput plan) const {
  if (auto s = require_role(worker, {Role::kWorker}); !s) return s.error();
  if (!plan.as_of.ok()) plan.as_of = date_of(clock_->now());
  return project_earnings(ledger_.list_income(worker), plan);
}

Result<json> Collective::tax_resources(const ViewerContext& worker) const {
  if (auto s = require_role(worker, {Role::kWorker}); !s) return s.error();
  auto p = profile(worker.viewer_id);
  if (!p) return p.error();
  json out{{"resources", resources_for(config_.tax_resources, *p)}};
  auto next = next_tax_day(config_.tax_calendar, date_of(clock_->now()));
  out["next_tax_day"] = next ? json(*next) : json(nullptr);
  return out;
}

Result<UsageStats> Collective::usage_report(const ViewerContext& admin) const {
  if (auto s = require_role(admin, {Role::kAdmin}); !s) return s.error();
  return g2g::usage_report(load_dataset(store_, store_.snapshot()));
}

Result<StoryStatistics> Collective::story_statistics(const ViewerContext& admin) const {
  if (auto s = require_role(admin, {Role::kAdmin}); !s) return s.error();
  return g2g::story_statistics(load_dataset(store_, store_.snapshot()));
}

Result<ExportBundle> Collective::export_bundle(const ViewerContext& viewer, Role audience) const {
  if (auto s = require_role(viewer, {Role::kAdmin, Role::kPolicymaker, Role::kAdvocate}); !s) return s.error();
  if (viewer.role != Role::kAdmin && viewer.role != audience) {
    return Error(ErrorCode::kForbidden, "exports are limited to your own audience", "audience");
  }
  return build_export(store_, audience, config_.k);
}

}  // namespace g2g
