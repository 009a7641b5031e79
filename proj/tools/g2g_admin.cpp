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

// Operator tool: invites, fixture seeding, exports, reports, tax days.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "g2g/admin/export.hpp"
#include "g2g/admin/fixture.hpp"
#include "g2g/admin/tax.hpp"
#include "g2g/analytics/usage.hpp"
#include "g2g/service/auth.hpp"
#include "g2g/service/ledger.hpp"

using namespace g2g;

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

int die(const Error& e) {
  std::cerr << "error: " << error_code_name(e.code) << ": " << e.message;
  if (!e.field.empty()) std::cerr << " (" << e.field << ")";
  std::cerr << "\n";
  for (const auto& v : e.violations) std::cerr << "  " << error_code_name(v.code) << ": " << v.message << "\n";
  return 1;
}

// Up to two decimals, trailing zeros dropped.
std::string num(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << std::round(v * 100.0) / 100.0;
  std::string s = ss.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

void print_usage(const UsageStats& u) {
  std::cout << "active users: " << u.users << "\n";
  std::cout << std::left << std::setw(18) << "metric" << std::setw(10) << "average" << std::setw(10) << "median"
            << std::setw(10) << "max" << "total\n";
  for (auto m : all_enum_values<UsageMetric>()) {
    const auto& s = u.overall.at(m);
    std::cout << std::setw(18) << enum_name(m) << std::setw(10) << num(s.mean) << std::setw(10) << num(s.median)
              << std::setw(10) << num(s.max) << num(s.total) << "\n";
  }
}

void print_story_statistics(const StoryStatistics& s) {
  auto row = [](std::string_view label, const std::map<Platform, std::int64_t>& m) {
    std::int64_t total = 0;
    std::cout << std::left << std::setw(42) << label;
    for (auto p : all_enum_values<Platform>()) {
      auto it = m.find(p);
      std::int64_t v = it == m.end() ? 0 : it->second;
      total += v;
      std::cout << std::setw(8) << v;
    }
    std::cout << total << "\n";
  };
  std::cout << std::left << std::setw(42) << "" << std::setw(8) << "uber" << std::setw(8) << "rover" << std::setw(8)
            << "upwork" << "total\n";
  row("authored", s.authored);
  std::cout << std::setw(42) << "mean per user";
  for (auto p : all_enum_values<Platform>()) {
    auto it = s.mean_per_user.find(p);
    std::cout << std::setw(8) << num(it == s.mean_per_user.end() ? 0 : it->second);
  }
  std::cout << "\n";
  for (auto p : all_enum_values<Platform>()) {
    auto it = s.likes.find(p);
    row("likes from " + std::string(enum_name(p)), it == s.likes.end() ? std::map<Platform, std::int64_t>{} : it->second);
  }
  for (const auto& [label, m] : s.audience) row("shared to " + label, m);
  for (const auto& [type, m] : s.types) row(enum_name(type), m);
  std::cout << "\n" << std::setw(16) << "tag" << std::setw(8) << "usage" << std::setw(10) << "strategy" << std::setw(8)
            << "issue" << "liked\n";
  for (const auto& [tag, r] : s.tags) {
    auto get = [](const auto& m, auto k) {
      auto it = m.find(k);
      return it == m.end() ? std::int64_t{0} : it->second;
    };
    std::cout << std::setw(16) << enum_name(tag) << std::setw(8) << r.total_usage << std::setw(10)
              << get(r.by_type, StoryType::kStrategy) << std::setw(8) << get(r.by_type, StoryType::kIssue)
              << r.total_liked << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2g-admin: operator tool for a worker data-sharing collective"};
  app.require_subcommand(1);
  std::string db = env_or("G2G_DB_PATH", "g2g.db");
  app.add_option("--db", db, "database path (default $G2G_DB_PATH or g2g.db)");

  auto* invite = app.add_subcommand("invite", "create single-use invite tokens");
  std::string role_s, platform_s;
  int count = 1, ttl_days = 14;
  invite->add_option("--role", role_s, "worker | policymaker | advocate | admin")->required();
  invite->add_option("--platform", platform_s, "uber | rover | upwork (workers only)");
  invite->add_option("--count", count, "number of tokens")->check(CLI::Range(1, 1000));
  invite->add_option("--ttl-days", ttl_days, "days until the tokens expire")->check(CLI::Range(1, 365));

  auto* seed = app.add_subcommand("seed", "populate an empty database from a fixture");
  std::string fixture;
  seed->add_option("--fixture", fixture, "fixture name (field-study)")->required();

  auto* exp = app.add_subcommand("export", "write an audience-scoped export bundle");
  std::string audience_s, out_dir;
  int k = std::atoi(env_or("G2G_K_THRESHOLD", "5").c_str());
  exp->add_option("--audience", audience_s, "workers | policymakers | advocates")->required();
  exp->add_option("--out", out_dir, "output directory")->required();
  exp->add_option("--k", k, "suppression threshold (default $G2G_K_THRESHOLD or 5)");

  bool as_json = false;
  auto* usage = app.add_subcommand("usage-report", "descriptive statistics on stories, uploads and visits");
  usage->add_flag("--json", as_json, "print JSON");
  auto* stats = app.add_subcommand("story-statistics", "story counts by platform, audience, type and tag");
  stats->add_flag("--json", as_json, "print JSON");

  auto* tax = app.add_subcommand("tax-days", "next filing deadline from the tax calendar");
  std::string calendar = env_or("G2G_TAX_CALENDAR", "data/tax_calendar.txt");
  std::string today_s;
  tax->add_option("--calendar", calendar, "calendar file (default $G2G_TAX_CALENDAR)");
  tax->add_option("--today", today_s, "YYYY-MM-DD (default: today, UTC)");

  auto* sweep = app.add_subcommand("sweep", "hard-delete records past their retention date");

  CLI11_PARSE(app, argc, argv);

  if (*tax) {
    auto cal = load_tax_calendar(calendar);
    if (!cal) return die(cal.error());
    Date today = date_of(SystemClock().now());
    if (!today_s.empty()) {
      auto d = parse_date(today_s);
      if (!d) return die(d.error());
      today = *d;
    }
    auto next = next_tax_day(*cal, today);
    if (!next) return die(next.error());
    std::cout << format_date(next->date) << "  " << next->label << "\n";
    return 0;
  }

  auto store = Store::open(db);
  if (!store) return die(store.error());

  if (*invite) {
    InviteSpec spec;
    auto role = parse_enum<Role>(role_s);
    if (!role) return die(Error(ErrorCode::kInvalidValue, "unknown role '" + role_s + "'", "role"));
    spec.role = *role;
    if (!platform_s.empty()) {
      auto p = parse_enum<Platform>(platform_s);
      if (!p) return die(Error(ErrorCode::kInvalidValue, "unknown platform '" + platform_s + "'", "platform"));
      spec.platform = *p;
    }
    spec.count = count;
    spec.ttl = std::chrono::hours(24 * ttl_days);
    RandomIds ids;
    auto tokens = create_invites(*store, ids, env_or("G2G_INVITE_SECRET", ""), spec, "admin-cli");
    if (!tokens) return die(tokens.error());
    for (const auto& t : *tokens) std::cout << t << "\n";
    return 0;
  }
  if (*seed) {
    if (auto s = seed_fixture(*store, fixture); !s) return die(s.error());
    std::cout << "seeded " << fixture << " into " << db << "\n";
    return 0;
  }
  if (*exp) {
    auto audience = parse_export_audience(audience_s);
    if (!audience) return die(audience.error());
    auto bundle = build_export(*store, *audience, k);
    if (!bundle) return die(bundle.error());
    if (auto s = write_export(*bundle, out_dir); !s) return die(s.error());
    for (const auto& w : bundle->manifest["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
    std::cout << bundle->story_count << " stories, " << bundle->table_count << " insight tables -> " << out_dir << "\n";
    return 0;
  }
  if (*usage || *stats) {
    Dataset d = load_dataset(*store, store->snapshot());
    if (*usage) {
      auto u = usage_report(d);
      if (as_json) std::cout << json(u).dump(2) << "\n";
      else print_usage(u);
    } else {
      auto s = story_statistics(d);
      if (as_json) std::cout << json(s).dump(2) << "\n";
      else print_story_statistics(s);
    }
    return 0;
  }
  if (*sweep) {
    Ledger ledger(*store, std::make_shared<RandomIds>());
    std::cout << ledger.sweep_expired() << " expired records deleted\n";
    return 0;
  }
  return 0;
}
