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

#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "g2g/admin/export.hpp"
#include "g2g/admin/fixture.hpp"
#include "g2g/admin/tax.hpp"
#include "g2g/analytics/usage.hpp"
#include "g2g/service/api.hpp"
#include "g2g/service/auth.hpp"
#include "g2g/service/collective.hpp"
#include "g2g/service/cron.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

namespace {

constexpr std::string_view kSecret = "test-secret";

struct ServiceEnv : Env {
  explicit ServiceEnv(ServiceConfig cfg = {}) : svc(store, ids, clock, with_secret(std::move(cfg))), api(svc) {
    admin = add_profile("root", Role::kAdmin);
    admin_token = svc.sessions().open(admin.worker_id);
  }
  static ServiceConfig with_secret(ServiceConfig c) {
    c.invite_secret = std::string(kSecret);
    return c;
  }

  ApiResponse call(const std::string& method, const std::string& path, const std::string& token = "",
                   const json& body = nullptr, std::map<std::string, std::string> query = {}) {
    ApiRequest r;
    r.method = method;
    r.path = "/v1/" + path;
    r.query = std::move(query);
    if (!token.empty()) r.authorization = "Bearer " + token;
    if (!body.is_null()) {
      r.content_type = "application/json";
      r.body = body.dump();
    }
    return api.handle(r);
  }

  // Invites and redeems an account through the API; returns its session.
  std::string join(Role role, std::optional<Platform> platform, const std::string& username) {
    json spec{{"role", enum_name(role)}};
    if (platform) spec["platform"] = enum_name(*platform);
    auto inv = call("POST", "admin/invites", admin_token, spec);
    if (inv.status != 201) throw std::runtime_error(inv.body);
    auto token = inv.json_body()["tokens"][0].get<std::string>();
    auto red = call("POST", "auth/redeem-invite", "", json{{"token", token}, {"username", username}});
    if (red.status != 201) throw std::runtime_error(red.body);
    return red.json_body()["session"].get<std::string>();
  }

  Collective svc;
  Api api;
  WorkerProfile admin;
  std::string admin_token;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InviteSpec invite(Role role, std::optional<Platform> p = std::nullopt, int count = 1) {
  InviteSpec s;
  s.role = role;
  s.platform = p;
  s.count = count;
  return s;
}

}  // namespace

TEST(Invites, WorkerRoverGivesOneToken) {
  Env env;
  auto t = create_invites(env.store, *env.ids, kSecret, invite(Role::kWorker, Platform::kRover), "admin");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->size(), 1u);
}

TEST(Invites, PlatformRules) {
  Env env;
  auto p = create_invites(env.store, *env.ids, kSecret, invite(Role::kPolicymaker, Platform::kUber), "admin");
  ASSERT_FALSE(p);
  EXPECT_TRUE(p.error().code == ErrorCode::kPlatformNotAllowedForRole ||
              p.error().has_violation(ErrorCode::kPlatformNotAllowedForRole));
  auto w = create_invites(env.store, *env.ids, kSecret, invite(Role::kWorker), "admin");
  ASSERT_FALSE(w);
  EXPECT_TRUE(w.error().code == ErrorCode::kPlatformRequiredForWorker ||
              w.error().has_violation(ErrorCode::kPlatformRequiredForWorker));
}

TEST(Invites, FiveDistinctTokens) {
  Env env;
  auto t = create_invites(env.store, *env.ids, kSecret, invite(Role::kAdvocate, std::nullopt, 5), "admin");
  ASSERT_TRUE(t);
  EXPECT_EQ(std::set<std::string>(t->begin(), t->end()).size(), 5u);
  // Only a keyed hash of each token is stored.
  auto all = env.store.scan(RecordKind::kInvite, env.store.snapshot());
  ASSERT_EQ(all.size(), 5u);
  for (const auto& rec : all) {
    for (const auto& tok : *t) EXPECT_EQ(rec.payload.dump().find(tok), std::string::npos);
    EXPECT_EQ(rec.id.find((*t)[0]), std::string::npos);
  }
}

TEST(Redeem, SingleUseAndUniqueNames) {
  ServiceEnv env;
  auto t = env.svc.create_invites(Env::viewer(env.admin), invite(Role::kWorker, Platform::kUber, 2));
  ASSERT_TRUE(t);
  auto first = env.call("POST", "auth/redeem-invite", "", json{{"token", (*t)[0]}, {"username", "driver_a"}});
  EXPECT_EQ(first.status, 201);
  EXPECT_FALSE(first.json_body()["session"].get<std::string>().empty());
  EXPECT_EQ(first.json_body()["profile"]["platforms"], json::array({"uber"}));
  auto again = env.call("POST", "auth/redeem-invite", "", json{{"token", (*t)[0]}, {"username", "driver_b"}});
  EXPECT_EQ(again.status, 409);
  EXPECT_EQ(again.json_body()["code"], "TOKEN_USED");
  auto taken = env.call("POST", "auth/redeem-invite", "", json{{"token", (*t)[1]}, {"username", "Driver_A"}});
  EXPECT_EQ(taken.status, 409);
  EXPECT_EQ(taken.json_body()["code"], "USERNAME_TAKEN");
  auto bogus = env.call("POST", "auth/redeem-invite", "", json{{"token", "nope"}, {"username", "driver_c"}});
  EXPECT_EQ(bogus.status, 401);
  EXPECT_EQ(bogus.json_body()["code"], "TOKEN_INVALID");
}

TEST(Redeem, Expired) {
  Env env;
  auto spec = invite(Role::kPolicymaker);
  spec.ttl = std::chrono::hours(1);
  auto t = create_invites(env.store, *env.ids, kSecret, spec, "admin");
  env.clock->advance(std::chrono::hours(2));
  auto r = redeem_invite(env.store, *env.ids, kSecret, (*t)[0], "policy_x", {});
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().code, ErrorCode::kTokenExpired);
  EXPECT_EQ(http_status(ErrorCode::kTokenExpired), 410);
}

TEST(Sessions, IdleExpiry) {
  auto clock = std::make_shared<ManualClock>(at("2024-06-10T00:00:00Z"));
  SessionTable s(clock, std::chrono::hours(24));
  auto tok = s.open("wkr_1");
  EXPECT_EQ(tok.size(), 64u);
  clock->advance(std::chrono::hours(23));
  EXPECT_EQ(s.touch(tok), "wkr_1");
  clock->advance(std::chrono::hours(23));
  EXPECT_EQ(s.touch(tok), "wkr_1");  // refreshed
  clock->advance(std::chrono::hours(25));
  EXPECT_FALSE(s.touch(tok));
  auto other = s.open("wkr_1");
  s.close(other);
  EXPECT_FALSE(s.touch(other));
}

TEST(RateLimit, SlidingMinute) {
  auto clock = std::make_shared<ManualClock>(at("2024-06-10T00:00:00Z"));
  RateLimiter r(clock, 60);
  for (int i = 0; i < 60; ++i) ASSERT_TRUE(r.allow("s"));
  EXPECT_FALSE(r.allow("s"));
  EXPECT_TRUE(r.allow("t"));
  clock->advance(std::chrono::seconds(61));
  EXPECT_TRUE(r.allow("s"));
}

TEST(Api, WriteLimitReturns429) {
  ServiceConfig cfg;
  cfg.writes_per_minute = 3;
  ServiceEnv env(cfg);
  auto w = env.join(Role::kWorker, Platform::kUber, "driver_a");
  json x{{"date", "2024-06-02"}, {"amount", "5.00"}, {"expense_type", "fuel"}};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(env.call("POST", "expenses", w, x).status, 201);
  auto r = env.call("POST", "expenses", w, x);
  EXPECT_EQ(r.status, 429);
  EXPECT_EQ(r.json_body()["code"], "RATE_LIMITED");
  EXPECT_EQ(env.call("GET", "expenses", w).status, 200);
}

TEST(Api, RoleExamples) {
  ServiceEnv env;
  auto pol = env.join(Role::kPolicymaker, std::nullopt, "policy_a");
  auto wkr = env.join(Role::kWorker, Platform::kUber, "driver_a");
  auto income = env.call("POST", "income", pol,
                         json{{"platform", "uber"}, {"work_type", "trip"}, {"date", "2024-06-02"},
                              {"duration_minutes", 30}, {"income_amount", "10.00"}});
  EXPECT_EQ(income.status, 403);
  EXPECT_EQ(income.json_body()["code"], "FORBIDDEN");
  auto insights = env.call("GET", "insights", wkr, nullptr, {{"dimension", "hourly_income_rate"}, {"breakdown", "age"}});
  EXPECT_EQ(insights.status, 200) << insights.body;
  auto anon = env.call("GET", "stories");
  EXPECT_EQ(anon.status, 401);
  EXPECT_EQ(env.call("GET", "stories", "garbage").status, 401);
  EXPECT_EQ(env.call("GET", "no/such/thing", wkr).status, 404);
  EXPECT_EQ(env.call("PUT", "stories", wkr).status, 400);
}

TEST(Api, ProblemDocument) {
  ServiceEnv env;
  auto wkr = env.join(Role::kWorker, Platform::kUber, "driver_a");
  auto r = env.call("POST", "expenses", wkr, json{{"amount", "12.00"}});
  EXPECT_EQ(r.status, 422);
  auto body = r.json_body();
  EXPECT_TRUE(body.contains("code"));
  EXPECT_TRUE(body.contains("message"));
  bool saw_date = false;
  for (const auto& v : body["violations"]) saw_date |= v.value("field", "") == "date";
  EXPECT_TRUE(saw_date) << r.body;
}

TEST(Api, StoryFlowWithRedactionPreview) {
  ServiceEnv env;
  auto wkr = env.join(Role::kWorker, Platform::kUber, "driver_a");
  auto adv = env.join(Role::kAdvocate, std::nullopt, "advocate_a");
  json d{{"story_type", "issue"}, {"title", "Deactivated"}, {"body", "call 412-555-0101"},
         {"tags", {"algorithms"}}, {"audience", {"workers", "advocates"}}, {"display_mode", "anonymous"}};
  auto unack = env.call("POST", "stories", wkr, d);
  EXPECT_EQ(unack.status, 422);
  EXPECT_EQ(unack.json_body()["preview"]["body"], "call [PHONE]");
  d["acknowledge_redaction"] = true;
  auto ok = env.call("POST", "stories", wkr, d);
  ASSERT_EQ(ok.status, 201) << ok.body;
  auto id = ok.json_body()["story_id"].get<std::string>();
  auto seen = env.call("GET", "stories/" + id, adv);
  ASSERT_EQ(seen.status, 200);
  EXPECT_EQ(seen.json_body()["display_name"], "anonymous");
  EXPECT_EQ(seen.body.find("driver_a"), std::string::npos);
  EXPECT_EQ(env.call("POST", "stories/" + id + "/like", adv).status, 403);
  auto like = env.call("POST", "stories/" + id + "/like", wkr);
  EXPECT_EQ(like.status, 200);
  EXPECT_EQ(like.json_body()["like_count"], 1);
  EXPECT_EQ(env.call("DELETE", "stories/" + id, wkr).status, 204);
  EXPECT_EQ(env.call("GET", "stories/" + id, adv).status, 404);
}

// No response to another account ever carries a worker's ledger rows.
TEST(Api, NoForeignLedgerRows) {
  ServiceEnv env;
  auto a = env.join(Role::kWorker, Platform::kUber, "driver_a");
  auto b = env.join(Role::kWorker, Platform::kUber, "driver_b");
  auto pol = env.join(Role::kPolicymaker, std::nullopt, "policy_a");
  auto inc = env.call("POST", "income", a,
                      json{{"platform", "uber"}, {"work_type", "trip"}, {"date", "2024-06-02"}, {"start_time", "07:00"},
                           {"duration_minutes", 37}, {"income_amount", "123.45"}, {"notes", "SECRET-NOTE"}});
  ASSERT_EQ(inc.status, 201) << inc.body;
  auto inc_id = inc.json_body()["entry_id"].get<std::string>();
  auto exp = env.call("POST", "expenses", a, json{{"date", "2024-06-02"}, {"amount", "77.77"}, {"description", "SECRET-EXP"}});
  ASSERT_EQ(exp.status, 201) << exp.body;
  auto exp_id = exp.json_body()["entry_id"].get<std::string>();
  json d{{"story_type", "strategy"}, {"title", "t"}, {"body", "b"}, {"tags", {"fair_pay"}},
         {"audience", {"workers", "policymakers"}}, {"evidence", {inc_id}}};
  ASSERT_EQ(env.call("POST", "stories", a, d).status, 201);

  const std::vector<std::pair<std::string, std::map<std::string, std::string>>> reads{
      {"me", {}}, {"stories", {}}, {"income", {}}, {"expenses", {}}, {"data", {}},
      {"trends/personal", {{"from", "2024-06-01"}, {"to", "2024-06-30"}}},
      {"insights", {{"dimension", "hourly_income_rate"}, {"breakdown", "platform"}}},
      {"tax/resources", {}}, {"income/" + inc_id, {}}, {"expenses/" + exp_id, {}}};
  for (const auto& tok : {b, pol}) {
    for (const auto& [path, q] : reads) {
      auto r = env.call("GET", path, tok, nullptr, q);
      for (const char* needle : {"SECRET-NOTE", "SECRET-EXP", "77.77"}) {
        EXPECT_EQ(r.body.find(needle), std::string::npos) << path;
      }
      EXPECT_EQ(r.body.find(exp_id), std::string::npos) << path;
      EXPECT_EQ(r.body.find(inc_id), std::string::npos) << path;
    }
    EXPECT_NE(env.call("PATCH", "income/" + inc_id, tok, json{{"income_amount", "1.00"}}).status, 200);
    EXPECT_NE(env.call("DELETE", "expenses/" + exp_id, tok).status, 204);
  }
}

TEST(Api, TrendsVisitsAreCounted) {
  ServiceEnv env;
  auto w = env.join(Role::kWorker, Platform::kRover, "sitter_a");
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(env.call("GET", "trends/personal", w, nullptr, {{"from", "2024-06-01"}, {"to", "2024-06-07"}}).status, 200);
  }
  EXPECT_EQ(env.call("GET", "me", w).json_body()["trends_visits"], 3);
}

TEST(Api, CsvUploadIsIdempotent) {
  ServiceEnv env;
  auto w = env.join(Role::kWorker, Platform::kUber, "driver_a");
  ApiRequest r;
  r.method = "POST";
  r.path = "/v1/income/csv";
  r.authorization = "Bearer " + w;
  r.content_type = "text/csv";
  r.body = slurp(data_path("trips_golden.csv"));
  auto first = env.api.handle(r);
  ASSERT_EQ(first.status, 200) << first.body;
  EXPECT_EQ(first.json_body()["accepted"], 3);
  auto second = env.api.handle(r);
  EXPECT_EQ(second.json_body()["duplicates"], 3);
  EXPECT_EQ(env.call("GET", "income", w).json_body()["items"].size(), 3u);
}

TEST(Tax, MinFilterOverShippedCalendar) {
  const auto path = std::filesystem::path(G2G_TEST_DATA).parent_path().parent_path() / "data" / "tax_calendar.txt";
  auto cal = load_tax_calendar(path.string());
  ASSERT_TRUE(cal) << cal.error().message;
  // Oracle: smallest date on or after today, read straight from the file.
  auto oracle = [&](const char* today) {
    std::ifstream in(path);
    std::string line, best;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.size() < 10) continue;
      auto d = line.substr(0, 10);
      if (d >= today && (best.empty() || d < best)) best = d;
    }
    return best;
  };
  for (const char* today : {"2024-01-01", "2024-03-01", "2024-04-15", "2024-04-16", "2025-07-01"}) {
    auto got = next_tax_day(*cal, day(today));
    ASSERT_TRUE(got) << today;
    EXPECT_EQ(format_date(got->date), oracle(today)) << today;
  }
  EXPECT_EQ(format_date(next_tax_day(*cal, day("2024-03-01"))->date), "2024-04-15");
  EXPECT_EQ(format_date(next_tax_day(*cal, day("2024-04-15"))->date), "2024-04-15");
}

TEST(Tax, EmptyCalendar) {
  auto cal = parse_tax_calendar("# nothing yet\n\n");
  ASSERT_TRUE(cal);
  EXPECT_EQ(next_tax_day(*cal, day("2024-03-01")).error().code, ErrorCode::kNoCalendar);
  auto past = parse_tax_calendar("2020-04-15 Q1\n");
  EXPECT_EQ(next_tax_day(*past, day("2024-03-01")).error().code, ErrorCode::kNoCalendar);
  EXPECT_FALSE(parse_tax_calendar("April 15th\n"));
}

TEST(Tax, ResourcesFollowWorkStatusAndPlatform) {
  auto cat = parse_tax_resources(json::parse(R"([
    {"title": "Everyone", "audience": "all", "url": "https://www.irs.gov/a"},
    {"title": "Part time", "audience": "part_time", "body": "Keep receipts."},
    {"title": "Rover", "audience": "all", "platform": "rover", "url": "https://www.irs.gov/b"}])"));
  ASSERT_TRUE(cat) << why(cat.error());
  WorkerProfile p;
  p.platforms = {Platform::kUber};
  p.demographics.work_status = WorkStatus::kFullTime;
  auto r = resources_for(*cat, p);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].title, "Everyone");
  p.platforms.insert(Platform::kRover);
  p.demographics.work_status = WorkStatus::kPartTime;
  EXPECT_EQ(resources_for(*cat, p).size(), 3u);
  auto bad = parse_tax_resources(json::parse(R"([{"audience": "all"}, {"title": "x", "url": "ftp://x"}])"));
  ASSERT_FALSE(bad);
  EXPECT_GE(bad.error().violations.size(), 2u);
}

TEST(Cron, NextRun) {
  auto next = [](const char* spec, const char* after) {
    auto s = parse_cron(spec);
    if (!s) throw std::runtime_error(s.error().message);
    return format_timestamp(next_run(*s, at(after)));
  };
  EXPECT_EQ(next("@hourly", "2024-06-03T10:15:00Z"), "2024-06-03T11:00:00Z");
  EXPECT_EQ(next("@hourly", "2024-06-03T10:00:00Z"), "2024-06-03T11:00:00Z");
  EXPECT_EQ(next("@daily", "2024-06-03T10:15:00Z"), "2024-06-04T00:00:00Z");
  EXPECT_EQ(next("30 2 * * *", "2024-06-03T03:00:00Z"), "2024-06-04T02:30:00Z");
  EXPECT_EQ(next("*/15 * * * *", "2024-06-03T10:16:00Z"), "2024-06-03T10:30:00Z");
  EXPECT_EQ(next("0 0 13 * 5", "2024-06-01T00:00:00Z"), "2024-06-07T00:00:00Z");  // Friday wins
  EXPECT_EQ(next("0 9 * * 1-5", "2024-06-08T12:00:00Z"), "2024-06-10T09:00:00Z");
  EXPECT_EQ(next("0 0 29 2 *", "2024-03-01T00:00:00Z"), "2028-02-29T00:00:00Z");
  for (const char* bad : {"61 * * * *", "* * *", "@yearly-ish", "0 0 0 * *", "1-x * * * *"}) {
    EXPECT_FALSE(parse_cron(bad)) << bad;
  }
}

TEST(Export, EmptyDatabaseWarns) {
  Env env;
  auto b = build_export(env.store, Role::kPolicymaker, 5);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->story_count, 0u);
  EXPECT_TRUE(b->stories_ndjson.empty());
  EXPECT_EQ(b->table_count, 24u);
  EXPECT_EQ(b->manifest["warnings"], json::array({"EMPTY_EXPORT"}));
  TempDir out;
  ASSERT_TRUE(write_export(*b, out.path()));
  EXPECT_TRUE(std::filesystem::exists(out.path() / "manifest.json"));
}

class ExportFixture : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_TRUE(seed_field_study(env.store)); }
  std::set<std::string> exported_ids(const ExportBundle& b) {
    std::set<std::string> ids;
    std::istringstream in(b.stories_ndjson);
    std::string line;
    while (std::getline(in, line)) ids.insert(json::parse(line).at("story_id").get<std::string>());
    return ids;
  }
  // Oracle: every stored story whose audience admits the role.
  std::set<std::string> brute(Role role) {
    std::set<std::string> ids;
    const auto data = load_dataset(env.store, env.store.snapshot());
    for (const auto& s : data.stories) {
      if ((role == Role::kWorker && s.audience.workers) || (role == Role::kPolicymaker && s.audience.policymakers) ||
          (role == Role::kAdvocate && s.audience.advocates)) {
        ids.insert(s.story_id);
      }
    }
    return ids;
  }
  Env env;
};

TEST_F(ExportFixture, WorkersGetTwentySix) {
  auto b = build_export(env.store, Role::kWorker, 5);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->story_count, 26u);
  EXPECT_EQ(exported_ids(*b), brute(Role::kWorker));
}

TEST_F(ExportFixture, EveryAudienceMatchesBruteForce) {
  for (auto role : {Role::kWorker, Role::kPolicymaker, Role::kAdvocate}) {
    auto b = build_export(env.store, role, 5);
    ASSERT_TRUE(b);
    EXPECT_EQ(exported_ids(*b), brute(role)) << enum_name(role);
    EXPECT_EQ(b->story_count, brute(role).size());
    for (const char* leak : {"income_amount\":", "worker_id", "wkr_", "original_"}) {
      EXPECT_EQ(b->stories_ndjson.find(leak), std::string::npos) << leak;
    }
  }
}

TEST_F(ExportFixture, InsightsAreSuppressed) {
  auto b = build_export(env.store, Role::kPolicymaker, 5);
  std::istringstream in(b->insights_ndjson);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    for (const auto& c : json::parse(line).at("cells")) {
      if (!c.at("suppressed").get<bool>()) EXPECT_GE(c.at("count").get<int>(), 5);
      else EXPECT_FALSE(c.contains("value"));
    }
  }
  EXPECT_EQ(n, 24u);
}

TEST(Seed, DeterministicAndRefusesSecondSeed) {
  Env a, b;
  ASSERT_TRUE(seed_field_study(a.store));
  ASSERT_TRUE(seed_field_study(b.store));
  auto second = seed_field_study(a.store);
  ASSERT_FALSE(second);
  EXPECT_EQ(second.error().code, ErrorCode::kNonEmptyDb);
  for (auto role : {Role::kWorker, Role::kPolicymaker, Role::kAdvocate}) {
    auto x = build_export(a.store, role, 5);
    auto y = build_export(b.store, role, 5);
    TempDir dx, dy;
    ASSERT_TRUE(write_export(*x, dx.path()));
    ASSERT_TRUE(write_export(*y, dy.path()));
    for (const auto& f : std::filesystem::directory_iterator(dx.path())) {
      EXPECT_EQ(slurp(f.path()), slurp(dy.path() / f.path().filename())) << f.path().filename();
    }
  }
  EXPECT_EQ(seed_fixture(a.store, "nope").error().code, ErrorCode::kInvalidValue);
}

TEST(Collective, ExportPermissions) {
  ServiceEnv env;
  auto pol = env.join(Role::kPolicymaker, std::nullopt, "policy_a");
  auto wkr = env.join(Role::kWorker, Platform::kUber, "driver_a");
  EXPECT_EQ(env.call("GET", "admin/export", pol, nullptr, {{"audience", "policymakers"}}).status, 200);
  EXPECT_EQ(env.call("GET", "admin/export", pol, nullptr, {{"audience", "advocates"}}).status, 403);
  EXPECT_EQ(env.call("GET", "admin/export", wkr, nullptr, {{"audience", "workers"}}).status, 403);
  EXPECT_EQ(env.call("GET", "admin/export", env.admin_token, nullptr, {{"audience", "workers"}}).status, 200);
  EXPECT_EQ(env.call("GET", "admin/usage-report", pol).status, 403);
  EXPECT_EQ(env.call("GET", "admin/usage-report", env.admin_token).status, 200);
}
