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

#include <gtest/gtest.h>

#include "g2g/service/api.hpp"
#include "g2g/service/auth.hpp"
#include "g2g/service/collective.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

namespace {

// The role matrix written out independently of the route table.
std::set<Role> oracle_roles(std::string_view method, std::string_view pattern) {
  const std::set<Role> all{Role::kWorker, Role::kPolicymaker, Role::kAdvocate, Role::kAdmin};
  const std::set<Role> readers{Role::kWorker, Role::kPolicymaker, Role::kAdvocate};
  auto starts = [&](std::string_view p) { return pattern.substr(0, p.size()) == p; };
  if (pattern == "auth/redeem-invite") return {};
  if (pattern == "auth/logout" || pattern == "me") return all;
  if (pattern == "admin/export") return {Role::kAdmin, Role::kPolicymaker, Role::kAdvocate};
  if (starts("admin/")) return {Role::kAdmin};
  if (method == "GET" && (starts("stories") || pattern == "insights" || starts("blobs/"))) return readers;
  return {Role::kWorker};
}

std::string concrete(std::string_view pattern) {
  std::string out;
  std::size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] == '{') {
      out += "zz_missing";
      i = pattern.find('}', i) + 1;
    } else {
      out += pattern[i++];
    }
  }
  return out;
}

}  // namespace

TEST(PropAuthorize, EveryRoleEndpointPairMatchesMatrix) {
  Env env;
  ServiceConfig cfg;
  cfg.invite_secret = "s";
  cfg.writes_per_minute = 1000000;
  Collective svc(env.store, env.ids, env.clock, cfg);
  Api api(svc);
  std::map<Role, std::string> tokens;
  for (auto role : all_enum_values<Role>()) {
    auto p = env.add_profile(std::string(enum_name(role)) + "_user", role);
    tokens[role] = svc.sessions().open(p.worker_id);
  }
  std::size_t pairs = 0;
  for (const auto& ep : endpoints()) {
    const auto allowed = oracle_roles(ep.method, ep.pattern);
    EXPECT_EQ(std::set<Role>(ep.roles.begin(), ep.roles.end()), allowed) << ep.method << " " << ep.pattern;
    ApiRequest base;
    base.method = std::string(ep.method);
    base.path = "/v1/" + concrete(ep.pattern);
    base.content_type = "application/json";
    base.body = "{}";

    auto anon = api.handle(base);
    if (allowed.empty()) {
      EXPECT_NE(anon.status, 401) << base.path;
    } else {
      EXPECT_EQ(anon.status, 401) << base.method << " " << base.path;
    }
    for (auto role : all_enum_values<Role>()) {
      ++pairs;
      // Logout ends the session, so it runs on a throwaway one.
      auto token = ep.pattern == "auth/logout" ? svc.sessions().open(svc.sessions().touch(tokens[role]).value())
                                               : tokens[role];
      auto req = base;
      req.authorization = "Bearer " + token;
      auto r = api.handle(req);
      const auto code = r.json_body().is_object() ? r.json_body().value("code", "") : "";
      EXPECT_EQ(authorize(role, ep), allowed.contains(role) || allowed.empty());
      if (allowed.empty() || allowed.contains(role)) {
        EXPECT_NE(code, "FORBIDDEN") << enum_name(role) << " " << base.method << " " << base.path;
        EXPECT_NE(r.status, 401) << enum_name(role) << " " << base.method << " " << base.path;
      } else {
        EXPECT_EQ(r.status, 403) << enum_name(role) << " " << base.method << " " << base.path;
        EXPECT_EQ(code, "FORBIDDEN");
      }
    }
  }
  EXPECT_GE(pairs, 4u * 30u);
}
