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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2g/service/collective.hpp"

namespace g2g {

struct ApiRequest {
  std::string method;  // GET, POST, PATCH, DELETE
  std::string path;    // "/v1/stories/sty_1/like"
  std::map<std::string, std::string> query;
  std::string authorization;  // "Bearer <token>" or empty
  std::string content_type;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  json json_body() const { return json::parse(body, nullptr, false); }
};

// Every route, named "<METHOD> <pattern>" with {id} placeholders.
struct Endpoint {
  std::string_view method;
  std::string_view pattern;
  std::vector<Role> roles;  // empty: no session needed
  bool write = false;       // counts against the write rate limit
};

const std::vector<Endpoint>& endpoints();
// Role-permission matrix lookup; false for unknown endpoints.
bool authorize(Role role, const Endpoint& endpoint);

int http_status(ErrorCode code);
void to_json(json& j, const Finding& f);
void to_json(json& j, const ImportReport& r);
void to_json(json& j, const OwnData& d);
json problem_json(const Error& e);

class Api {
 public:
  explicit Api(Collective& service) : svc_(service) {}
  ApiResponse handle(const ApiRequest& request);

 private:
  Collective& svc_;
};

}  // namespace g2g
