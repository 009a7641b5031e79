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

#include "g2g/service/api.hpp"

#include <charconv>

#include "g2g/storage/blobs.hpp"

namespace g2g {

namespace {

constexpr Role W = Role::kWorker;
constexpr Role P = Role::kPolicymaker;
constexpr Role A = Role::kAdvocate;
constexpr Role ADM = Role::kAdmin;

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> out;
  while (!path.empty()) {
    auto slash = path.find('/');
    auto part = path.substr(0, slash);
    if (!part.empty()) out.push_back(part);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return out;
}

// Matches "stories/{id}/like" against segments, capturing placeholders.
bool match(std::string_view pattern, const std::vector<std::string_view>& segs,
           std::vector<std::string>& captures) {
  auto pat = split_path(pattern);
  if (pat.size() != segs.size()) return false;
  std::vector<std::string> caps;
  for (std::size_t i = 0; i < pat.size(); ++i) {
    if (pat[i].front() == '{') caps.emplace_back(segs[i]);
    else if (pat[i] != segs[i]) return false;
  }
  captures = std::move(caps);
  return true;
}

ApiResponse reply(int status, const json& body) {
  return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse fail(const Error& e) { return reply(http_status(e.code), problem_json(e)); }

ApiResponse no_content() { return ApiResponse{204, "application/json", ""}; }

Result<json> parse_body(const ApiRequest& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded()) return Error(ErrorCode::kBadRequest, "request body is not valid JSON");
  if (!j.is_object()) return Error(ErrorCode::kBadRequest, "request body must be a JSON object");
  return j;
}

// Pulls the acknowledge flag out of a story payload.
bool take_ack(json& body) {
  bool ack = false;
  if (auto it = body.find("acknowledge_redaction"); it != body.end()) {
    ack = it->is_boolean() && it->get<bool>();
    body.erase(it);
  }
  return ack;
}

std::optional<std::string> query(const ApiRequest& req, const std::string& key) {
  auto it = req.query.find(key);
  if (it == req.query.end()) return std::nullopt;
  return it->second;
}

Result<FeedQuery> feed_query(const ApiRequest& req) {
  FeedQuery q;
  if (auto v = query(req, "story_type")) {
    auto t = parse_enum<StoryType>(*v);
    if (!t) return Error(ErrorCode::kInvalidValue, "unknown story_type '" + *v + "'", "story_type");
    q.story_type = *t;
  }
  if (auto v = query(req, "platform")) {
    auto p = parse_enum<Platform>(*v);
    if (!p) return Error(ErrorCode::kInvalidValue, "unknown platform '" + *v + "'", "platform");
    q.platform = *p;
  }
  if (auto v = query(req, "tag")) {
    auto t = parse_enum<Tag>(*v);
    if (!t) return Error(ErrorCode::kUnknownTag, "unknown tag '" + *v + "'", "tag");
    q.tag = *t;
  }
  if (auto v = query(req, "cursor")) q.cursor = *v;
  if (auto v = query(req, "limit")) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
    if (ec != std::errc() || ptr != v->data() + v->size() || n < 1 || n > 100) {
      return Error(ErrorCode::kInvalidValue, "limit must be 1..100", "limit");
    }
    q.limit = n;
  }
  return q;
}

Result<PlanInput> plan_input(const json& body) {
  PlanInput plan;
  try {
    if (!body.contains("slots") || !body["slots"].is_array()) {
      return Error(ErrorCode::kEmptyPlan, "slots must be a non-empty array", "slots");
    }
    for (const auto& s : body["slots"]) plan.slots.push_back(PlanSlot{s.at("weekday").get<int>(), s.at("hour").get<int>()});
    if (body.contains("lookback_weeks")) plan.lookback_weeks = body["lookback_weeks"].get<int>();
    if (body.contains("as_of")) {
      auto d = parse_date(body["as_of"].get<std::string>());
      if (!d) return Error(ErrorCode::kInvalidValue, d.error().message, "as_of");
      plan.as_of = *d;
    }
  } catch (const json::exception& e) {
    return Error(ErrorCode::kBadRequest, std::string("malformed plan: ") + e.what());
  }
  return plan;
}

}  // namespace

void to_json(json& j, const Finding& f) {
  j = json{{"kind", enum_name(f.kind)}, {"begin", f.begin}, {"end", f.end}};
}

void to_json(json& j, const ImportReport& r) {
  json rejected = json::array();
  for (const auto& row : r.rejected) {
    json e = problem_json(row.error);
    e["line"] = row.line;
    rejected.push_back(e);
  }
  j = json{{"rows", r.rows()},
           {"accepted", r.accepted},
           {"duplicates", r.duplicates},
           {"rejected", rejected},
           {"source_digest", r.source_digest}};
}

void to_json(json& j, const OwnData& d) {
  j = json{{"stories", d.stories}, {"income", d.income}, {"expenses", d.expenses}};
}

const std::vector<Endpoint>& endpoints() {
  static const std::vector<Endpoint> kEndpoints{
      {"POST", "auth/redeem-invite", {}, true},
      {"POST", "auth/logout", {W, P, A, ADM}, false},
      {"GET", "me", {W, P, A, ADM}, false},
      {"GET", "stories", {W, P, A}, false},
      {"POST", "stories", {W}, true},
      {"GET", "stories/{id}", {W, P, A}, false},
      {"PATCH", "stories/{id}", {W}, true},
      {"DELETE", "stories/{id}", {W}, true},
      {"POST", "stories/{id}/like", {W}, true},
      {"DELETE", "stories/{id}/like", {W}, true},
      {"POST", "stories/{id}/evidence", {W}, true},
      {"GET", "income", {W}, false},
      {"POST", "income", {W}, true},
      {"POST", "income/csv", {W}, true},
      {"PATCH", "income/{id}", {W}, true},
      {"DELETE", "income/{id}", {W}, true},
      {"GET", "expenses", {W}, false},
      {"POST", "expenses", {W}, true},
      {"PATCH", "expenses/{id}", {W}, true},
      {"DELETE", "expenses/{id}", {W}, true},
      {"GET", "data", {W}, false},
      {"GET", "trends/personal", {W}, false},
      {"GET", "insights", {W, P, A}, false},
      {"POST", "planner/project", {W}, false},
      {"GET", "tax/resources", {W}, false},
      {"POST", "blobs", {W}, true},
      {"GET", "blobs/{id}", {W, P, A}, false},
      {"POST", "admin/invites", {ADM}, true},
      {"GET", "admin/usage-report", {ADM}, false},
      {"GET", "admin/story-statistics", {ADM}, false},
      {"GET", "admin/export", {ADM, P, A}, false},
  };
  return kEndpoints;
}

bool authorize(Role role, const Endpoint& endpoint) {
  if (endpoint.roles.empty()) return true;
  return std::find(endpoint.roles.begin(), endpoint.roles.end(), role) != endpoint.roles.end();
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest:
    case ErrorCode::kInvalidCursor:
      return 400;
    case ErrorCode::kUnauthenticated:
    case ErrorCode::kTokenInvalid:
      return 401;
    case ErrorCode::kForbidden:
    case ErrorCode::kRoleCannotLike:
    case ErrorCode::kUnauthorizedActor:
    case ErrorCode::kOwnershipMismatch:
      return 403;
    case ErrorCode::kNotFound:
    case ErrorCode::kNotVisible:
      return 404;
    case ErrorCode::kVersionConflict:
    case ErrorCode::kTokenUsed:
    case ErrorCode::kUsernameTaken:
    case ErrorCode::kNonEmptyDb:
    case ErrorCode::kImmutableKind:
      return 409;
    case ErrorCode::kTokenExpired:
      return 410;
    case ErrorCode::kRateLimited:
      return 429;
    case ErrorCode::kIo:
    case ErrorCode::kInternal:
      return 500;
    default:
      return 422;
  }
}

json problem_json(const Error& e) {
  json j{{"code", error_code_name(e.code)}, {"message", e.message}};
  if (!e.field.empty()) j["field"] = e.field;
  if (!e.violations.empty()) {
    json v = json::array();
    for (const auto& x : e.violations) v.push_back(problem_json(x));
    j["violations"] = v;
  }
  return j;
}

ApiResponse Api::handle(const ApiRequest& req) {
  auto segs = split_path(req.path);
  if (segs.empty() || segs.front() != "v1") return fail(Error(ErrorCode::kNotFound, "no such endpoint"));
  segs.erase(segs.begin());

  const Endpoint* ep = nullptr;
  bool path_known = false;
  std::vector<std::string> cap;
  for (const auto& e : endpoints()) {
    std::vector<std::string> c;
    if (!match(e.pattern, segs, c)) continue;
    path_known = true;
    if (e.method == req.method) {
      ep = &e;
      cap = std::move(c);
      break;
    }
  }
  if (!ep) {
    return fail(Error(path_known ? ErrorCode::kBadRequest : ErrorCode::kNotFound,
                      path_known ? "method not allowed" : "no such endpoint"));
  }

  // Authentication and authorization.
  ViewerContext viewer;
  std::string token;
  if (!ep->roles.empty()) {
    constexpr std::string_view kBearer = "Bearer ";
    if (req.authorization.rfind(kBearer, 0) != 0) {
      return fail(Error(ErrorCode::kUnauthenticated, "a bearer session token is required"));
    }
    token = req.authorization.substr(kBearer.size());
    auto who = svc_.sessions().touch(token);
    if (!who) return fail(Error(ErrorCode::kUnauthenticated, "session is unknown or expired"));
    auto profile = svc_.profile(*who);
    if (!profile) return fail(Error(ErrorCode::kUnauthenticated, "account no longer exists"));
    viewer = viewer_of(*profile);
    if (!authorize(viewer.role, *ep)) {
      return fail(Error(ErrorCode::kForbidden, std::string(enum_name(viewer.role)) + " accounts cannot use " +
                                                   std::string(ep->method) + " /v1/" + std::string(ep->pattern)));
    }
    if (ep->write && !svc_.limiter().allow(token)) {
      return fail(Error(ErrorCode::kRateLimited, "too many writes; try again in a minute"));
    }
  }

  const std::string route = std::string(ep->method) + " " + std::string(ep->pattern);
  const std::string id = cap.empty() ? std::string() : cap.front();
  const bool takes_json = route != "POST income/csv" && route != "POST blobs";
  json body = json::object();
  if (takes_json) {
    auto b = parse_body(req);
    if (!b) return fail(b.error());
    body = std::move(*b);
  }

  try {
    if (route == "POST auth/redeem-invite") {
      if (!body.contains("token") || !body["token"].is_string()) {
        return fail(Error(ErrorCode::kMissingRequired, "token is required", "token"));
      }
      if (!body.contains("username") || !body["username"].is_string()) {
        return fail(Error(ErrorCode::kMissingRequired, "username is required", "username"));
      }
      Demographics demo;
      if (body.contains("demographics")) {
        try {
          demo = body["demographics"].get<Demographics>();
        } catch (const std::exception& e) {
          return fail(Error(ErrorCode::kInvalidValue, e.what(), "demographics"));
        }
      }
      auto r = svc_.redeem(body["token"].get<std::string>(), body["username"].get<std::string>(), demo);
      if (!r) return fail(r.error());
      return reply(201, json{{"session", r->first}, {"profile", r->second}});
    }
    if (route == "POST auth/logout") {
      svc_.sessions().close(token);
      return no_content();
    }
    if (route == "GET me") {
      auto p = svc_.profile(viewer.viewer_id);
      if (!p) return fail(p.error());
      return reply(200, *p);
    }

    if (route == "GET stories") {
      auto q = feed_query(req);
      if (!q) return fail(q.error());
      auto page = svc_.feed().list_feed(viewer, *q);
      if (!page) return fail(page.error());
      json j{{"items", page->items}};
      j["next_cursor"] = page->next_cursor.empty() ? json(nullptr) : json(page->next_cursor);
      return reply(200, j);
    }
    if (route == "POST stories") {
      bool ack = take_ack(body);
      auto r = svc_.feed().post_story(viewer, body, ack);
      if (!r) {
        json p = problem_json(r.error());
        if (r.error().code == ErrorCode::kUnacknowledgedRedaction) {
          p["preview"] = {{"title", redact_text(body.value("title", "")).redacted_text},
                          {"body", redact_text(body.value("body", "")).redacted_text}};
        }
        return reply(http_status(r.error().code), p);
      }
      auto story = svc_.feed().get_story(viewer, r->story_id);
      if (!story) return fail(story.error());
      return reply(201, json{{"story_id", r->story_id},
                             {"findings", {{"title", r->title_findings}, {"body", r->body_findings}}},
                             {"story", *story}});
    }
    if (route == "GET stories/{id}") {
      auto s = svc_.feed().get_story(viewer, id);
      if (!s) return fail(s.error());
      return reply(200, *s);
    }
    if (route == "PATCH stories/{id}") {
      bool ack = take_ack(body);
      auto s = svc_.feed().edit_story(viewer, id, body, ack);
      if (!s) return fail(s.error());
      return reply(200, *s);
    }
    if (route == "DELETE stories/{id}") {
      auto s = svc_.feed().delete_story(viewer, id);
      if (!s) return fail(s.error());
      return no_content();
    }
    if (route == "POST stories/{id}/like" || route == "DELETE stories/{id}/like") {
      auto n = req.method == "POST" ? svc_.feed().like_story(viewer, id) : svc_.feed().unlike_story(viewer, id);
      if (!n) return fail(n.error());
      return reply(200, json{{"story_id", id}, {"like_count", *n}, {"liked", req.method == "POST"}});
    }
    if (route == "POST stories/{id}/evidence") {
      if (!body.contains("entries") || !body["entries"].is_array()) {
        return fail(Error(ErrorCode::kMissingRequired, "entries must be an array of income ids", "entries"));
      }
      auto s = svc_.feed().attach_evidence(viewer, id, body["entries"].get<std::vector<EntryId>>());
      if (!s) return fail(s.error());
      return reply(200, *s);
    }

    if (route == "GET income") return reply(200, json{{"items", svc_.ledger().list_income(viewer)}});
    if (route == "POST income") {
      auto e = svc_.ledger().create_income(viewer, body);
      if (!e) return fail(e.error());
      return reply(201, *e);
    }
    if (route == "POST income/csv") {
      CsvMode mode = query(req, "mode").value_or("strict") == "lenient" ? CsvMode::kLenient : CsvMode::kStrict;
      auto r = svc_.ledger().import_csv(viewer, req.body, mode);
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "PATCH income/{id}") {
      auto e = svc_.ledger().update_income(viewer, id, body);
      if (!e) return fail(e.error());
      return reply(200, *e);
    }
    if (route == "DELETE income/{id}") {
      auto s = svc_.ledger().delete_income(viewer, id);
      if (!s) return fail(s.error());
      return no_content();
    }
    if (route == "GET expenses") return reply(200, json{{"items", svc_.ledger().list_expenses(viewer)}});
    if (route == "POST expenses") {
      auto e = svc_.ledger().create_expense(viewer, body);
      if (!e) return fail(e.error());
      return reply(201, *e);
    }
    if (route == "PATCH expenses/{id}") {
      auto e = svc_.ledger().update_expense(viewer, id, body);
      if (!e) return fail(e.error());
      return reply(200, *e);
    }
    if (route == "DELETE expenses/{id}") {
      auto s = svc_.ledger().delete_expense(viewer, id);
      if (!s) return fail(s.error());
      return no_content();
    }
    if (route == "GET data") {
      auto d = svc_.feed().manage_data(viewer);
      if (!d) return fail(d.error());
      return reply(200, *d);
    }

    if (route == "GET trends/personal") {
      auto from = query(req, "from");
      auto to = query(req, "to");
      if (!from || !to) return fail(Error(ErrorCode::kMissingRequired, "from and to are required", from ? "to" : "from"));
      auto f = parse_date(*from);
      if (!f) return fail(Error(ErrorCode::kInvalidValue, f.error().message, "from"));
      auto t = parse_date(*to);
      if (!t) return fail(Error(ErrorCode::kInvalidValue, t.error().message, "to"));
      auto r = svc_.personal_trends(viewer, DateRange{*f, *t});
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "GET insights") {
      auto r = svc_.insights(viewer, query(req, "dimension").value_or(""), query(req, "breakdown").value_or(""));
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "POST planner/project") {
      auto plan = plan_input(body);
      if (!plan) return fail(plan.error());
      auto r = svc_.project(viewer, *plan);
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "GET tax/resources") {
      auto r = svc_.tax_resources(viewer);
      if (!r) return fail(r.error());
      return reply(200, *r);
    }

    if (route == "POST blobs") {
      auto b = svc_.ledger().upload_image(viewer, req.body, req.content_type);
      if (!b) return fail(b.error());
      return reply(201, json{{"digest", b->digest}, {"content_type", b->content_type}, {"size", b->size}});
    }
    if (route == "GET blobs/{id}") {
      // Readable by the uploader, or by anyone who can see a story showing it.
      auto snap = svc_.store().snapshot();
      std::string content_type;
      if (auto own = svc_.store().get(RecordKind::kBlob, blob_record_id(viewer.viewer_id, id), snap)) {
        content_type = own->payload.value("content_type", "application/octet-stream");
      } else {
        for (const auto& rec : svc_.store().scan(RecordKind::kStory, snap)) {
          auto s = rec.payload.get<Story>();
          if (s.media && s.media->blob_digest == id && can_view(s, viewer)) {
            content_type = s.media->content_type;
            break;
          }
        }
      }
      if (content_type.empty()) return fail(Error(ErrorCode::kNotFound, "no such blob"));
      auto bytes = BlobStore(BlobStore::root_for(svc_.store().path())).read(id);
      if (!bytes) return fail(bytes.error());
      return ApiResponse{200, content_type, std::move(*bytes)};
    }

    if (route == "POST admin/invites") {
      InviteSpec spec;
      auto role = parse_enum<Role>(body.value("role", ""));
      if (!role) return fail(Error(ErrorCode::kInvalidValue, "role must be worker, policymaker, advocate or admin", "role"));
      spec.role = *role;
      if (body.contains("platform") && !body["platform"].is_null()) {
        auto p = parse_enum<Platform>(body["platform"].get<std::string>());
        if (!p) return fail(Error(ErrorCode::kInvalidValue, "unknown platform", "platform"));
        spec.platform = *p;
      }
      spec.count = body.value("count", 1);
      if (body.contains("ttl_days")) spec.ttl = std::chrono::hours(24 * body["ttl_days"].get<int>());
      auto tokens = svc_.create_invites(viewer, spec);
      if (!tokens) return fail(tokens.error());
      return reply(201, json{{"tokens", *tokens}});
    }
    if (route == "GET admin/usage-report") {
      auto r = svc_.usage_report(viewer);
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "GET admin/story-statistics") {
      auto r = svc_.story_statistics(viewer);
      if (!r) return fail(r.error());
      return reply(200, *r);
    }
    if (route == "GET admin/export") {
      auto aud = parse_export_audience(query(req, "audience").value_or(""));
      if (!aud) return fail(aud.error());
      auto b = svc_.export_bundle(viewer, *aud);
      if (!b) return fail(b.error());
      auto lines = [](const std::string& nd) {
        json arr = json::array();
        std::size_t pos = 0;
        while (pos < nd.size()) {
          auto nl = nd.find('\n', pos);
          arr.push_back(json::parse(nd.substr(pos, nl - pos)));
          pos = nl + 1;
        }
        return arr;
      };
      return reply(200, json{{"manifest", b->manifest},
                             {"stories", lines(b->stories_ndjson)},
                             {"insights", lines(b->insights_ndjson)}});
    }
  } catch (const json::exception& e) {
    return fail(Error(ErrorCode::kBadRequest, std::string("malformed request: ") + e.what()));
  }
  return fail(Error(ErrorCode::kInternal, "route has no handler: " + route));
}

}  // namespace g2g
