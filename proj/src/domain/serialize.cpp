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

#include "g2g/domain/serialize.hpp"

namespace g2g {

void to_json(json& j, const Money& m) { j = m.to_string(); }

void from_json(const json& j, Money& m) {
  if (j.is_number_integer()) {
    m = Money::from_cents(j.get<std::int64_t>() * 100);
    return;
  }
  if (j.is_number()) {
    m = Money::from_double(j.get<double>());
    return;
  }
  auto parsed = Money::parse(j.get<std::string>());
  if (!parsed) throw std::invalid_argument(parsed.error().message);
  m = *parsed;
}

json date_to_json(Date d) { return format_date(d); }

Date date_from_json(const json& j) {
  auto d = parse_date(j.get<std::string>());
  if (!d) throw std::invalid_argument(d.error().message);
  return *d;
}

json timestamp_to_json(Timestamp t) { return format_timestamp(t); }

Timestamp timestamp_from_json(const json& j) {
  auto t = parse_timestamp(j.get<std::string>());
  if (!t) throw std::invalid_argument(t.error().message);
  return *t;
}

namespace {

void put_optional_ts(json& j, const char* key, const std::optional<Timestamp>& t) {
  if (t) j[key] = timestamp_to_json(*t);
}

std::optional<Timestamp> get_optional_ts(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return timestamp_from_json(*it);
}

}  // namespace

void to_json(json& j, const Demographics& d) {
  j = json::object();
  put_optional(j, "age_band", d.age_band);
  put_optional(j, "gender", d.gender);
  put_optional(j, "ethnicity", d.ethnicity);
  put_optional(j, "tenure_band", d.tenure_band);
  put_optional(j, "education", d.education);
  put_optional(j, "household_income_band", d.household_income_band);
  put_optional(j, "work_status", d.work_status);
}

void from_json(const json& j, Demographics& d) {
  get_optional(j, "age_band", d.age_band);
  get_optional(j, "gender", d.gender);
  get_optional(j, "ethnicity", d.ethnicity);
  get_optional(j, "tenure_band", d.tenure_band);
  get_optional(j, "education", d.education);
  get_optional(j, "household_income_band", d.household_income_band);
  get_optional(j, "work_status", d.work_status);
}

void to_json(json& j, const WorkerProfile& p) {
  j = json{{"worker_id", p.worker_id},
           {"username", p.username},
           {"role", p.role},
           {"platforms", p.platforms},
           {"demographics", p.demographics},
           {"created_at", timestamp_to_json(p.created_at)},
           {"trends_visits", p.trends_visits}};
  put_optional(j, "rating_snapshot", p.rating_snapshot);
}

void from_json(const json& j, WorkerProfile& p) {
  j.at("worker_id").get_to(p.worker_id);
  j.at("username").get_to(p.username);
  j.at("role").get_to(p.role);
  j.at("platforms").get_to(p.platforms);
  p.demographics = j.value("demographics", json::object()).get<Demographics>();
  p.created_at = timestamp_from_json(j.at("created_at"));
  p.trends_visits = j.value("trends_visits", std::int64_t{0});
  get_optional(j, "rating_snapshot", p.rating_snapshot);
}

void to_json(json& j, const AudienceSet& a) {
  j = json{{"workers", a.workers}, {"policymakers", a.policymakers}, {"advocates", a.advocates}};
}

void from_json(const json& j, AudienceSet& a) {
  a.workers = j.value("workers", false);
  a.policymakers = j.value("policymakers", false);
  a.advocates = j.value("advocates", false);
}

void to_json(json& j, const MediaRef& m) {
  j = json::object();
  if (!m.blob_digest.empty()) j["blob"] = m.blob_digest;
  if (!m.content_type.empty()) j["content_type"] = m.content_type;
  if (!m.external_url.empty()) j["url"] = m.external_url;
}

void from_json(const json& j, MediaRef& m) {
  m.blob_digest = j.value("blob", "");
  m.content_type = j.value("content_type", "");
  m.external_url = j.value("url", "");
}

void to_json(json& j, const Story& s) {
  j = json{{"story_id", s.story_id},
           {"author_id", s.author_id},
           {"author_platforms", s.author_platforms},
           {"display_mode", s.display_mode},
           {"story_type", s.story_type},
           {"tags", s.tags},
           {"title", s.title},
           {"body", s.body},
           {"evidence", s.evidence},
           {"show_evidence_city", s.show_evidence_city},
           {"audience", s.audience},
           {"created_at", timestamp_to_json(s.created_at)},
           {"edit_count", s.edit_count},
           {"likes", s.likes}};
  put_optional(j, "media", s.media);
  put_optional(j, "original_title", s.original_title);
  put_optional(j, "original_body", s.original_body);
  put_optional_ts(j, "expires_at", s.expires_at);
}

void from_json(const json& j, Story& s) {
  j.at("story_id").get_to(s.story_id);
  j.at("author_id").get_to(s.author_id);
  s.author_platforms = j.value("author_platforms", std::set<Platform>{});
  j.at("display_mode").get_to(s.display_mode);
  j.at("story_type").get_to(s.story_type);
  j.at("tags").get_to(s.tags);
  s.title = j.value("title", "");
  s.body = j.value("body", "");
  s.evidence = j.value("evidence", std::vector<EntryId>{});
  s.show_evidence_city = j.value("show_evidence_city", false);
  j.at("audience").get_to(s.audience);
  s.created_at = timestamp_from_json(j.at("created_at"));
  s.edit_count = j.value("edit_count", std::int64_t{0});
  s.likes = j.value("likes", std::set<WorkerId>{});
  get_optional(j, "media", s.media);
  get_optional(j, "original_title", s.original_title);
  get_optional(j, "original_body", s.original_body);
  s.expires_at = get_optional_ts(j, "expires_at");
}

void to_json(json& j, const IncomeEntry& e) {
  j = json{{"entry_id", e.entry_id},
           {"worker_id", e.worker_id},
           {"platform", e.platform},
           {"work_date", date_to_json(e.work_date)},
           {"duration_minutes", e.duration_minutes},
           {"work_type", e.work_type},
           {"income_amount", e.income_amount},
           {"source", e.source},
           {"dedupe_key", e.dedupe_key}};
  put_optional(j, "start_minute", e.start_minute);
  put_optional(j, "tips", e.tips);
  put_optional(j, "platform_fee", e.platform_fee);
  put_optional(j, "surge_amount", e.surge_amount);
  put_optional(j, "distance_miles", e.distance_miles);
  put_optional(j, "city", e.city);
  put_optional(j, "travel_minutes", e.travel_minutes);
  put_optional(j, "experience_level", e.experience_level);
  put_optional(j, "unpaid_minutes", e.unpaid_minutes);
  put_optional(j, "notes", e.notes);
  put_optional_ts(j, "expires_at", e.expires_at);
}

void from_json(const json& j, IncomeEntry& e) {
  j.at("entry_id").get_to(e.entry_id);
  j.at("worker_id").get_to(e.worker_id);
  j.at("platform").get_to(e.platform);
  e.work_date = date_from_json(j.at("work_date"));
  j.at("duration_minutes").get_to(e.duration_minutes);
  j.at("work_type").get_to(e.work_type);
  j.at("income_amount").get_to(e.income_amount);
  j.at("source").get_to(e.source);
  e.dedupe_key = j.value("dedupe_key", "");
  get_optional(j, "start_minute", e.start_minute);
  get_optional(j, "tips", e.tips);
  get_optional(j, "platform_fee", e.platform_fee);
  get_optional(j, "surge_amount", e.surge_amount);
  get_optional(j, "distance_miles", e.distance_miles);
  get_optional(j, "city", e.city);
  get_optional(j, "travel_minutes", e.travel_minutes);
  get_optional(j, "experience_level", e.experience_level);
  get_optional(j, "unpaid_minutes", e.unpaid_minutes);
  get_optional(j, "notes", e.notes);
  e.expires_at = get_optional_ts(j, "expires_at");
}

void to_json(json& j, const ExpenseEntry& e) {
  j = json{{"entry_id", e.entry_id},
           {"worker_id", e.worker_id},
           {"expense_date", date_to_json(e.expense_date)},
           {"amount", e.amount},
           {"recurring", e.recurring}};
  put_optional(j, "platform", e.platform);
  put_optional(j, "expense_type", e.expense_type);
  put_optional(j, "description", e.description);
  put_optional(j, "photo", e.photo);
  put_optional_ts(j, "expires_at", e.expires_at);
}

void from_json(const json& j, ExpenseEntry& e) {
  j.at("entry_id").get_to(e.entry_id);
  j.at("worker_id").get_to(e.worker_id);
  e.expense_date = date_from_json(j.at("expense_date"));
  j.at("amount").get_to(e.amount);
  e.recurring = j.value("recurring", false);
  get_optional(j, "platform", e.platform);
  get_optional(j, "expense_type", e.expense_type);
  get_optional(j, "description", e.description);
  get_optional(j, "photo", e.photo);
  e.expires_at = get_optional_ts(j, "expires_at");
}

void to_json(json& j, const AuditEvent& e) {
  j = json{{"event_id", e.event_id},
           {"actor_id", e.actor_id},
           {"subject_kind", e.subject_kind},
           {"subject_id", e.subject_id},
           {"action", e.action},
           {"at", timestamp_to_json(e.at)},
           {"diff", e.diff}};
}

void from_json(const json& j, AuditEvent& e) {
  j.at("event_id").get_to(e.event_id);
  j.at("actor_id").get_to(e.actor_id);
  j.at("subject_kind").get_to(e.subject_kind);
  j.at("subject_id").get_to(e.subject_id);
  j.at("action").get_to(e.action);
  e.at = timestamp_from_json(j.at("at"));
  e.diff = j.value("diff", json::object());
}

}  // namespace g2g
