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

#include "g2g/admin/tax.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace g2g {

namespace {

Result<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Result<std::vector<TaxDay>> parse_tax_calendar(std::string_view text) {
  std::vector<TaxDay> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto date = parse_date(line.substr(0, 10));
    if (!date) {
      return Error(ErrorCode::kInvalidValue, "calendar line " + std::to_string(line_no) + ": " + date.error().message);
    }
    out.push_back(TaxDay{*date, std::string(trim(line.substr(std::min<std::size_t>(10, line.size()))))});
  }
  std::stable_sort(out.begin(), out.end(), [](const TaxDay& a, const TaxDay& b) {
    return std::chrono::sys_days(a.date) < std::chrono::sys_days(b.date);
  });
  return out;
}

Result<std::vector<TaxDay>> load_tax_calendar(const std::string& path) {
  auto text = slurp(path);
  if (!text) return text.error();
  return parse_tax_calendar(*text);
}

Result<TaxDay> next_tax_day(const std::vector<TaxDay>& calendar, Date today) {
  if (calendar.empty()) return Error(ErrorCode::kNoCalendar, "no tax calendar is configured");
  const TaxDay* best = nullptr;
  for (const auto& d : calendar) {
    if (std::chrono::sys_days(d.date) < std::chrono::sys_days(today)) continue;
    if (!best || std::chrono::sys_days(d.date) < std::chrono::sys_days(best->date)) best = &d;
  }
  if (!best) return Error(ErrorCode::kNoCalendar, "the tax calendar has no date on or after " + format_date(today));
  return *best;
}

Result<std::vector<TaxResource>> parse_tax_resources(const json& catalog) {
  if (!catalog.is_array()) return Error(ErrorCode::kInvalidValue, "tax resource catalog must be a JSON array");
  std::vector<TaxResource> out;
  Error all(ErrorCode::kValidation, "invalid tax resource catalog");
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const json& e = catalog[i];
    const std::string where = "[" + std::to_string(i) + "]";
    auto bad = [&](std::string field, std::string msg) {
      all.violations.emplace_back(ErrorCode::kInvalidValue, std::move(msg), where + "." + field);
    };
    if (!e.is_object()) {
      bad("", "entry must be an object");
      continue;
    }
    TaxResource r;
    if (!e.contains("title") || !e["title"].is_string() || trim(e["title"].get<std::string>()).empty()) {
      bad("title", "title is required");
    } else {
      r.title = e["title"].get<std::string>();
    }
    auto aud = e.contains("audience") && e["audience"].is_string()
                   ? parse_enum<TaxAudience>(e["audience"].get<std::string>())
                   : std::optional<TaxAudience>(TaxAudience::kAll);
    if (!aud) bad("audience", "audience must be part_time, full_time or all");
    else r.audience = *aud;
    if (e.contains("platform") && !e["platform"].is_null()) {
      auto p = e["platform"].is_string() ? parse_enum<Platform>(e["platform"].get<std::string>()) : std::nullopt;
      if (!p) bad("platform", "unknown platform");
      else r.platform = *p;
    }
    if (e.contains("url") && e["url"].is_string()) r.url = e["url"].get<std::string>();
    if (e.contains("body") && e["body"].is_string()) r.body = e["body"].get<std::string>();
    if (r.url.empty() && r.body.empty()) bad("url", "a url or body is required");
    if (!r.url.empty() && r.url.rfind("https://", 0) != 0 && r.url.rfind("http://", 0) != 0) {
      bad("url", "url must be http(s)");
    }
    if (e.contains("next_tax_day")) {
      if (!e["next_tax_day"].is_boolean()) bad("next_tax_day", "must be a boolean");
      else r.next_tax_day = e["next_tax_day"].get<bool>();
    }
    out.push_back(std::move(r));
  }
  if (!all.violations.empty()) return all;
  return out;
}

Result<std::vector<TaxResource>> load_tax_resources(const std::string& path) {
  auto text = slurp(path);
  if (!text) return text.error();
  json j = json::parse(*text, nullptr, false);
  if (j.is_discarded()) return Error(ErrorCode::kInvalidValue, path + " is not valid JSON");
  return parse_tax_resources(j);
}

std::vector<TaxResource> resources_for(const std::vector<TaxResource>& catalog, const WorkerProfile& worker) {
  std::vector<TaxResource> out;
  for (const auto& r : catalog) {
    if (r.audience != TaxAudience::kAll) {
      auto ws = worker.demographics.work_status;
      bool match = ws && ((*ws == WorkStatus::kFullTime) == (r.audience == TaxAudience::kFullTime));
      if (!match) continue;
    }
    if (r.platform && !worker.platforms.contains(*r.platform)) continue;
    out.push_back(r);
  }
  return out;
}

void to_json(json& j, const TaxDay& d) {
  j = json{{"date", format_date(d.date)}, {"label", d.label}};
}

void to_json(json& j, const TaxResource& r) {
  j = json{{"title", r.title}, {"audience", r.audience}, {"next_tax_day", r.next_tax_day}};
  if (r.platform) j["platform"] = *r.platform;
  if (!r.url.empty()) j["url"] = r.url;
  if (!r.body.empty()) j["body"] = r.body;
}

}  // namespace g2g
