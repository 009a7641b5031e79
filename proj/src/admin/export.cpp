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

#include "g2g/admin/export.hpp"

#include <fstream>
#include <map>

#include "g2g/analytics/insights.hpp"
#include "g2g/analytics/usage.hpp"
#include "g2g/core/crypto.hpp"
#include "g2g/privacy/redact.hpp"
#include "g2g/privacy/scope.hpp"

namespace g2g {

Result<Role> parse_export_audience(std::string_view text) {
  if (text == "workers" || text == "worker") return Role::kWorker;
  if (text == "policymakers" || text == "policymaker") return Role::kPolicymaker;
  if (text == "advocates" || text == "advocate") return Role::kAdvocate;
  return Error(ErrorCode::kInvalidValue, "audience must be workers, policymakers or advocates", "audience");
}

std::string_view audience_name(Role audience) {
  switch (audience) {
    case Role::kWorker: return "workers";
    case Role::kPolicymaker: return "policymakers";
    case Role::kAdvocate: return "advocates";
    case Role::kAdmin: break;
  }
  return "admin";
}

Result<ExportBundle> build_export(const Store& store, Role audience, int k) {
  if (audience == Role::kAdmin) return Error(ErrorCode::kInvalidValue, "admin is not an export audience", "audience");
  if (k < 1) return Error(ErrorCode::kInvalidK, "k must be at least 1", "k");
  auto snap = store.snapshot();
  Dataset d = load_dataset(store, snap);

  std::map<WorkerId, std::string> usernames;
  for (const auto& p : d.profiles) usernames[p.worker_id] = p.username;
  std::map<WorkerId, std::vector<IncomeEntry>> income_by_worker;
  for (const auto& e : d.income) income_by_worker[e.worker_id].push_back(e);

  ExportBundle b;
  b.audience = audience;
  const ViewerContext reader{"", audience, {}};
  for (const auto& s : d.stories) {
    if (!s.audience.admits(audience)) continue;
    auto v = scope_story(s, reader, usernames[s.author_id], income_by_worker[s.author_id]);
    if (!v) continue;
    v->title = redact_text(v->title).redacted_text;
    v->body = redact_text(v->body).redacted_text;
    json j = *v;
    j.erase("own");
    j.erase("liked_by_viewer");
    b.stories_ndjson += j.dump() + "\n";
    ++b.story_count;
  }

  std::vector<WorkerData> workers;
  for (const auto& p : d.profiles) {
    if (p.role == Role::kWorker) workers.push_back(WorkerData{p, income_by_worker[p.worker_id]});
  }
  for (auto dim : all_enum_values<Dimension>()) {
    for (auto br : all_enum_values<Breakdown>()) {
      auto t = collective_insight(workers, reader, enum_name(dim), enum_name(br), k);
      if (!t) return t.error();
      json j = *t;
      b.insights_ndjson += j.dump() + "\n";
      ++b.table_count;
    }
  }

  const std::string stories_sha = sha256_hex(b.stories_ndjson);
  const std::string insights_sha = sha256_hex(b.insights_ndjson);
  json warnings = json::array();
  if (b.story_count == 0) warnings.push_back(kEmptyExportWarning);
  b.manifest = json{
      {"schema_version", kExportSchemaVersion},
      {"audience", audience_name(audience)},
      {"k", k},
      {"counts", {{"stories", b.story_count}, {"insight_tables", b.table_count}}},
      {"files",
       {{"stories.ndjson", {{"sha256", stories_sha}, {"bytes", b.stories_ndjson.size()}}},
        {"insights.ndjson", {{"sha256", insights_sha}, {"bytes", b.insights_ndjson.size()}}}}},
      {"digest", sha256_hex("insights.ndjson " + insights_sha + "\nstories.ndjson " + stories_sha + "\n")},
      {"warnings", warnings}};
  return b;
}

Status write_export(const ExportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  auto write = [&](const char* name, const std::string& content) -> Status {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) return Error(ErrorCode::kIo, std::string("cannot write ") + name);
    return ok_status();
  };
  if (auto s = write("stories.ndjson", bundle.stories_ndjson); !s) return s;
  if (auto s = write("insights.ndjson", bundle.insights_ndjson); !s) return s;
  return write("manifest.json", bundle.manifest.dump(2) + "\n");
}

}  // namespace g2g
