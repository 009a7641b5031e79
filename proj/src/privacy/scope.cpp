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

#include "g2g/privacy/scope.hpp"

#include <algorithm>

#include "g2g/privacy/redact.hpp"

namespace g2g {

bool can_view(const Story& story, const ViewerContext& viewer) {
  if (!viewer.viewer_id.empty() && viewer.viewer_id == story.author_id) return true;
  return story.audience.admits(viewer.role);
}

std::optional<VisibleStory> scope_story(const Story& story, const ViewerContext& viewer,
                                        const std::string& author_username,
                                        const std::vector<IncomeEntry>& evidence) {
  if (!can_view(story, viewer)) return std::nullopt;
  VisibleStory v;
  v.story_id = story.story_id;
  v.own = viewer.viewer_id == story.author_id;
  v.display_name = story.display_mode == DisplayMode::kAnonymous ? std::string(kAnonymousName)
                                                                 : author_username;
  v.author_platforms = story.author_platforms;
  v.story_type = story.story_type;
  v.tags = story.tags;
  v.title = story.title;
  v.body = story.body;
  // Stakeholder reads are always scrubbed, whatever the author confirmed.
  if (!v.own && (viewer.role == Role::kPolicymaker || viewer.role == Role::kAdvocate)) {
    v.title = redact_text(v.title).redacted_text;
    v.body = redact_text(v.body).redacted_text;
  }
  v.media = story.media;
  v.edited = story.edit_count > 0;
  v.like_count = static_cast<std::int64_t>(story.likes.size());
  v.liked_by_viewer = story.likes.contains(viewer.viewer_id);
  for (const auto& id : story.evidence) {
    auto it = std::find_if(evidence.begin(), evidence.end(), [&](const IncomeEntry& e) {
      return e.entry_id == id && e.worker_id == story.author_id;
    });
    if (it == evidence.end()) continue;
    EvidenceSummary s;
    s.platform = it->platform;
    s.work_date = it->work_date;
    s.duration_minutes = it->duration_minutes;
    s.income_amount = it->income_amount;
    if (story.show_evidence_city) s.city = it->city;
    v.evidence.push_back(std::move(s));
  }
  v.created_at = story.created_at;
  if (v.own) {
    v.audience = story.audience;
    v.original_title = story.original_title;
    v.original_body = story.original_body;
  }
  return v;
}

void to_json(json& j, const EvidenceSummary& e) {
  j = json{{"platform", e.platform},
           {"date", date_to_json(e.work_date)},
           {"duration_minutes", e.duration_minutes},
           {"income_amount", e.income_amount}};
  put_optional(j, "city", e.city);
}

void to_json(json& j, const VisibleStory& s) {
  j = json{{"story_id", s.story_id},
           {"display_name", s.display_name},
           {"own", s.own},
           {"author_platforms", s.author_platforms},
           {"story_type", s.story_type},
           {"tags", s.tags},
           {"title", s.title},
           {"body", s.body},
           {"edited", s.edited},
           {"like_count", s.like_count},
           {"liked_by_viewer", s.liked_by_viewer},
           {"evidence", s.evidence},
           {"created_at", timestamp_to_json(s.created_at)}};
  put_optional(j, "media", s.media);
  put_optional(j, "audience", s.audience);
  put_optional(j, "original_title", s.original_title);
  put_optional(j, "original_body", s.original_body);
}

}  // namespace g2g
