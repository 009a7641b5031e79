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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

// What an audience learns about an attached ledger entry. No location unless
// the author opted in to showing the city.
struct EvidenceSummary {
  Platform platform = Platform::kUber;
  Date work_date{};
  std::int64_t duration_minutes = 0;
  Money income_amount;
  std::optional<std::string> city;
};

struct VisibleStory {
  StoryId story_id;
  // Username, or "anonymous". Never an id.
  std::string display_name;
  bool own = false;
  std::set<Platform> author_platforms;
  StoryType story_type = StoryType::kStrategy;
  std::set<Tag> tags;
  std::string title;
  std::string body;
  std::optional<MediaRef> media;
  bool edited = false;
  std::int64_t like_count = 0;
  bool liked_by_viewer = false;
  std::vector<EvidenceSummary> evidence;
  Timestamp created_at{};
  // Author-only fields.
  std::optional<AudienceSet> audience;
  std::optional<std::string> original_title;
  std::optional<std::string> original_body;
};

inline constexpr std::string_view kAnonymousName = "anonymous";

bool can_view(const Story& story, const ViewerContext& viewer);

// nullopt means DENIED. `evidence` holds the author's live entries that the
// story references; anything else in the story's list is ignored.
std::optional<VisibleStory> scope_story(const Story& story, const ViewerContext& viewer,
                                        const std::string& author_username,
                                        const std::vector<IncomeEntry>& evidence);

void to_json(json& j, const EvidenceSummary& e);
void to_json(json& j, const VisibleStory& s);

}  // namespace g2g
