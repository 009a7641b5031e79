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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2g/core/crypto.hpp"
#include "g2g/domain/validate.hpp"
#include "g2g/privacy/redact.hpp"
#include "g2g/privacy/scope.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

struct FeedQuery {
  std::optional<StoryType> story_type;
  std::optional<Platform> platform;  // author platform
  std::optional<Tag> tag;
  std::string cursor;
  std::size_t limit = 20;
};

struct FeedPage {
  std::vector<VisibleStory> items;
  std::string next_cursor;  // empty on the last page
};

struct PostOutcome {
  StoryId story_id;
  std::vector<Finding> title_findings;
  std::vector<Finding> body_findings;
};

struct OwnData {
  std::vector<VisibleStory> stories;
  std::vector<IncomeEntry> income;
  std::vector<ExpenseEntry> expenses;
};

// Feed order: newest first, ties by story id descending.
std::string encode_cursor(Timestamp created_at, const StoryId& id);
Result<std::pair<Timestamp, StoryId>> decode_cursor(std::string_view cursor);

class StoryFeed {
 public:
  StoryFeed(Store store, std::shared_ptr<IdSource> ids) : store_(std::move(store)), ids_(std::move(ids)) {}

  // Findings in title/body need acknowledge_redaction; the stored text is
  // then the redacted one and the original is kept for the author only.
  Result<PostOutcome> post_story(const ViewerContext& author, const json& draft, bool acknowledge_redaction);
  Result<FeedPage> list_feed(const ViewerContext& viewer, const FeedQuery& query) const;
  Result<VisibleStory> get_story(const ViewerContext& viewer, const StoryId& id) const;

  Result<std::int64_t> like_story(const ViewerContext& viewer, const StoryId& id);
  Result<std::int64_t> unlike_story(const ViewerContext& viewer, const StoryId& id);

  Result<VisibleStory> attach_evidence(const ViewerContext& author, const StoryId& id,
                                       const std::vector<EntryId>& entries);
  // Content edits append EDIT; an audience-only change appends
  // SHARE_SCOPE_CHANGE and leaves the edited flag alone.
  Result<VisibleStory> edit_story(const ViewerContext& author, const StoryId& id, const json& patch,
                                  bool acknowledge_redaction);
  Status delete_story(const ViewerContext& author, const StoryId& id);

  Result<OwnData> manage_data(const ViewerContext& owner) const;

  // Renders one stored story for a viewer; nullopt when denied.
  std::optional<VisibleStory> render(const Story& story, const ViewerContext& viewer, const Snapshot& snap) const;

 private:
  Result<Story> load_for_author(const ViewerContext& author, const StoryId& id, std::int64_t& version) const;
  Result<std::int64_t> set_like(const ViewerContext& viewer, const StoryId& id, bool like);
  Status resolve_media(StoryDraft& draft, const WorkerId& author, const Snapshot& snap) const;

  Store store_;
  std::shared_ptr<IdSource> ids_;
};

}  // namespace g2g
