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

#include "g2g/feed/feed.hpp"

#include <algorithm>
#include <charconv>

#include "g2g/privacy/audit.hpp"
#include "g2g/storage/blobs.hpp"

namespace g2g {

namespace {

constexpr int kMaxRetries = 8;
constexpr std::size_t kMaxPage = 100;

bool feed_before(const Story& a, const Story& b) {
  if (a.created_at != b.created_at) return a.created_at > b.created_at;
  return a.story_id > b.story_id;
}

std::string hex_encode(std::string_view s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

std::optional<std::string> hex_decode(std::string_view s) {
  if (s.size() % 2) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + i + 2, v, 16);
    if (ec != std::errc() || p != s.data() + i + 2) return std::nullopt;
    out += static_cast<char>(v);
  }
  return out;
}

Record story_record(const Story& s, std::int64_t version) {
  Record r;
  r.kind = RecordKind::kStory;
  r.id = s.story_id;
  r.owner = s.author_id;
  r.version = version;
  r.payload = s;
  r.expires_at = s.expires_at;
  return r;
}

Error with_findings(const std::vector<Finding>& title, const std::vector<Finding>& body) {
  Error e(ErrorCode::kUnacknowledgedRedaction,
          "the story contains sensitive details; confirm the redaction to post it");
  auto add = [&](const char* field, const std::vector<Finding>& fs) {
    for (const auto& f : fs) {
      e.violations.emplace_back(ErrorCode::kUnacknowledgedRedaction,
                                std::string(enum_name(f.kind)) + " at " + std::to_string(f.begin) + ".." +
                                    std::to_string(f.end),
                                field);
    }
  };
  add("title", title);
  add("body", body);
  return e;
}

}  // namespace

std::string encode_cursor(Timestamp created_at, const StoryId& id) {
  return hex_encode(std::to_string(created_at.time_since_epoch().count()) + ":" + id);
}

Result<std::pair<Timestamp, StoryId>> decode_cursor(std::string_view cursor) {
  auto bad = Error(ErrorCode::kInvalidCursor, "cursor is not one this server issued", "cursor");
  auto raw = hex_decode(cursor);
  if (!raw) return bad;
  auto colon = raw->find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == raw->size()) return bad;
  std::int64_t ms = 0;
  auto [p, ec] = std::from_chars(raw->data(), raw->data() + colon, ms);
  if (ec != std::errc() || p != raw->data() + colon) return bad;
  return std::make_pair(Timestamp(std::chrono::milliseconds(ms)), raw->substr(colon + 1));
}

std::optional<VisibleStory> StoryFeed::render(const Story& story, const ViewerContext& viewer,
                                              const Snapshot& snap) const {
  if (!can_view(story, viewer)) return std::nullopt;
  std::string username;
  if (story.display_mode == DisplayMode::kUsername) {
    if (auto p = store_.get(RecordKind::kProfile, story.author_id, snap)) {
      username = p->payload.value("username", "");
    }
  }
  std::vector<IncomeEntry> evidence;
  for (const auto& id : story.evidence) {
    auto rec = store_.get(RecordKind::kIncome, id, snap);
    if (rec && rec->owner == story.author_id) evidence.push_back(rec->payload.get<IncomeEntry>());
  }
  return scope_story(story, viewer, username, evidence);
}

Status StoryFeed::resolve_media(StoryDraft& draft, const WorkerId& author, const Snapshot& snap) const {
  if (!draft.media || draft.media->blob_digest.empty()) return ok_status();
  auto rec = store_.get(RecordKind::kBlob, blob_record_id(author, draft.media->blob_digest), snap);
  if (!rec) {
    return Error(ErrorCode::kInvalidValue, "image " + draft.media->blob_digest + " was not uploaded by the author",
                 "image");
  }
  draft.media->content_type = rec->payload.value("content_type", "");
  return ok_status();
}

Result<PostOutcome> StoryFeed::post_story(const ViewerContext& author, const json& body,
                                          bool acknowledge_redaction) {
  if (author.role != Role::kWorker) {
    return Error(ErrorCode::kUnauthorizedActor, "only workers post stories");
  }
  auto draft = story_draft_from_json(body);
  if (!draft) return draft.error();
  auto snap = store_.snapshot();
  if (auto s = resolve_media(*draft, author.viewer_id, snap); !s) return s.error();

  StoryContext ctx;
  ctx.story_id = ids_->next("sty");
  ctx.author_id = author.viewer_id;
  ctx.author_platforms = author.platforms;
  ctx.now = store_.clock().now();
  ctx.owns_entry = [&](const EntryId& id) {
    auto rec = store_.get(RecordKind::kIncome, id, snap);
    return rec && rec->owner == author.viewer_id;
  };
  auto story = validate_story(*draft, ctx);
  if (!story) return story.error();

  auto title = redact_text(story->title);
  auto text = redact_text(story->body);
  if (!(title.findings.empty() && text.findings.empty())) {
    if (!acknowledge_redaction) return with_findings(title.findings, text.findings);
    if (!title.findings.empty()) story->original_title = story->title;
    if (!text.findings.empty()) story->original_body = story->body;
    story->title = title.redacted_text;
    story->body = text.redacted_text;
  }
  story->created_at = ctx.now;

  WriteBatch batch;
  Record rec = story_record(*story, 1);
  batch.put(rec);
  batch.append_audit(make_event(*ids_, store_.clock(), author.viewer_id, SubjectKind::kStory, story->story_id,
                                AuditAction::kCreate, json{{"after", rec.payload}}));
  if (auto s = store_.commit(batch); !s) return s.error();
  return PostOutcome{story->story_id, title.findings, text.findings};
}

Result<FeedPage> StoryFeed::list_feed(const ViewerContext& viewer, const FeedQuery& query) const {
  std::optional<std::pair<Timestamp, StoryId>> after;
  if (!query.cursor.empty()) {
    auto c = decode_cursor(query.cursor);
    if (!c) return c.error();
    after = *c;
  }
  auto snap = store_.snapshot();
  std::vector<Story> stories;
  for (const auto& rec : store_.scan(RecordKind::kStory, snap)) {
    Story s = rec.payload.get<Story>();
    if (!can_view(s, viewer)) continue;
    if (query.story_type && s.story_type != *query.story_type) continue;
    if (query.platform && !s.author_platforms.contains(*query.platform)) continue;
    if (query.tag && !s.tags.contains(*query.tag)) continue;
    if (after) {
      Story mark;
      mark.created_at = after->first;
      mark.story_id = after->second;
      if (!feed_before(mark, s)) continue;
    }
    stories.push_back(std::move(s));
  }
  std::sort(stories.begin(), stories.end(), feed_before);
  const std::size_t limit = std::clamp<std::size_t>(query.limit, 1, kMaxPage);
  FeedPage page;
  for (std::size_t i = 0; i < stories.size() && i < limit; ++i) {
    if (auto v = render(stories[i], viewer, snap)) page.items.push_back(std::move(*v));
  }
  if (stories.size() > limit) {
    const auto& last = stories[limit - 1];
    page.next_cursor = encode_cursor(last.created_at, last.story_id);
  }
  return page;
}

Result<VisibleStory> StoryFeed::get_story(const ViewerContext& viewer, const StoryId& id) const {
  auto snap = store_.snapshot();
  auto rec = store_.get(RecordKind::kStory, id, snap);
  if (!rec) return Error(ErrorCode::kNotFound, "no such story");
  auto v = render(rec->payload.get<Story>(), viewer, snap);
  if (!v) return Error(ErrorCode::kNotVisible, "story is not shared with you");
  return *v;
}

Result<std::int64_t> StoryFeed::set_like(const ViewerContext& viewer, const StoryId& id, bool like) {
  if (viewer.role != Role::kWorker) {
    return Error(ErrorCode::kRoleCannotLike, "only workers can like stories");
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto rec = store_.get(RecordKind::kStory, id);
    if (!rec) return Error(ErrorCode::kNotFound, "no such story");
    Story story = rec->payload.get<Story>();
    if (!can_view(story, viewer)) return Error(ErrorCode::kNotVisible, "story is not shared with you");
    bool has = story.likes.contains(viewer.viewer_id);
    if (has == like) return static_cast<std::int64_t>(story.likes.size());
    json before{{"likes", story.likes}};
    if (like) story.likes.insert(viewer.viewer_id);
    else story.likes.erase(viewer.viewer_id);
    WriteBatch batch;
    batch.put(story_record(story, rec->version + 1));
    batch.append_audit(make_event(*ids_, store_.clock(), viewer.viewer_id, SubjectKind::kStory, id,
                                  like ? AuditAction::kLike : AuditAction::kUnlike,
                                  json{{"before", before}, {"after", {{"likes", story.likes}}}}));
    auto s = store_.commit(batch);
    if (s) return static_cast<std::int64_t>(story.likes.size());
    if (s.error().code != ErrorCode::kVersionConflict) return s.error();
  }
  return Error(ErrorCode::kVersionConflict, "story is being updated; retry");
}

Result<std::int64_t> StoryFeed::like_story(const ViewerContext& viewer, const StoryId& id) {
  return set_like(viewer, id, true);
}

Result<std::int64_t> StoryFeed::unlike_story(const ViewerContext& viewer, const StoryId& id) {
  return set_like(viewer, id, false);
}

Result<Story> StoryFeed::load_for_author(const ViewerContext& author, const StoryId& id,
                                         std::int64_t& version) const {
  auto rec = store_.get(RecordKind::kStory, id);
  if (!rec) return Error(ErrorCode::kNotFound, "no such story");
  Story story = rec->payload.get<Story>();
  if (story.author_id != author.viewer_id) {
    if (!can_view(story, author)) return Error(ErrorCode::kNotVisible, "story is not shared with you");
    return Error(ErrorCode::kUnauthorizedActor, "only the author can change a story");
  }
  version = rec->version;
  return story;
}

Result<VisibleStory> StoryFeed::edit_story(const ViewerContext& author, const StoryId& id, const json& patch,
                                           bool acknowledge_redaction) {
  if (!patch.is_object()) return Error(ErrorCode::kBadRequest, "patch must be a JSON object");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::int64_t version = 0;
    auto current = load_for_author(author, id, version);
    if (!current) return current.error();
    json merged = story_to_draft_json(*current);
    for (const auto& [k, v] : patch.items()) {
      if (k == "image") merged.erase("media_url");
      if (k == "media_url") merged.erase("image");
      if (v.is_null()) merged.erase(k);
      else merged[k] = v;
    }
    auto draft = story_draft_from_json(merged);
    if (!draft) return draft.error();
    auto snap = store_.snapshot();
    if (auto s = resolve_media(*draft, author.viewer_id, snap); !s) return s.error();
    StoryContext ctx;
    ctx.story_id = id;
    ctx.author_id = author.viewer_id;
    ctx.author_platforms = current->author_platforms;
    ctx.now = store_.clock().now();
    ctx.owns_entry = [&](const EntryId& eid) {
      // Evidence already on the story stays valid while the entry lives.
      auto rec = store_.get(RecordKind::kIncome, eid, snap);
      return rec && rec->owner == author.viewer_id;
    };
    auto next = validate_story(*draft, ctx);
    if (!next) return next.error();

    auto title = redact_text(next->title);
    auto text = redact_text(next->body);
    if (!(title.findings.empty() && text.findings.empty()) && !acknowledge_redaction) {
      return with_findings(title.findings, text.findings);
    }
    next->original_title = title.findings.empty() ? std::optional<std::string>{} : next->title;
    next->original_body = text.findings.empty() ? std::optional<std::string>{} : next->body;
    if (!patch.contains("title") || next->title == current->title) {
      next->original_title = current->original_title;
    }
    if (!patch.contains("body") || next->body == current->body) {
      next->original_body = current->original_body;
    }
    next->title = title.redacted_text;
    next->body = text.redacted_text;
    next->created_at = current->created_at;
    next->likes = current->likes;
    next->edit_count = current->edit_count;

    Story scope_only = *current;
    scope_only.audience = next->audience;
    if (*next == *current) {
      auto v = render(*current, author, snap);
      return *v;
    }
    AuditAction action = AuditAction::kShareScopeChange;
    if (!(*next == scope_only)) {
      action = AuditAction::kEdit;
      next->edit_count = current->edit_count + 1;
    }
    WriteBatch batch;
    Record rec = story_record(*next, version + 1);
    batch.put(rec);
    batch.append_audit(make_event(*ids_, store_.clock(), author.viewer_id, SubjectKind::kStory, id, action,
                                  field_diff(json(*current), rec.payload)));
    auto s = store_.commit(batch);
    if (s) {
      auto fresh = store_.snapshot();
      return *render(*next, author, fresh);
    }
    if (s.error().code != ErrorCode::kVersionConflict) return s.error();
  }
  return Error(ErrorCode::kVersionConflict, "story is being updated; retry");
}

Result<VisibleStory> StoryFeed::attach_evidence(const ViewerContext& author, const StoryId& id,
                                                const std::vector<EntryId>& entries) {
  std::int64_t version = 0;
  auto current = load_for_author(author, id, version);
  if (!current) return current.error();
  json list = current->evidence;
  for (const auto& e : entries) list.push_back(e);
  return edit_story(author, id, json{{"evidence", list}}, false);
}

Status StoryFeed::delete_story(const ViewerContext& author, const StoryId& id) {
  std::int64_t version = 0;
  auto current = load_for_author(author, id, version);
  if (!current) return current.error();
  WriteBatch batch;
  batch.erase(RecordKind::kStory, id, version);
  batch.append_audit(make_event(*ids_, store_.clock(), author.viewer_id, SubjectKind::kStory, id,
                                AuditAction::kDelete));
  return store_.commit(batch);
}

Result<OwnData> StoryFeed::manage_data(const ViewerContext& owner) const {
  if (owner.role != Role::kWorker) return Error(ErrorCode::kUnauthorizedActor, "only workers own data");
  auto snap = store_.snapshot();
  OwnData out;
  std::vector<Story> stories;
  for (const auto& rec : store_.scan_owner(RecordKind::kStory, owner.viewer_id, snap)) {
    stories.push_back(rec.payload.get<Story>());
  }
  std::sort(stories.begin(), stories.end(), feed_before);
  for (const auto& s : stories) {
    if (auto v = render(s, owner, snap)) out.stories.push_back(std::move(*v));
  }
  for (const auto& rec : store_.scan_owner(RecordKind::kIncome, owner.viewer_id, snap)) {
    out.income.push_back(rec.payload.get<IncomeEntry>());
  }
  for (const auto& rec : store_.scan_owner(RecordKind::kExpense, owner.viewer_id, snap)) {
    out.expenses.push_back(rec.payload.get<ExpenseEntry>());
  }
  auto by_date = [](const auto& a, const auto& b) { return a.entry_id < b.entry_id; };
  std::sort(out.income.begin(), out.income.end(), by_date);
  std::sort(out.expenses.begin(), out.expenses.end(), by_date);
  return out;
}

}  // namespace g2g
