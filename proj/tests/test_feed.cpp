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

#include "g2g/admin/fixture.hpp"
#include "g2g/analytics/usage.hpp"
#include "g2g/feed/feed.hpp"
#include "g2g/service/ledger.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

namespace {

json draft(const std::string& title, std::vector<std::string> audience = {"workers"},
           const std::string& body = "Keep water in the car.") {
  return json{{"story_type", "strategy"}, {"title", title}, {"body", body},
              {"tags", {"safety"}}, {"audience", audience}};
}

json trip(const char* date) {
  return json{{"platform", "uber"}, {"work_type", "trip"}, {"date", date}, {"start_time", "08:00"},
              {"duration_minutes", 45}, {"income_amount", "18.25"}, {"city", "Pittsburgh"}};
}

struct FeedEnv : Env {
  StoryFeed feed{store, ids};
  Ledger ledger{store, ids};
  WorkerProfile driver = add_profile("driver1", Role::kWorker, {Platform::kUber});
  WorkerProfile sitter = add_profile("petsitter1", Role::kWorker, {Platform::kRover});
  WorkerProfile policy = add_profile("policy1", Role::kPolicymaker);
  WorkerProfile advocate = add_profile("advocate1", Role::kAdvocate);
};

std::vector<StoryId> ids_of(const FeedPage& p) {
  std::vector<StoryId> out;
  for (const auto& s : p.items) out.push_back(s.story_id);
  return out;
}

}  // namespace

TEST(Feed, PostSafetyStrategy) {
  FeedEnv env;
  auto r = env.feed.post_story(Env::viewer(env.driver), draft("Late night pickups", {"workers", "policymakers"}), false);
  ASSERT_TRUE(r) << why(r.error());
  auto seen = env.feed.get_story(Env::viewer(env.policy), r->story_id);
  ASSERT_TRUE(seen);
  EXPECT_EQ(seen->tags, std::set<Tag>{Tag::kSafety});
  EXPECT_EQ(seen->display_name, "driver1");
  EXPECT_EQ(env.feed.get_story(Env::viewer(env.advocate), r->story_id).error().code, ErrorCode::kNotVisible);
  auto own = env.feed.manage_data(Env::viewer(env.driver));
  ASSERT_EQ(own->stories.size(), 1u);
  EXPECT_TRUE(own->stories[0].own);
}

TEST(Feed, RedactionNeedsAcknowledgement) {
  FeedEnv env;
  auto d = draft("Bad pickup", {"workers"}, "pickup at 123 Main St went fine");
  auto refused = env.feed.post_story(Env::viewer(env.driver), d, false);
  ASSERT_FALSE(refused);
  EXPECT_EQ(refused.error().code, ErrorCode::kUnacknowledgedRedaction);
  EXPECT_TRUE(env.store.scan(RecordKind::kStory, env.store.snapshot()).empty());

  auto ok = env.feed.post_story(Env::viewer(env.driver), d, true);
  ASSERT_TRUE(ok);
  ASSERT_EQ(ok->body_findings.size(), 1u);
  EXPECT_EQ(ok->body_findings[0].kind, PiiKind::kStreetAddress);
  EXPECT_EQ(env.feed.get_story(Env::viewer(env.sitter), ok->story_id)->body, "pickup at [ADDRESS] went fine");
  auto mine = env.feed.get_story(Env::viewer(env.driver), ok->story_id);
  EXPECT_EQ(mine->body, "pickup at [ADDRESS] went fine");
  EXPECT_EQ(mine->original_body, "pickup at 123 Main St went fine");
  auto rec = env.store.get(RecordKind::kStory, ok->story_id, env.store.snapshot());
  EXPECT_EQ(rec->payload.at("body"), "pickup at [ADDRESS] went fine");
}

TEST(Feed, PrivateStoryStaysWithAuthor) {
  FeedEnv env;
  auto r = env.feed.post_story(Env::viewer(env.driver), draft("Notes to self", {}), false);
  ASSERT_TRUE(r);
  for (const auto* p : {&env.sitter, &env.policy, &env.advocate}) {
    EXPECT_TRUE(env.feed.list_feed(Env::viewer(*p), {})->items.empty());
    EXPECT_FALSE(env.feed.get_story(Env::viewer(*p), r->story_id));
  }
  EXPECT_EQ(env.feed.list_feed(Env::viewer(env.driver), {})->items.size(), 1u);
}

TEST(Feed, NewestFirst) {
  FeedEnv env;
  std::vector<StoryId> posted;
  for (const char* t : {"t1", "t2", "t3"}) {
    env.clock->advance(std::chrono::seconds(10));
    posted.push_back(env.feed.post_story(Env::viewer(env.driver), draft(t), false)->story_id);
  }
  auto page = env.feed.list_feed(Env::viewer(env.sitter), {});
  EXPECT_EQ(ids_of(*page), (std::vector<StoryId>{posted[2], posted[1], posted[0]}));
}

TEST(Feed, PaginationIsStableUnderNewPosts) {
  FeedEnv env;
  for (int i = 0; i < 7; ++i) {
    env.clock->advance(std::chrono::seconds(1));
    ASSERT_TRUE(env.feed.post_story(Env::viewer(env.driver), draft("s" + std::to_string(i)), false));
  }
  FeedQuery q;
  q.limit = 3;
  auto p1 = env.feed.list_feed(Env::viewer(env.sitter), q);
  ASSERT_EQ(p1->items.size(), 3u);
  env.clock->advance(std::chrono::seconds(1));
  ASSERT_TRUE(env.feed.post_story(Env::viewer(env.driver), draft("late"), false));
  std::vector<StoryId> seen = ids_of(*p1);
  q.cursor = p1->next_cursor;
  while (!q.cursor.empty()) {
    auto p = env.feed.list_feed(Env::viewer(env.sitter), q);
    ASSERT_TRUE(p);
    for (auto& id : ids_of(*p)) seen.push_back(id);
    q.cursor = p->next_cursor;
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(std::set<StoryId>(seen.begin(), seen.end()).size(), 7u);
}

TEST(Feed, BadCursor) {
  FeedEnv env;
  FeedQuery q;
  q.cursor = "not-a-cursor";
  EXPECT_EQ(env.feed.list_feed(Env::viewer(env.driver), q).error().code, ErrorCode::kInvalidCursor);
}

TEST(Feed, LikeIsASet) {
  FeedEnv env;
  auto s = env.feed.post_story(Env::viewer(env.sitter), draft("Dog walk tips"), false);
  ASSERT_TRUE(s);
  EXPECT_EQ(*env.feed.like_story(Env::viewer(env.driver), s->story_id), 1);  // cross-platform
  EXPECT_EQ(*env.feed.like_story(Env::viewer(env.driver), s->story_id), 1);
  EXPECT_TRUE(env.feed.get_story(Env::viewer(env.driver), s->story_id)->liked_by_viewer);
  EXPECT_EQ(*env.feed.unlike_story(Env::viewer(env.driver), s->story_id), 0);
  EXPECT_EQ(*env.feed.unlike_story(Env::viewer(env.driver), s->story_id), 0);
}

TEST(Feed, LikeErrors) {
  FeedEnv env;
  auto s = env.feed.post_story(Env::viewer(env.driver), draft("w", {"workers"}), false);
  auto p = env.feed.post_story(Env::viewer(env.driver), draft("p", {"policymakers"}), false);
  EXPECT_EQ(env.feed.like_story(Env::viewer(env.policy), s->story_id).error().code, ErrorCode::kRoleCannotLike);
  EXPECT_EQ(env.feed.like_story(Env::viewer(env.sitter), p->story_id).error().code, ErrorCode::kNotVisible);
  EXPECT_EQ(env.feed.like_story(Env::viewer(env.sitter), "sty_missing").error().code, ErrorCode::kNotFound);
}

TEST(Feed, EvidenceAttachAndCascade) {
  FeedEnv env;
  auto v = Env::viewer(env.driver);
  auto e = env.ledger.create_income(v, trip("2024-06-03"));
  ASSERT_TRUE(e) << why(e.error());
  auto s = env.feed.post_story(v, draft("Proof", {"workers", "advocates"}), false);
  auto attached = env.feed.attach_evidence(v, s->story_id, {e->entry_id});
  ASSERT_TRUE(attached) << why(attached.error());
  auto seen = env.feed.get_story(Env::viewer(env.advocate), s->story_id);
  ASSERT_EQ(seen->evidence.size(), 1u);
  EXPECT_EQ(seen->evidence[0].income_amount, usd(1825));
  EXPECT_EQ(seen->evidence[0].duration_minutes, 45);
  EXPECT_FALSE(seen->evidence[0].city);
  EXPECT_EQ(json(*seen).dump().find("Pittsburgh"), std::string::npos);

  auto other = env.ledger.create_income(Env::viewer(env.sitter),
                                        json{{"platform", "rover"}, {"work_type", "walk"}, {"date", "2024-06-03"},
                                             {"duration_minutes", 30}, {"income_amount", "20.00"}});
  ASSERT_TRUE(other) << why(other.error());
  auto bad = env.feed.attach_evidence(v, s->story_id, {other->entry_id});
  ASSERT_FALSE(bad);
  EXPECT_TRUE(bad.error().code == ErrorCode::kEvidenceNotOwned || bad.error().has_violation(ErrorCode::kEvidenceNotOwned));

  ASSERT_TRUE(env.ledger.delete_income(v, e->entry_id));
  auto after = env.feed.get_story(Env::viewer(env.advocate), s->story_id);
  ASSERT_TRUE(after);
  EXPECT_TRUE(after->evidence.empty());
  // Oracle: render the stored story from scratch against the live ledger.
  auto snap = env.store.snapshot();
  auto stored = env.store.get(RecordKind::kStory, s->story_id, snap)->payload.get<Story>();
  EXPECT_TRUE(stored.evidence.empty());
  auto rerender = scope_story(stored, Env::viewer(env.advocate), "driver1", env.ledger.list_income(v));
  EXPECT_EQ(json(*rerender), json(*after));
}

TEST(Feed, EditAndDelete) {
  FeedEnv env;
  auto v = Env::viewer(env.driver);
  auto s = env.feed.post_story(v, draft("Tpyo"), false);
  EXPECT_EQ(env.feed.edit_story(Env::viewer(env.sitter), s->story_id, json{{"title", "x"}}, false).error().code,
            ErrorCode::kUnauthorizedActor);
  auto e = env.feed.edit_story(v, s->story_id, json{{"title", "Typo"}}, false);
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->edited);
  EXPECT_EQ(e->title, "Typo");
  EXPECT_EQ(env.feed.delete_story(Env::viewer(env.sitter), s->story_id).error().code, ErrorCode::kUnauthorizedActor);
  ASSERT_TRUE(env.feed.delete_story(v, s->story_id));
  EXPECT_FALSE(env.feed.get_story(v, s->story_id));
  EXPECT_TRUE(env.feed.list_feed(Env::viewer(env.sitter), {})->items.empty());
}

TEST(Feed, ManageDataListsUploads) {
  FeedEnv env;
  auto v = Env::viewer(env.driver);
  for (const char* d : {"2024-06-01", "2024-06-02", "2024-06-03"}) ASSERT_TRUE(env.ledger.create_income(v, trip(d)));
  auto own = env.feed.manage_data(v);
  ASSERT_TRUE(own);
  EXPECT_EQ(own->income.size(), 3u);
  EXPECT_TRUE(env.feed.manage_data(Env::viewer(env.sitter))->income.empty());
  EXPECT_EQ(env.feed.manage_data(Env::viewer(env.policy)).error().code, ErrorCode::kUnauthorizedActor);
}

class FieldStudyFeed : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_TRUE(seed_field_study(env.store));
    const auto data = load_dataset(env.store, env.store.snapshot());
    for (const auto& p : data.profiles) {
      if (p.username == "driver1") worker = Env::viewer(p);
    }
    ASSERT_FALSE(worker.viewer_id.empty());
  }
  std::size_t count(FeedQuery q) {
    q.limit = 100;
    auto page = feed.list_feed(worker, q);
    if (!page) throw std::runtime_error(page.error().message);
    return page->items.size();
  }
  Env env;
  StoryFeed feed{env.store, env.ids};
  ViewerContext worker;
};

TEST_F(FieldStudyFeed, UpworkHasOneStory) {
  FeedQuery q;
  q.platform = Platform::kUpwork;
  EXPECT_EQ(count(q), 1u);
}

TEST_F(FieldStudyFeed, NineIssues) {
  FeedQuery q;
  q.story_type = StoryType::kIssue;
  EXPECT_EQ(count(q), 9u);
}
