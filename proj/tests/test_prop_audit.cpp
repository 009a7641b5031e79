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

#include <random>

#include <gtest/gtest.h>

#include "g2g/feed/feed.hpp"
#include "g2g/privacy/audit.hpp"
#include "g2g/service/ledger.hpp"
#include "support.hpp"

using namespace g2g;
using namespace g2g::testing;

namespace {

const std::vector<std::string> kTags{"safety", "fair_pay", "stress", "technology", "other"};

json random_patch(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return json{{"title", "title " + std::to_string(rng() % 1000)}};
    case 1: return json{{"body", "body " + std::to_string(rng() % 1000)}};
    case 2: return json{{"tags", {kTags[rng() % kTags.size()]}}};
    default: return json{{"audience", rng() % 2 ? json{"workers"} : json{"workers", "advocates"}}};
  }
}

}  // namespace

// Replaying the audit log from genesis reconstructs every live record.
TEST(PropAudit, ReplayReconstructsState) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    Env env;
    StoryFeed feed(env.store, env.ids);
    Ledger ledger(env.store, env.ids);
    std::vector<WorkerProfile> ws;
    for (int i = 0; i < 3; ++i) ws.push_back(env.add_profile("w" + std::to_string(i)));
    std::vector<std::pair<StoryId, std::size_t>> stories;
    std::vector<std::pair<EntryId, std::size_t>> incomes, expenses;
    std::map<StoryId, int> edits;

    for (int step = 0; step < 60; ++step) {
      const auto who = rng() % ws.size();
      const auto v = Env::viewer(ws[who]);
      switch (rng() % 9) {
        case 0: {
          json d{{"story_type", "strategy"}, {"title", "t"}, {"body", "b"}, {"tags", {"safety"}},
                 {"audience", {"workers"}}};
          auto r = feed.post_story(v, d, false);
          ASSERT_TRUE(r);
          stories.push_back({r->story_id, who});
          edits[r->story_id] = 0;
          break;
        }
        case 1:
        case 2: {
          if (stories.empty()) break;
          auto [id, owner] = stories[rng() % stories.size()];
          auto patch = random_patch(rng);
          auto before = feed.get_story(Env::viewer(ws[owner]), id);
          auto r = feed.edit_story(Env::viewer(ws[owner]), id, patch, false);
          ASSERT_TRUE(r) << why(r.error());
          // A patch that changes no content is not an edit.
          if (before->title != r->title || before->body != r->body || before->tags != r->tags) edits[id] += 1;
          break;
        }
        case 3: {
          if (stories.empty()) break;
          auto [id, owner] = stories[rng() % stories.size()];
          if (rng() % 2) ASSERT_TRUE(feed.like_story(v, id));
          else ASSERT_TRUE(feed.unlike_story(v, id));
          break;
        }
        case 4: {
          if (stories.empty()) break;
          auto i = rng() % stories.size();
          ASSERT_TRUE(feed.delete_story(Env::viewer(ws[stories[i].second]), stories[i].first));
          stories.erase(stories.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        }
        case 5: {
          auto e = ledger.create_income(v, json{{"platform", "uber"}, {"work_type", "trip"}, {"date", "2024-06-03"},
                                                {"duration_minutes", 10 + static_cast<int>(rng() % 50)},
                                                {"income_amount", "12.00"}});
          ASSERT_TRUE(e);
          incomes.push_back({e->entry_id, who});
          // Sometimes cite it as evidence on one of the owner's stories.
          for (auto& [sid, owner] : stories) {
            if (owner == who && rng() % 2) {
              ASSERT_TRUE(feed.attach_evidence(v, sid, {e->entry_id}));
              edits[sid] += 1;  // evidence is visible content
              break;
            }
          }
          break;
        }
        case 6: {
          if (incomes.empty()) break;
          auto i = rng() % incomes.size();
          if (rng() % 2) {
            ASSERT_TRUE(ledger.update_income(Env::viewer(ws[incomes[i].second]), incomes[i].first,
                                             json{{"income_amount", "15.50"}}));
          } else {
            ASSERT_TRUE(ledger.delete_income(Env::viewer(ws[incomes[i].second]), incomes[i].first));
            incomes.erase(incomes.begin() + static_cast<std::ptrdiff_t>(i));
          }
          break;
        }
        case 7: {
          auto x = ledger.create_expense(v, json{{"date", "2024-06-04"}, {"amount", "3.25"}});
          ASSERT_TRUE(x);
          expenses.push_back({x->entry_id, who});
          break;
        }
        default: {
          if (expenses.empty()) break;
          auto i = rng() % expenses.size();
          ASSERT_TRUE(ledger.delete_expense(Env::viewer(ws[expenses[i].second]), expenses[i].first));
          expenses.erase(expenses.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }

    auto snap = env.store.snapshot();
    auto state = replay(env.store.audit_log(snap));
    std::size_t live = 0;
    for (auto [kind, subject] : {std::pair{RecordKind::kStory, SubjectKind::kStory},
                                 std::pair{RecordKind::kIncome, SubjectKind::kIncome},
                                 std::pair{RecordKind::kExpense, SubjectKind::kExpense}}) {
      for (const auto& rec : env.store.scan(kind, snap)) {
        ++live;
        auto it = state.find({subject, rec.id});
        ASSERT_NE(it, state.end()) << rec.id;
        ASSERT_EQ(it->second, rec.payload) << rec.id;
      }
    }
    ASSERT_EQ(state.size(), live) << "replay holds deleted subjects";
    for (const auto& [id, owner] : stories) {
      auto history = edit_history(env.store, SubjectKind::kStory, id);
      const bool edited = count_edits(history) >= 1;
      ASSERT_EQ(edited, edits[id] >= 1) << id;
      ASSERT_EQ(feed.get_story(Env::viewer(ws[owner]), id)->edited, edited);
    }
  }
}
