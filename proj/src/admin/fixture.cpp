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

#include "g2g/admin/fixture.hpp"

#include <array>
#include <random>

#include "g2g/domain/validate.hpp"
#include "g2g/privacy/audit.hpp"

namespace g2g {

namespace {

using AB = AgeBand;
using G = Gender;
using Eth = Ethnicity;
using T = TenureBand;
using Ed = Education;
using Inc = IncomeBand;
using WS = WorkStatus;

struct Participant {
  std::string_view username;
  Platform platform;
  Demographics demographics;
  std::optional<double> rating;
  int trends_visits;
  int story_words;
  int income_uploads;
  int expense_uploads;
};

// Active participants; two enrolled drivers dropped out and are absent.
const std::array<Participant, 14> kParticipants{{
    {"driver1", Platform::kUber, {AB::k45To54, G::kMale, Eth::kWhite, T::k2To5Years, Ed::kHighSchool, Inc::k25To50k, WS::kFullTime}, 4.93, 9, 1493, 41, 7},
    {"driver2", Platform::kUber, {AB::k45To54, G::kMale, Eth::kWhite, T::k6To12Months, Ed::kBachelors, Inc::kOver150k, WS::kPartTime}, 4.88, 8, 412, 12, 3},
    {"driver3", Platform::kUber, {AB::k45To54, G::kMale, Eth::kWhite, T::k1To2Years, Ed::kSomeCollege, Inc::k50To75k, WS::kPartTime}, 4.95, 7, 230, 12, 2},
    {"driver6", Platform::kUber, {AB::k45To54, G::kMale, Eth::kAsian, T::kOver10Years, Ed::kSomeCollege, Inc::k25To50k, WS::kPartTime}, 4.91, 6, 110, 9, 1},
    {"driver7", Platform::kUber, {AB::k25To34, G::kMale, Eth::kHispanicLatino, T::k2To5Years, Ed::kBachelors, Inc::k50To75k, WS::kPartTime}, 4.84, 6, 95, 8, 1},
    {"driver8", Platform::kUber, {AB::k35To44, G::kMale, Eth::kAsian, T::kOver5Years, Ed::kHighSchool, Inc::k25To50k, WS::kFullTime}, 4.97, 5, 64, 3, 0},
    {"driver9", Platform::kUber, {AB::k35To44, G::kMale, Eth::kWhite, T::kOver5Years, Ed::kBachelors, Inc::k75To100k, WS::kPartTime}, 4.9, 5, 58, 2, 0},
    {"petsitter1", Platform::kRover, {AB::k35To44, G::kFemale, Eth::kWhite, T::kOver5Years, Ed::kSomeCollege, Inc::kUnder25k, WS::kPartTime}, 5.0, 4, 280, 9, 3},
    {"petsitter2", Platform::kRover, {AB::k18To24, G::kFemale, Eth::kWhite, T::k6To12Months, Ed::kHighSchool, Inc::kUnder25k, WS::kPartTime}, 4.98, 4, 180, 7, 1},
    {"petsitter3", Platform::kRover, {AB::k25To34, G::kFemale, Eth::kWhite, T::k2To5Years, Ed::kHighSchool, Inc::kUnder25k, WS::kFullTime}, 5.0, 3, 140, 6, 1},
    {"petsitter4", Platform::kRover, {AB::k35To44, G::kFemale, Eth::kWhite, T::kOver10Years, Ed::kBachelors, Inc::k100To150k, WS::kPartTime}, 4.96, 2, 106, 4, 0},
    {"petsitter5", Platform::kRover, {AB::k25To34, G::kMale, Eth::kWhite, T::k6To12Months, Ed::kMasters, Inc::k100To150k, WS::kPartTime}, 4.99, 2, 47, 3, 0},
    {"freelancer1", Platform::kUpwork, {AB::k45To54, G::kFemale, Eth::kWhite, T::kUnder6Months, Ed::kAssociates, Inc::k25To50k, WS::kPartTime}, std::nullopt, 1, 20, 2, 1},
    {"freelancer2", Platform::kUpwork, {AB::k25To34, G::kFemale, Eth::kWhite, T::kOver5Years, Ed::kProfessional, Inc::k100To150k, WS::kPartTime}, std::nullopt, 1, 0, 2, 0},
}};

enum class Share { kAll, kWorkersOnly, kWorkersPolicymakers, kPolicymakersOnly };

struct FixtureStory {
  int author;
  StoryType type;
  Share share;
  std::vector<Tag> tags;
  std::vector<int> likers;
  std::string_view title;
  bool anonymous = false;
};

constexpr auto S = StoryType::kStrategy;
constexpr auto I = StoryType::kIssue;

const std::vector<FixtureStory>& stories() {
  static const std::vector<FixtureStory> kStories{
      {0, S, Share::kWorkersPolicymakers, {Tag::kFairPay}, {}, "Small claims strategy"},
      {0, S, Share::kAll, {Tag::kSafety}, {}, "Keeping the cabin camera running"},
      {0, S, Share::kWorkersOnly, {Tag::kFairPay}, {}, "Checking every fare receipt", true},
      {0, I, Share::kAll, {Tag::kCareGiving, Tag::kRatings}, {1, 2, 8}, "Rated down for a car seat"},
      {0, S, Share::kWorkersOnly, {Tag::kTechnology}, {0, 2, 7}, "Two phones on the dash"},
      {1, I, Share::kAll, {Tag::kStress}, {0, 6, 10}, "Deactivation scare"},
      {1, S, Share::kAll, {Tag::kTechnology}, {}, "Trip radar settings that help"},
      {1, S, Share::kAll, {Tag::kFairPay, Tag::kDiscrimination}, {3}, "Declining lowball pickups"},
      {1, S, Share::kAll, {Tag::kFairPay}, {0}, "Tracking surge before logging on"},
      {2, I, Share::kAll, {Tag::kSafety}, {0, 4}, "Late night pickup gone wrong", true},
      {2, I, Share::kAll, {Tag::kFairPay}, {7}, "Long pickup barely paid"},
      {3, S, Share::kAll, {Tag::kTechnology}, {2, 7, 11, 12}, "Voice commands while driving"},
      {4, S, Share::kAll, {Tag::kSafety}, {0, 11}, "Waiting in lit areas"},
      {5, S, Share::kAll, {Tag::kSafety, Tag::kOther}, {0, 10}, "Keeping a spare key"},
      {6, I, Share::kAll, {Tag::kSafety}, {7, 8}, "Passenger refused seatbelt", true},
      {7, S, Share::kAll, {Tag::kSafety}, {0}, "Meeting new dogs outside first"},
      {7, S, Share::kAll, {Tag::kStress, Tag::kRatings}, {0, 9}, "Handling a harsh review"},
      {7, S, Share::kAll, {Tag::kSafety, Tag::kTechnology}, {1, 5, 8}, "Sharing my location with a friend"},
      {7, S, Share::kAll, {Tag::kCareGiving, Tag::kWorkTime}, {0, 9, 10}, "Blocking off rest days"},
      {8, S, Share::kAll, {Tag::kSafety, Tag::kCareGiving}, {0}, "Medication checklist for boarders"},
      {8, I, Share::kAll, {Tag::kFairPay, Tag::kAlgorithms}, {3, 7}, "Search ranking dropped overnight"},
      {8, S, Share::kAll, {Tag::kCareGiving, Tag::kOther}, {7}, "Meet and greet questions", true},
      {9, I, Share::kWorkersOnly, {Tag::kSafety, Tag::kCareGiving, Tag::kStress}, {0}, "Bitten during a walk"},
      {9, S, Share::kAll, {Tag::kSafety}, {0, 1, 8, 9, 11}, "Double leash for reactive dogs"},
      {10, I, Share::kAll, {Tag::kRatings}, {9}, "One star for a late owner"},
      {11, S, Share::kPolicymakersOnly, {Tag::kStress, Tag::kWorkTime}, {}, "Fewer bookings than other apps"},
      {12, I, Share::kAll, {Tag::kOther}, {}, "Client vanished after delivery"},
  };
  return kStories;
}

AudienceSet audience_of(Share s) {
  switch (s) {
    case Share::kAll: return {true, true, true};
    case Share::kWorkersOnly: return {true, false, false};
    case Share::kWorkersPolicymakers: return {true, true, false};
    case Share::kPolicymakersOnly: return {false, true, false};
  }
  return {};
}

constexpr std::array<std::string_view, 64> kVocabulary{
    "the",      "a",        "rider",    "owner",   "client",   "dog",      "app",      "shift",
    "night",    "morning",  "traffic",  "fare",    "tip",      "rating",   "support",  "booking",
    "walk",     "visit",    "message",  "review",  "late",     "early",    "again",    "always",
    "never",    "because",  "after",    "before",  "while",    "when",     "then",     "so",
    "i",        "we",       "they",     "it",      "was",      "is",       "felt",     "asked",
    "waited",   "drove",    "paid",     "kept",    "learned",  "started",  "stopped",  "checked",
    "careful",  "tired",    "fair",     "unfair",  "quiet",    "busy",     "long",     "short",
    "and",      "but",      "with",     "for",     "from",     "about",    "other",    "workers",
};

std::string words(std::mt19937_64& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += kVocabulary[rng() % kVocabulary.size()];
    if (i % 12 == 11 || i == n - 1) out += '.';
  }
  return out;
}

int title_words(std::string_view title) {
  int n = 0;
  bool in = false;
  for (char c : title) {
    bool sp = c == ' ';
    if (!sp && !in) ++n;
    in = !sp;
  }
  return n;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Date study_day(int offset) {
  using namespace std::chrono;
  return Date(sys_days(2024y / June / 3) + days(offset));
}

IncomeDraft income_draft(std::mt19937_64& rng, Platform p, int day_offset) {
  IncomeDraft d;
  d.work_date = study_day(day_offset);
  switch (p) {
    case Platform::kUber:
      d.work_type = "trip";
      d.start_minute = static_cast<int>(uniform(rng, 6, 22) * 60 + uniform(rng, 0, 59));
      d.duration_minutes = uniform(rng, 8, 45);
      d.income_amount = Money::from_cents(uniform(rng, 800, 4200));
      d.tips = Money::from_cents(uniform(rng, 0, 3) * 100);
      d.platform_fee = Money::from_cents(uniform(rng, 150, 900));
      d.surge_amount = Money::from_cents(uniform(rng, 0, 1) * uniform(rng, 100, 600));
      d.distance_miles = static_cast<double>(uniform(rng, 20, 250)) / 10.0;
      d.unpaid_minutes = uniform(rng, 0, 15);
      break;
    case Platform::kRover: {
      static constexpr std::array<std::string_view, 4> kTypes{"walk", "drop_in", "house_sit", "boarding"};
      auto type = kTypes[rng() % kTypes.size()];
      d.work_type = std::string(type);
      d.start_minute = static_cast<int>(uniform(rng, 7, 19) * 60);
      d.duration_minutes = type == "walk" || type == "drop_in" ? uniform(rng, 30, 60) : uniform(rng, 240, 600);
      d.income_amount = Money::from_cents(uniform(rng, 2000, 9000));
      d.tips = Money::from_cents(uniform(rng, 0, 2) * 500);
      d.travel_minutes = uniform(rng, 5, 25);
      break;
    }
    case Platform::kUpwork: {
      d.work_type = uniform(rng, 0, 1) ? "hourly" : "fixed_price";
      d.start_minute = static_cast<int>(uniform(rng, 8, 16) * 60);
      d.duration_minutes = uniform(rng, 60, 240);
      d.income_amount = Money::from_cents(uniform(rng, 4000, 20000));
      d.experience_level = "intermediate";
      d.unpaid_minutes = uniform(rng, 0, 45);
      break;
    }
  }
  return d;
}

ExpenseDraft expense_draft(std::mt19937_64& rng, Platform p, int day_offset) {
  ExpenseDraft d;
  d.expense_date = study_day(day_offset);
  d.platform = p;
  d.amount = Money::from_cents(uniform(rng, 500, 6000));
  switch (p) {
    case Platform::kUber: d.expense_type = "fuel"; d.description = "gas"; break;
    case Platform::kRover: d.expense_type = "supplies"; d.description = "treats and waste bags"; break;
    case Platform::kUpwork: d.expense_type = "equipment"; d.description = "keyboard"; break;
  }
  return d;
}

}  // namespace

Status seed_field_study(Store& store) {
  if (!store.empty()) return Error(ErrorCode::kNonEmptyDb, "seeding needs an empty database");
  using namespace std::chrono;
  SequentialIds ids;
  ManualClock clock(sys_days(2024y / June / 3) + 8h, minutes(1));
  std::mt19937_64 rng(20240603);

  // Profiles.
  std::vector<WorkerProfile> profiles;
  WriteBatch batch;
  for (const auto& p : kParticipants) {
    WorkerProfile w;
    w.worker_id = ids.next("wkr");
    w.username = std::string(p.username);
    w.role = Role::kWorker;
    w.platforms = {p.platform};
    w.demographics = p.demographics;
    w.created_at = clock.now();
    w.rating_snapshot = p.rating;
    w.trends_visits = p.trends_visits;
    Record r;
    r.kind = RecordKind::kProfile;
    r.id = w.worker_id;
    r.owner = w.worker_id;
    r.version = 1;
    r.payload = w;
    batch.put(r);
    batch.append_audit(make_event(ids, clock, w.worker_id, SubjectKind::kProfile, w.worker_id, AuditAction::kCreate,
                                  json{{"after", r.payload}}));
    profiles.push_back(std::move(w));
  }

  // Income and expense uploads across the study week, one batch per worker.
  for (std::size_t u = 0; u < kParticipants.size(); ++u) {
    const auto& p = kParticipants[u];
    for (int i = 0; i < p.income_uploads; ++i) {
      IncomeContext ctx{ids.next("inc"), profiles[u].worker_id, profiles[u].platforms, EntrySource::kManual, ""};
      auto e = validate_income_entry(income_draft(rng, p.platform, i % 7), p.platform, ctx);
      if (!e) return e.error();
      Record r;
      r.kind = RecordKind::kIncome;
      r.id = e->entry_id;
      r.owner = e->worker_id;
      r.version = 1;
      r.payload = *e;
      batch.put(r);
      batch.append_audit(make_event(ids, clock, e->worker_id, SubjectKind::kIncome, e->entry_id,
                                    AuditAction::kCreate, json{{"after", r.payload}}));
    }
    for (int i = 0; i < p.expense_uploads; ++i) {
      ExpenseContext ctx{ids.next("exp"), profiles[u].worker_id, {}};
      auto e = validate_expense_entry(expense_draft(rng, p.platform, i % 7), ctx);
      if (!e) return e.error();
      Record r;
      r.kind = RecordKind::kExpense;
      r.id = e->entry_id;
      r.owner = e->worker_id;
      r.version = 1;
      r.payload = *e;
      batch.put(r);
      batch.append_audit(make_event(ids, clock, e->worker_id, SubjectKind::kExpense, e->entry_id,
                                    AuditAction::kCreate, json{{"after", r.payload}}));
    }
  }

  // Stories. Each author's word total is split across their stories.
  std::vector<int> story_count(kParticipants.size(), 0);
  for (const auto& s : stories()) ++story_count[s.author];
  std::vector<int> seen(kParticipants.size(), 0);
  for (const auto& fs : stories()) {
    const auto& author = profiles[fs.author];
    const int total = kParticipants[fs.author].story_words;
    const int n = story_count[fs.author];
    const int budget = total / n + (seen[fs.author]++ < total % n ? 1 : 0);
    const int body_words = budget - title_words(fs.title);
    if (body_words < 1) return Error(ErrorCode::kInternal, "fixture word budget too small");

    StoryDraft draft;
    draft.story_type = std::string(enum_name(fs.type));
    draft.display_mode = fs.anonymous ? "anonymous" : "username";
    for (Tag t : fs.tags) draft.tags.emplace_back(enum_name(t));
    draft.title = std::string(fs.title);
    draft.body = words(rng, body_words);
    draft.audience = audience_of(fs.share);
    StoryContext ctx{ids.next("sty"), author.worker_id, author.platforms, clock.now(),
                     [](const EntryId&) { return false; }};
    auto story = validate_story(draft, ctx);
    if (!story) return story.error();

    batch.append_audit(make_event(ids, clock, author.worker_id, SubjectKind::kStory, story->story_id,
                                  AuditAction::kCreate, json{{"after", json(*story)}}));
    for (int liker : fs.likers) {
      json before{{"likes", story->likes}};
      story->likes.insert(profiles[liker].worker_id);
      batch.append_audit(make_event(ids, clock, profiles[liker].worker_id, SubjectKind::kStory, story->story_id,
                                    AuditAction::kLike, json{{"before", before}, {"after", {{"likes", story->likes}}}}));
    }
    Record r;
    r.kind = RecordKind::kStory;
    r.id = story->story_id;
    r.owner = story->author_id;
    r.version = 1;
    r.payload = *story;
    batch.put(r);
  }
  return store.commit(batch);
}

Status seed_fixture(Store& store, std::string_view name) {
  if (name == kFieldStudyFixture) return seed_field_study(store);
  return Error(ErrorCode::kInvalidValue, "unknown fixture '" + std::string(name) + "'", "fixture");
}

}  // namespace g2g
