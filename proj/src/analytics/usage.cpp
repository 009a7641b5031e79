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

#include "g2g/analytics/usage.hpp"

#include <algorithm>
#include <cctype>

namespace g2g {

namespace {

template <typename T>
std::vector<T> load_all(const Store& store, const Snapshot& snap, RecordKind kind) {
  std::vector<T> out;
  for (const auto& rec : store.scan(kind, snap)) out.push_back(rec.payload.get<T>());
  return out;
}

}  // namespace

Dataset load_dataset(const Store& store, const Snapshot& snap) {
  Dataset d;
  d.profiles = load_all<WorkerProfile>(store, snap, RecordKind::kProfile);
  d.stories = load_all<Story>(store, snap, RecordKind::kStory);
  d.income = load_all<IncomeEntry>(store, snap, RecordKind::kIncome);
  d.expenses = load_all<ExpenseEntry>(store, snap, RecordKind::kExpense);
  std::sort(d.profiles.begin(), d.profiles.end(),
            [](const auto& a, const auto& b) { return a.worker_id < b.worker_id; });
  std::sort(d.stories.begin(), d.stories.end(), [](const auto& a, const auto& b) {
    return std::tie(a.created_at, a.story_id) < std::tie(b.created_at, b.story_id);
  });
  return d;
}

std::optional<Platform> primary_platform(const WorkerProfile& p) {
  if (p.platforms.empty()) return std::nullopt;
  return *p.platforms.begin();
}

std::size_t word_count(std::string_view text) {
  std::size_t n = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    bool space = std::isspace(c) != 0;
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

DescriptiveStats describe(std::vector<double> v) {
  DescriptiveStats s;
  if (v.empty()) return s;
  std::sort(v.begin(), v.end());
  for (double x : v) s.total += x;
  s.mean = s.total / static_cast<double>(v.size());
  std::size_t n = v.size();
  s.median = n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
  s.max = v.back();
  return s;
}

UsageStats usage_report(const Dataset& d) {
  UsageStats u;
  std::map<WorkerId, std::size_t> index;
  std::vector<std::optional<Platform>> home;
  for (const auto& p : d.profiles) {
    if (p.role != Role::kWorker) continue;
    index[p.worker_id] = home.size();
    home.push_back(primary_platform(p));
  }
  u.users = static_cast<std::int64_t>(home.size());
  for (auto m : all_enum_values<UsageMetric>()) u.per_user[m].assign(home.size(), 0.0);
  auto bump = [&](UsageMetric m, const WorkerId& who, double by) {
    auto it = index.find(who);
    if (it != index.end()) u.per_user[m][it->second] += by;
  };
  for (const auto& p : d.profiles) bump(UsageMetric::kTrendsVisits, p.worker_id, static_cast<double>(p.trends_visits));
  for (const auto& s : d.stories) {
    bump(UsageMetric::kStories, s.author_id, 1);
    bump(UsageMetric::kWords, s.author_id, static_cast<double>(word_count(s.title) + word_count(s.body)));
    for (const auto& liker : s.likes) {
      if (liker != s.author_id) bump(UsageMetric::kLikedStories, liker, 1);
    }
  }
  for (const auto& e : d.income) bump(UsageMetric::kIncomeUploads, e.worker_id, 1);
  for (const auto& e : d.expenses) bump(UsageMetric::kExpenseUploads, e.worker_id, 1);

  for (const auto& [metric, values] : u.per_user) {
    u.overall[metric] = describe(values);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (home[i]) u.per_platform_totals[*home[i]][metric] += static_cast<std::int64_t>(values[i]);
    }
  }
  for (const auto& h : home) {
    if (h) ++u.per_platform_users[*h];
  }
  return u;
}

std::string audience_label(const AudienceSet& a) {
  if (a.is_private()) return "private";
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(a.workers, "workers");
  add(a.policymakers, "policymakers");
  add(a.advocates, "advocates");
  return out;
}

StoryStatistics story_statistics(const Dataset& d) {
  StoryStatistics st;
  std::map<WorkerId, std::optional<Platform>> home;
  std::map<Platform, std::int64_t> users;
  for (const auto& p : d.profiles) {
    if (p.role != Role::kWorker) continue;
    home[p.worker_id] = primary_platform(p);
    if (auto h = primary_platform(p)) ++users[*h];
  }
  for (auto p : all_enum_values<Platform>()) {
    st.authored[p] = 0;
    for (auto q : all_enum_values<Platform>()) st.likes[p][q] = 0;
    for (auto t : all_enum_values<StoryType>()) st.types[t][p] = 0;
  }
  for (auto t : all_enum_values<Tag>()) {
    auto& row = st.tags[t];
    for (auto p : all_enum_values<Platform>()) row.usage[p] = row.liked_by[p] = 0;
    for (auto ty : all_enum_values<StoryType>()) row.by_type[ty] = 0;
  }
  for (const auto& s : d.stories) {
    std::optional<Platform> ap;
    if (auto it = home.find(s.author_id); it != home.end()) ap = it->second;
    if (!ap && !s.author_platforms.empty()) ap = *s.author_platforms.begin();
    if (!ap) continue;
    ++st.authored[*ap];
    ++st.audience[audience_label(s.audience)][*ap];
    ++st.types[s.story_type][*ap];
    for (auto t : s.tags) {
      auto& row = st.tags[t];
      ++row.usage[*ap];
      ++row.by_type[s.story_type];
      ++row.total_usage;
    }
    for (const auto& liker : s.likes) {
      auto it = home.find(liker);
      if (it == home.end() || !it->second) continue;
      ++st.likes[*it->second][*ap];
      for (auto t : s.tags) {
        ++st.tags[t].liked_by[*it->second];
        ++st.tags[t].total_liked;
      }
    }
  }
  for (auto p : all_enum_values<Platform>()) {
    st.mean_per_user[p] = users[p] ? static_cast<double>(st.authored[p]) / static_cast<double>(users[p]) : 0.0;
  }
  return st;
}

namespace {

template <typename K, typename V>
json keyed(const std::map<K, V>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<K, std::string>) j[k] = v;
    else j[std::string(enum_name(k))] = v;
  }
  return j;
}

}  // namespace

void to_json(json& j, const DescriptiveStats& s) {
  j = json{{"total", s.total}, {"mean", s.mean}, {"median", s.median}, {"max", s.max}};
}

void to_json(json& j, const UsageStats& u) {
  json per_platform = json::object();
  for (const auto& [p, totals] : u.per_platform_totals) {
    per_platform[std::string(enum_name(p))] = keyed(totals);
    per_platform[std::string(enum_name(p))]["users"] = u.per_platform_users.count(p) ? u.per_platform_users.at(p) : 0;
  }
  j = json{{"users", u.users}, {"overall", keyed(u.overall)}, {"per_platform", per_platform}};
}

void to_json(json& j, const StoryStatistics& s) {
  json likes = json::object();
  for (const auto& [liker, row] : s.likes) likes[std::string(enum_name(liker))] = keyed(row);
  json audience = json::object();
  for (const auto& [label, row] : s.audience) audience[label] = keyed(row);
  json types = json::object();
  for (const auto& [t, row] : s.types) types[std::string(enum_name(t))] = keyed(row);
  json tags = json::object();
  for (const auto& [t, row] : s.tags) {
    tags[std::string(enum_name(t))] = json{{"usage", keyed(row.usage)},
                                           {"total_usage", row.total_usage},
                                           {"by_type", keyed(row.by_type)},
                                           {"total_liked", row.total_liked},
                                           {"liked_by", keyed(row.liked_by)}};
  }
  j = json{{"authored", keyed(s.authored)},
           {"mean_per_user", keyed(s.mean_per_user)},
           {"likes", likes},
           {"audience", audience},
           {"types", types},
           {"tags", tags}};
}

}  // namespace g2g
