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

#include <map>
#include <string>
#include <vector>

#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

struct Dataset {
  std::vector<WorkerProfile> profiles;
  std::vector<Story> stories;
  std::vector<IncomeEntry> income;
  std::vector<ExpenseEntry> expenses;
};

Dataset load_dataset(const Store& store, const Snapshot& snap);

// A worker's home platform for per-platform tables: the first of their
// platforms in enum order.
std::optional<Platform> primary_platform(const WorkerProfile& p);
std::size_t word_count(std::string_view text);

struct DescriptiveStats {
  double total = 0;
  double mean = 0;
  double median = 0;
  double max = 0;
};

DescriptiveStats describe(std::vector<double> per_user);

enum class UsageMetric { kStories, kWords, kLikedStories, kIncomeUploads, kExpenseUploads, kTrendsVisits };

template <> struct EnumNames<UsageMetric> {
  static constexpr std::array<std::string_view, 6> names{
      "shared_stories", "story_words", "liked_stories", "income_uploads", "expense_uploads", "trends_visits"};
};

struct UsageStats {
  std::int64_t users = 0;
  // Per worker, in profile order; "liked" excludes likes on one's own stories.
  std::map<UsageMetric, std::vector<double>> per_user;
  std::map<UsageMetric, DescriptiveStats> overall;
  std::map<Platform, std::map<UsageMetric, std::int64_t>> per_platform_totals;
  std::map<Platform, std::int64_t> per_platform_users;
};

UsageStats usage_report(const Dataset& d);

struct StoryStatistics {
  std::map<Platform, std::int64_t> authored;
  std::map<Platform, double> mean_per_user;
  // likes[liker platform][author platform], self-likes included.
  std::map<Platform, std::map<Platform, std::int64_t>> likes;
  // Audience label -> author platform -> count.
  std::map<std::string, std::map<Platform, std::int64_t>> audience;
  std::map<StoryType, std::map<Platform, std::int64_t>> types;
  struct TagRow {
    std::map<Platform, std::int64_t> usage;
    std::map<StoryType, std::int64_t> by_type;
    std::map<Platform, std::int64_t> liked_by;  // liker platform
    std::int64_t total_usage = 0;
    std::int64_t total_liked = 0;
  };
  std::map<Tag, TagRow> tags;
};

// "workers", "workers+policymakers", "private", ...
std::string audience_label(const AudienceSet& a);

StoryStatistics story_statistics(const Dataset& d);

void to_json(json& j, const DescriptiveStats& s);
void to_json(json& j, const UsageStats& u);
void to_json(json& j, const StoryStatistics& s);

}  // namespace g2g
