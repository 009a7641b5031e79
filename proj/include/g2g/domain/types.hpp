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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2g/core/enum_names.hpp"
#include "g2g/core/money.hpp"
#include "g2g/core/time.hpp"

namespace g2g {

using WorkerId = std::string;
using StoryId = std::string;
using EntryId = std::string;

enum class Role { kWorker, kPolicymaker, kAdvocate, kAdmin };
enum class Platform { kUber, kRover, kUpwork };
enum class Tag {
  kSafety,
  kFairPay,
  kCareGiving,
  kStress,
  kTechnology,
  kOther,
  kRatings,
  kWorkTime,
  kAlgorithms,
  kDiscrimination,
};
enum class StoryType { kStrategy, kIssue };
enum class DisplayMode { kUsername, kAnonymous };

// Work types are one closed set; each value belongs to exactly one platform.
enum class WorkType {
  kTrip,
  kWalk,
  kDropIn,
  kHouseSit,
  kBoarding,
  kDaycare,
  kFixedPrice,
  kHourly,
};
enum class ExperienceLevel { kEntry, kIntermediate, kExpert };
enum class ExpenseType { kFuel, kSupplies, kEquipment, kFees, kOther };
enum class EntrySource { kManual, kCsvImport };

enum class AgeBand { k18To24, k25To34, k35To44, k45To54, k55To64, k65Plus };
enum class Gender { kMale, kFemale, kNonBinary, kSelfDescribed };
enum class Ethnicity {
  kWhite,
  kAsian,
  kHispanicLatino,
  kBlack,
  kNativeAmerican,
  kPacificIslander,
  kMultiracial,
  kOther,
};
enum class TenureBand { kUnder6Months, k6To12Months, k1To2Years, k2To5Years, kOver5Years, kOver10Years };
enum class Education {
  kHighSchool,
  kSomeCollege,
  kAssociates,
  kBachelors,
  kMasters,
  kProfessional,
  kDoctorate,
};
enum class IncomeBand { kUnder25k, k25To50k, k50To75k, k75To100k, k100To150k, kOver150k };
enum class WorkStatus { kFullTime, kPartTime };

enum class SubjectKind { kProfile, kStory, kIncome, kExpense, kInvite, kBlob };
enum class AuditAction { kCreate, kEdit, kDelete, kLike, kUnlike, kShareScopeChange };

template <> struct EnumNames<Role> {
  static constexpr std::array<std::string_view, 4> names{"worker", "policymaker", "advocate", "admin"};
};
template <> struct EnumNames<Platform> {
  static constexpr std::array<std::string_view, 3> names{"uber", "rover", "upwork"};
};
template <> struct EnumNames<Tag> {
  static constexpr std::array<std::string_view, 10> names{
      "safety", "fair_pay", "care_giving", "stress", "technology",
      "other", "ratings", "work_time", "algorithms", "discrimination"};
};
template <> struct EnumNames<StoryType> {
  static constexpr std::array<std::string_view, 2> names{"strategy", "issue"};
};
template <> struct EnumNames<DisplayMode> {
  static constexpr std::array<std::string_view, 2> names{"username", "anonymous"};
};
template <> struct EnumNames<WorkType> {
  static constexpr std::array<std::string_view, 8> names{
      "trip", "walk", "drop_in", "house_sit", "boarding", "daycare", "fixed_price", "hourly"};
};
template <> struct EnumNames<ExperienceLevel> {
  static constexpr std::array<std::string_view, 3> names{"entry", "intermediate", "expert"};
};
template <> struct EnumNames<ExpenseType> {
  static constexpr std::array<std::string_view, 5> names{"fuel", "supplies", "equipment", "fees", "other"};
};
template <> struct EnumNames<EntrySource> {
  static constexpr std::array<std::string_view, 2> names{"manual", "csv_import"};
};
template <> struct EnumNames<AgeBand> {
  static constexpr std::array<std::string_view, 6> names{"18-24", "25-34", "35-44", "45-54", "55-64", "65+"};
};
template <> struct EnumNames<Gender> {
  static constexpr std::array<std::string_view, 4> names{"male", "female", "non_binary", "self_described"};
};
template <> struct EnumNames<Ethnicity> {
  static constexpr std::array<std::string_view, 8> names{
      "white", "asian", "hispanic_latino", "black", "native_american", "pacific_islander", "multiracial", "other"};
};
template <> struct EnumNames<TenureBand> {
  static constexpr std::array<std::string_view, 6> names{"<0.5y", "0.5-1y", "1-2y", "2-5y", ">5y", ">10y"};
};
template <> struct EnumNames<Education> {
  static constexpr std::array<std::string_view, 7> names{
      "high_school", "some_college", "associates", "bachelors", "masters", "professional", "doctorate"};
};
template <> struct EnumNames<IncomeBand> {
  static constexpr std::array<std::string_view, 6> names{"<25k", "25-50k", "50-75k", "75-100k", "100-150k", ">150k"};
};
template <> struct EnumNames<WorkStatus> {
  static constexpr std::array<std::string_view, 2> names{"full_time", "part_time"};
};
template <> struct EnumNames<SubjectKind> {
  static constexpr std::array<std::string_view, 6> names{"profile", "story", "income", "expense", "invite", "blob"};
};
template <> struct EnumNames<AuditAction> {
  static constexpr std::array<std::string_view, 6> names{
      "create", "edit", "delete", "like", "unlike", "share_scope_change"};
};

Platform platform_of(WorkType type);

struct Demographics {
  std::optional<AgeBand> age_band;
  std::optional<Gender> gender;
  std::optional<Ethnicity> ethnicity;
  std::optional<TenureBand> tenure_band;
  std::optional<Education> education;
  std::optional<IncomeBand> household_income_band;
  std::optional<WorkStatus> work_status;

  bool operator==(const Demographics&) const = default;
};

struct WorkerProfile {
  WorkerId worker_id;
  std::string username;
  Role role = Role::kWorker;
  std::set<Platform> platforms;
  Demographics demographics;
  Timestamp created_at{};
  std::optional<double> rating_snapshot;
  // Server-side count of personal-trends reads.
  std::int64_t trends_visits = 0;

  bool operator==(const WorkerProfile&) const = default;
};

struct AudienceSet {
  bool workers = false;
  bool policymakers = false;
  bool advocates = false;

  bool is_private() const { return !workers && !policymakers && !advocates; }
  // Admins are never a story audience.
  bool admits(Role role) const;
  bool operator==(const AudienceSet&) const = default;
};

// Images are stored as content-addressed blobs; video only as a link.
struct MediaRef {
  std::string blob_digest;  // empty when external
  std::string content_type;
  std::string external_url;  // empty when blob

  bool operator==(const MediaRef&) const = default;
};

struct Story {
  StoryId story_id;
  WorkerId author_id;
  // Author's platforms at posting time; cohort-level, not identity.
  std::set<Platform> author_platforms;
  DisplayMode display_mode = DisplayMode::kUsername;
  StoryType story_type = StoryType::kStrategy;
  std::set<Tag> tags;
  std::string title;
  std::string body;
  std::optional<MediaRef> media;
  std::vector<EntryId> evidence;
  bool show_evidence_city = false;
  AudienceSet audience;
  Timestamp created_at{};
  std::int64_t edit_count = 0;
  std::set<WorkerId> likes;
  // Pre-redaction text, visible only to the author.
  std::optional<std::string> original_title;
  std::optional<std::string> original_body;
  std::optional<Timestamp> expires_at;

  bool operator==(const Story&) const = default;
};

struct IncomeEntry {
  EntryId entry_id;
  WorkerId worker_id;
  Platform platform = Platform::kUber;
  Date work_date{};
  // Minutes since UTC midnight; needed for hour-of-day analytics.
  std::optional<int> start_minute;
  std::int64_t duration_minutes = 0;
  WorkType work_type = WorkType::kTrip;
  Money income_amount;
  std::optional<Money> tips;
  std::optional<Money> platform_fee;
  std::optional<Money> surge_amount;         // uber only
  std::optional<double> distance_miles;      // uber only
  std::optional<std::string> city;           // uber only
  std::optional<std::int64_t> travel_minutes;  // rover only
  std::optional<ExperienceLevel> experience_level;  // upwork only
  std::optional<std::int64_t> unpaid_minutes;
  std::optional<std::string> notes;
  EntrySource source = EntrySource::kManual;
  std::string dedupe_key;
  std::optional<Timestamp> expires_at;

  bool operator==(const IncomeEntry&) const = default;
};

struct ExpenseEntry {
  EntryId entry_id;
  WorkerId worker_id;
  std::optional<Platform> platform;
  Date expense_date{};
  Money amount;
  std::optional<ExpenseType> expense_type;
  std::optional<std::string> description;
  std::optional<MediaRef> photo;
  bool recurring = false;
  std::optional<Timestamp> expires_at;

  bool operator==(const ExpenseEntry&) const = default;
};

struct AuditEvent {
  std::string event_id;
  WorkerId actor_id;
  SubjectKind subject_kind = SubjectKind::kStory;
  std::string subject_id;
  AuditAction action = AuditAction::kCreate;
  Timestamp at{};
  // {"before": {...}, "after": {...}} restricted to changed fields. Create
  // carries the full record in "after"; delete carries nothing.
  nlohmann::json diff = nlohmann::json::object();

  bool operator==(const AuditEvent&) const = default;
};

struct ViewerContext {
  WorkerId viewer_id;
  Role role = Role::kWorker;
  std::set<Platform> platforms;
};

}  // namespace g2g
