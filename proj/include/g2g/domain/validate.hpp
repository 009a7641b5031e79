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

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2g/core/result.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

// User-entered drafts. Enumerations arrive as raw strings so unknown values
// are reported as violations instead of parse failures.
struct StoryDraft {
  std::optional<std::string> story_type;
  std::optional<std::string> display_mode;
  std::vector<std::string> tags;
  std::string title;
  std::string body;
  std::optional<MediaRef> media;
  std::vector<EntryId> evidence;
  bool show_evidence_city = false;
  AudienceSet audience;
  std::optional<Timestamp> expires_at;
};

struct StoryContext {
  StoryId story_id;
  WorkerId author_id;
  std::set<Platform> author_platforms;
  Timestamp now{};
  // True iff the entry exists and belongs to author_id.
  std::function<bool(const EntryId&)> owns_entry;
};

Result<Story> validate_story(const StoryDraft& draft, const StoryContext& ctx);

struct IncomeDraft {
  std::optional<Date> work_date;
  std::optional<int> start_minute;
  std::optional<std::int64_t> duration_minutes;
  std::optional<std::string> work_type;
  std::optional<Money> income_amount;
  std::optional<Money> tips;
  std::optional<Money> platform_fee;
  std::optional<Money> surge_amount;
  std::optional<double> distance_miles;
  std::optional<std::string> city;
  std::optional<std::int64_t> travel_minutes;
  std::optional<std::string> experience_level;
  std::optional<std::int64_t> unpaid_minutes;
  std::optional<std::string> notes;
  std::optional<Timestamp> expires_at;
};

struct IncomeContext {
  EntryId entry_id;
  WorkerId worker_id;
  std::set<Platform> caller_platforms;
  EntrySource source = EntrySource::kManual;
  // Empty for manual entries: those get a per-entry key and never dedupe.
  std::string dedupe_key;
};

Result<IncomeEntry> validate_income_entry(const IncomeDraft& draft, Platform platform,
                                          const IncomeContext& ctx);

struct ExpenseDraft {
  std::optional<Date> expense_date;
  std::optional<Money> amount;
  std::optional<Platform> platform;
  std::optional<std::string> expense_type;
  std::optional<std::string> description;
  std::optional<MediaRef> photo;
  bool recurring = false;
  std::optional<Timestamp> expires_at;
};

struct ExpenseContext {
  EntryId entry_id;
  WorkerId worker_id;
  // Resolves a photo blob digest; required when a photo is attached.
  std::function<bool(const std::string&)> blob_exists;
};

Result<ExpenseEntry> validate_expense_entry(const ExpenseDraft& draft, const ExpenseContext& ctx);

// Wire-format readers. Type errors in individual fields are collected into
// a kValidation error, mirroring validate_*.
Result<StoryDraft> story_draft_from_json(const json& j);
// Returns the draft and the platform it names.
Result<std::pair<IncomeDraft, std::optional<Platform>>> income_draft_from_json(const json& j);
Result<ExpenseDraft> expense_draft_from_json(const json& j);

// Draft of an existing record, for PATCH-style edits: the patch JSON is
// merged over this and re-validated.
json story_to_draft_json(const Story& s);
json income_to_draft_json(const IncomeEntry& e);
json expense_to_draft_json(const ExpenseEntry& e);

}  // namespace g2g
