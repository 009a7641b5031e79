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

#include "g2g/domain/validate.hpp"

#include <algorithm>
#include <cctype>

namespace g2g {

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

Error violation(ErrorCode code, std::string field, std::string message) {
  return Error(code, std::move(message), std::move(field));
}

Error validation_failure(std::vector<Error> violations) {
  Error e(ErrorCode::kValidation, "draft failed validation");
  e.violations = std::move(violations);
  return e;
}

template <typename T>
void check_nonnegative(const std::optional<T>& v, const char* field, std::vector<Error>& out) {
  if (!v) return;
  bool negative;
  if constexpr (std::is_same_v<T, Money>) {
    negative = v->is_negative();
  } else {
    negative = *v < 0;
  }
  if (negative) {
    out.push_back(violation(ErrorCode::kNegativeAmount, field, std::string(field) + " must be >= 0"));
  }
}

}  // namespace

Platform platform_of(WorkType type) {
  switch (type) {
    case WorkType::kTrip:
      return Platform::kUber;
    case WorkType::kWalk:
    case WorkType::kDropIn:
    case WorkType::kHouseSit:
    case WorkType::kBoarding:
    case WorkType::kDaycare:
      return Platform::kRover;
    case WorkType::kFixedPrice:
    case WorkType::kHourly:
      return Platform::kUpwork;
  }
  return Platform::kUber;
}

bool AudienceSet::admits(Role role) const {
  switch (role) {
    case Role::kWorker: return workers;
    case Role::kPolicymaker: return policymakers;
    case Role::kAdvocate: return advocates;
    case Role::kAdmin: return false;
  }
  return false;
}

Result<Story> validate_story(const StoryDraft& draft, const StoryContext& ctx) {
  std::vector<Error> errors;
  Story story;
  story.story_id = ctx.story_id;
  story.author_id = ctx.author_id;
  story.author_platforms = ctx.author_platforms;
  story.created_at = ctx.now;

  if (!draft.story_type) {
    errors.push_back(violation(ErrorCode::kMissingRequired, "story_type", "story_type is required"));
  } else if (auto t = parse_enum<StoryType>(*draft.story_type)) {
    story.story_type = *t;
  } else {
    errors.push_back(violation(ErrorCode::kInvalidValue, "story_type",
                               "story_type must be strategy or issue"));
  }

  if (draft.display_mode) {
    if (auto m = parse_enum<DisplayMode>(*draft.display_mode)) {
      story.display_mode = *m;
    } else {
      errors.push_back(violation(ErrorCode::kInvalidValue, "display_mode",
                                 "display_mode must be username or anonymous"));
    }
  }

  if (draft.tags.empty()) {
    errors.push_back(violation(ErrorCode::kEmptyTags, "tags", "at least one tag is required"));
  }
  for (std::size_t i = 0; i < draft.tags.size(); ++i) {
    if (auto tag = parse_enum<Tag>(draft.tags[i])) {
      story.tags.insert(*tag);
    } else {
      errors.push_back(violation(ErrorCode::kUnknownTag, "tags[" + std::to_string(i) + "]",
                                 "unknown tag '" + draft.tags[i] + "'"));
    }
  }

  if (blank(draft.title) && blank(draft.body)) {
    errors.push_back(violation(ErrorCode::kEmptyContent, "body", "a title or body is required"));
  }
  story.title = draft.title;
  story.body = draft.body;

  for (std::size_t i = 0; i < draft.evidence.size(); ++i) {
    const auto& id = draft.evidence[i];
    if (!ctx.owns_entry || !ctx.owns_entry(id)) {
      errors.push_back(violation(ErrorCode::kEvidenceNotOwned, "evidence[" + std::to_string(i) + "]",
                                 "entry '" + id + "' is not owned by the author"));
    } else if (std::find(story.evidence.begin(), story.evidence.end(), id) == story.evidence.end()) {
      story.evidence.push_back(id);
    }
  }

  if (draft.media) {
    const auto& m = *draft.media;
    bool is_blob = !m.blob_digest.empty();
    bool is_link = !m.external_url.empty();
    if (is_blob == is_link) {
      errors.push_back(violation(ErrorCode::kInvalidValue, "media",
                                 "media must be exactly one of an uploaded image or a link"));
    } else if (is_blob && m.content_type.rfind("image/", 0) != 0) {
      errors.push_back(violation(ErrorCode::kInvalidValue, "media", "only images can be uploaded"));
    }
    story.media = m;
  }

  story.show_evidence_city = draft.show_evidence_city;
  story.audience = draft.audience;
  story.expires_at = draft.expires_at;

  if (!errors.empty()) return validation_failure(std::move(errors));
  return story;
}

Result<IncomeEntry> validate_income_entry(const IncomeDraft& draft, Platform platform,
                                          const IncomeContext& ctx) {
  std::vector<Error> errors;
  IncomeEntry e;
  e.entry_id = ctx.entry_id;
  e.worker_id = ctx.worker_id;
  e.platform = platform;
  e.source = ctx.source;
  e.dedupe_key = ctx.dedupe_key.empty() ? "manual:" + ctx.entry_id : ctx.dedupe_key;

  if (!ctx.caller_platforms.contains(platform)) {
    errors.push_back(violation(ErrorCode::kPlatformNotInProfile, "platform",
                               std::string("caller does not work on ") +
                                   std::string(enum_name(platform))));
  }

  if (draft.work_date) e.work_date = *draft.work_date;
  else errors.push_back(violation(ErrorCode::kMissingRequired, "date", "date is required"));

  if (!draft.duration_minutes) {
    errors.push_back(violation(ErrorCode::kMissingRequired, "duration_minutes",
                               "duration_minutes is required"));
  } else if (*draft.duration_minutes <= 0) {
    errors.push_back(violation(ErrorCode::kInvalidValue, "duration_minutes",
                               "duration_minutes must be > 0"));
  } else {
    e.duration_minutes = *draft.duration_minutes;
  }

  if (!draft.work_type) {
    errors.push_back(violation(ErrorCode::kMissingRequired, "work_type", "work_type is required"));
  } else if (auto wt = parse_enum<WorkType>(*draft.work_type); !wt || platform_of(*wt) != platform) {
    errors.push_back(violation(ErrorCode::kInvalidValue, "work_type",
                               "work_type '" + *draft.work_type + "' is not a " +
                                   std::string(enum_name(platform)) + " work type"));
  } else {
    e.work_type = *wt;
  }

  if (!draft.income_amount) {
    errors.push_back(violation(ErrorCode::kMissingRequired, "income_amount",
                               "income_amount is required"));
  } else {
    e.income_amount = *draft.income_amount;
  }

  if (draft.start_minute && (*draft.start_minute < 0 || *draft.start_minute >= 24 * 60)) {
    errors.push_back(violation(ErrorCode::kInvalidValue, "start_time", "start time out of range"));
  }

  check_nonnegative(draft.income_amount, "income_amount", errors);
  check_nonnegative(draft.tips, "tips", errors);
  check_nonnegative(draft.platform_fee, "platform_fee", errors);
  check_nonnegative(draft.surge_amount, "surge_amount", errors);
  check_nonnegative(draft.distance_miles, "distance_miles", errors);
  check_nonnegative(draft.travel_minutes, "travel_minutes", errors);
  check_nonnegative(draft.unpaid_minutes, "unpaid_minutes", errors);

  auto only_on = [&](bool present, Platform owner, const char* field) {
    if (present && platform != owner) {
      errors.push_back(violation(ErrorCode::kFieldNotAllowedForPlatform, field,
                                 std::string(field) + " is only recorded for " +
                                     std::string(enum_name(owner))));
    }
  };
  only_on(draft.surge_amount.has_value(), Platform::kUber, "surge_amount");
  only_on(draft.distance_miles.has_value(), Platform::kUber, "distance_miles");
  only_on(draft.city.has_value(), Platform::kUber, "city");
  only_on(draft.travel_minutes.has_value(), Platform::kRover, "travel_minutes");
  only_on(draft.experience_level.has_value(), Platform::kUpwork, "experience_level");

  if (draft.experience_level) {
    if (auto lvl = parse_enum<ExperienceLevel>(*draft.experience_level)) {
      e.experience_level = *lvl;
    } else {
      errors.push_back(violation(ErrorCode::kInvalidValue, "experience_level",
                                 "unknown experience level '" + *draft.experience_level + "'"));
    }
  }

  if (draft.tips && draft.income_amount && *draft.tips > *draft.income_amount) {
    errors.push_back(violation(ErrorCode::kTipsExceedIncome, "tips",
                               "tips cannot exceed income_amount"));
  }

  e.start_minute = draft.start_minute;
  e.tips = draft.tips;
  e.platform_fee = draft.platform_fee;
  e.surge_amount = draft.surge_amount;
  e.distance_miles = draft.distance_miles;
  e.city = draft.city;
  e.travel_minutes = draft.travel_minutes;
  e.unpaid_minutes = draft.unpaid_minutes;
  e.notes = draft.notes;
  e.expires_at = draft.expires_at;

  if (!errors.empty()) return validation_failure(std::move(errors));
  return e;
}

Result<ExpenseEntry> validate_expense_entry(const ExpenseDraft& draft, const ExpenseContext& ctx) {
  std::vector<Error> errors;
  ExpenseEntry e;
  e.entry_id = ctx.entry_id;
  e.worker_id = ctx.worker_id;

  if (draft.expense_date) e.expense_date = *draft.expense_date;
  else errors.push_back(violation(ErrorCode::kMissingRequired, "date", "date is required"));

  if (!draft.amount) {
    errors.push_back(violation(ErrorCode::kMissingRequired, "amount", "amount is required"));
  } else if (draft.amount->cents() <= 0) {
    errors.push_back(violation(ErrorCode::kNonpositiveAmount, "amount", "amount must be > 0"));
  } else {
    e.amount = *draft.amount;
  }

  if (draft.expense_type) {
    if (auto t = parse_enum<ExpenseType>(*draft.expense_type)) {
      e.expense_type = *t;
    } else {
      errors.push_back(violation(ErrorCode::kInvalidValue, "expense_type",
                                 "unknown expense type '" + *draft.expense_type + "'"));
    }
  }

  if (draft.photo) {
    if (draft.photo->blob_digest.empty() || !ctx.blob_exists ||
        !ctx.blob_exists(draft.photo->blob_digest)) {
      errors.push_back(violation(ErrorCode::kInvalidValue, "photo", "photo reference does not resolve"));
    }
  }

  e.platform = draft.platform;
  e.description = draft.description;
  e.photo = draft.photo;
  e.recurring = draft.recurring;
  e.expires_at = draft.expires_at;

  if (!errors.empty()) return validation_failure(std::move(errors));
  return e;
}

// ---------------------------------------------------------------------------
// Wire readers

namespace {

class FieldReader {
 public:
  explicit FieldReader(const json& j) : j_(j) {}

  const json* find(const char* key) const {
    if (!j_.is_object()) return nullptr;
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  template <typename Fn>
  void read(const char* key, Fn&& fn) {
    const json* v = find(key);
    if (!v) return;
    try {
      fn(*v);
    } catch (const std::exception& ex) {
      errors.push_back(violation(ErrorCode::kInvalidValue, key, ex.what()));
    }
  }

  void string(const char* key, std::optional<std::string>& out) {
    read(key, [&](const json& v) { out = v.get<std::string>(); });
  }

  void money(const char* key, std::optional<Money>& out) {
    read(key, [&](const json& v) { out = v.get<Money>(); });
  }

  void integer(const char* key, std::optional<std::int64_t>& out) {
    read(key, [&](const json& v) {
      if (!v.is_number_integer()) throw std::invalid_argument(std::string(key) + " must be an integer");
      out = v.get<std::int64_t>();
    });
  }

  void date(const char* key, std::optional<Date>& out) {
    read(key, [&](const json& v) { out = date_from_json(v); });
  }

  void timestamp(const char* key, std::optional<Timestamp>& out) {
    read(key, [&](const json& v) { out = timestamp_from_json(v); });
  }

  Error failure() { return validation_failure(std::move(errors)); }

  std::vector<Error> errors;

 private:
  const json& j_;
};

Result<int> parse_clock_time(const std::string& s) {
  // "HH:MM"
  if (s.size() != 5 || s[2] != ':' || !std::isdigit(static_cast<unsigned char>(s[0])) ||
      !std::isdigit(static_cast<unsigned char>(s[1])) || !std::isdigit(static_cast<unsigned char>(s[3])) ||
      !std::isdigit(static_cast<unsigned char>(s[4]))) {
    return Error(ErrorCode::kInvalidValue, "start_time must be HH:MM");
  }
  int h = (s[0] - '0') * 10 + (s[1] - '0');
  int m = (s[3] - '0') * 10 + (s[4] - '0');
  if (h > 23 || m > 59) return Error(ErrorCode::kInvalidValue, "start_time out of range");
  return h * 60 + m;
}

std::string format_clock_time(int minute) {
  std::string out;
  out += static_cast<char>('0' + minute / 600);
  out += static_cast<char>('0' + (minute / 60) % 10);
  out += ':';
  out += static_cast<char>('0' + (minute % 60) / 10);
  out += static_cast<char>('0' + minute % 10);
  return out;
}

}  // namespace

Result<StoryDraft> story_draft_from_json(const json& j) {
  if (!j.is_object()) return Error(ErrorCode::kBadRequest, "story draft must be a JSON object");
  FieldReader r(j);
  StoryDraft d;
  r.string("story_type", d.story_type);
  r.string("display_mode", d.display_mode);
  r.read("tags", [&](const json& v) { d.tags = v.get<std::vector<std::string>>(); });
  r.read("title", [&](const json& v) { d.title = v.get<std::string>(); });
  r.read("body", [&](const json& v) { d.body = v.get<std::string>(); });
  r.read("evidence", [&](const json& v) { d.evidence = v.get<std::vector<EntryId>>(); });
  r.read("show_evidence_city", [&](const json& v) { d.show_evidence_city = v.get<bool>(); });
  r.read("audience", [&](const json& v) {
    if (v.is_array()) {
      for (const auto& a : v) {
        auto name = a.get<std::string>();
        if (name == "workers") d.audience.workers = true;
        else if (name == "policymakers") d.audience.policymakers = true;
        else if (name == "advocates") d.audience.advocates = true;
        else throw std::invalid_argument("unknown audience '" + name + "'");
      }
    } else {
      d.audience = v.get<AudienceSet>();
    }
  });
  r.read("media_url", [&](const json& v) {
    MediaRef m;
    m.external_url = v.get<std::string>();
    d.media = m;
  });
  // Digest of an uploaded image; the content type is filled in by the caller.
  r.read("image", [&](const json& v) {
    MediaRef m = d.media.value_or(MediaRef{});
    m.blob_digest = v.get<std::string>();
    d.media = m;
  });
  r.timestamp("retain_until", d.expires_at);
  if (!r.errors.empty()) return r.failure();
  return d;
}

Result<std::pair<IncomeDraft, std::optional<Platform>>> income_draft_from_json(const json& j) {
  if (!j.is_object()) return Error(ErrorCode::kBadRequest, "income draft must be a JSON object");
  FieldReader r(j);
  IncomeDraft d;
  std::optional<Platform> platform;
  r.read("platform", [&](const json& v) {
    auto p = parse_enum<Platform>(v.get<std::string>());
    if (!p) throw std::invalid_argument("unknown platform '" + v.get<std::string>() + "'");
    platform = *p;
  });
  r.date("date", d.work_date);
  r.read("start_time", [&](const json& v) {
    auto m = parse_clock_time(v.get<std::string>());
    if (!m) throw std::invalid_argument(m.error().message);
    d.start_minute = *m;
  });
  r.integer("duration_minutes", d.duration_minutes);
  r.string("work_type", d.work_type);
  r.money("income_amount", d.income_amount);
  r.money("tips", d.tips);
  r.money("platform_fee", d.platform_fee);
  r.money("surge_amount", d.surge_amount);
  r.read("distance_miles", [&](const json& v) { d.distance_miles = v.get<double>(); });
  r.string("city", d.city);
  r.integer("travel_minutes", d.travel_minutes);
  r.string("experience_level", d.experience_level);
  r.integer("unpaid_minutes", d.unpaid_minutes);
  r.string("notes", d.notes);
  r.timestamp("retain_until", d.expires_at);
  if (!platform && r.find("platform") == nullptr) {
    r.errors.push_back(violation(ErrorCode::kMissingRequired, "platform", "platform is required"));
  }
  if (!r.errors.empty()) return r.failure();
  return std::make_pair(d, platform);
}

Result<ExpenseDraft> expense_draft_from_json(const json& j) {
  if (!j.is_object()) return Error(ErrorCode::kBadRequest, "expense draft must be a JSON object");
  FieldReader r(j);
  ExpenseDraft d;
  r.date("date", d.expense_date);
  r.money("amount", d.amount);
  r.read("platform", [&](const json& v) {
    auto p = parse_enum<Platform>(v.get<std::string>());
    if (!p) throw std::invalid_argument("unknown platform '" + v.get<std::string>() + "'");
    d.platform = *p;
  });
  r.string("expense_type", d.expense_type);
  r.string("description", d.description);
  r.read("photo", [&](const json& v) {
    MediaRef m;
    m.blob_digest = v.get<std::string>();
    m.content_type = "image";
    d.photo = m;
  });
  r.read("recurring", [&](const json& v) { d.recurring = v.get<bool>(); });
  r.timestamp("retain_until", d.expires_at);
  if (!r.errors.empty()) return r.failure();
  return d;
}

json story_to_draft_json(const Story& s) {
  json tags = json::array();
  for (auto t : s.tags) tags.push_back(std::string(enum_name(t)));
  json j{{"story_type", s.story_type},
         {"display_mode", s.display_mode},
         {"tags", tags},
         {"title", s.title},
         {"body", s.body},
         {"evidence", s.evidence},
         {"show_evidence_city", s.show_evidence_city},
         {"audience", s.audience}};
  if (s.media && !s.media->blob_digest.empty()) j["image"] = s.media->blob_digest;
  if (s.media && !s.media->external_url.empty()) j["media_url"] = s.media->external_url;
  if (s.expires_at) j["retain_until"] = timestamp_to_json(*s.expires_at);
  return j;
}

json income_to_draft_json(const IncomeEntry& e) {
  json j{{"platform", e.platform},
         {"date", date_to_json(e.work_date)},
         {"duration_minutes", e.duration_minutes},
         {"work_type", e.work_type},
         {"income_amount", e.income_amount}};
  if (e.start_minute) j["start_time"] = format_clock_time(*e.start_minute);
  put_optional(j, "tips", e.tips);
  put_optional(j, "platform_fee", e.platform_fee);
  put_optional(j, "surge_amount", e.surge_amount);
  put_optional(j, "distance_miles", e.distance_miles);
  put_optional(j, "city", e.city);
  put_optional(j, "travel_minutes", e.travel_minutes);
  put_optional(j, "experience_level", e.experience_level);
  put_optional(j, "unpaid_minutes", e.unpaid_minutes);
  put_optional(j, "notes", e.notes);
  if (e.expires_at) j["retain_until"] = timestamp_to_json(*e.expires_at);
  return j;
}

json expense_to_draft_json(const ExpenseEntry& e) {
  json j{{"date", date_to_json(e.expense_date)}, {"amount", e.amount}, {"recurring", e.recurring}};
  put_optional(j, "platform", e.platform);
  put_optional(j, "expense_type", e.expense_type);
  put_optional(j, "description", e.description);
  if (e.photo) j["photo"] = e.photo->blob_digest;
  if (e.expires_at) j["retain_until"] = timestamp_to_json(*e.expires_at);
  return j;
}

}  // namespace g2g
