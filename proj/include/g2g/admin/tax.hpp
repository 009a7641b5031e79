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

#include <optional>
#include <string>
#include <vector>

#include "g2g/core/result.hpp"
#include "g2g/core/time.hpp"
#include "g2g/domain/serialize.hpp"

namespace g2g {

struct TaxDay {
  Date date{};
  std::string label;
};

// One "YYYY-MM-DD label" per line; '#' starts a comment. Sorted on return.
Result<std::vector<TaxDay>> parse_tax_calendar(std::string_view text);
Result<std::vector<TaxDay>> load_tax_calendar(const std::string& path);

// Smallest date >= today. NO_CALENDAR when the calendar is empty or has
// nothing left this side of today.
Result<TaxDay> next_tax_day(const std::vector<TaxDay>& calendar, Date today);

enum class TaxAudience { kPartTime, kFullTime, kAll };

template <> struct EnumNames<TaxAudience> {
  static constexpr std::array<std::string_view, 3> names{"part_time", "full_time", "all"};
};

struct TaxResource {
  std::string title;
  TaxAudience audience = TaxAudience::kAll;
  std::optional<Platform> platform;
  std::string url;
  std::string body;
  bool next_tax_day = false;  // show alongside the next filing deadline
};

// A JSON array of resources. Every entry needs a title and a url or body.
Result<std::vector<TaxResource>> parse_tax_resources(const json& catalog);
Result<std::vector<TaxResource>> load_tax_resources(const std::string& path);

// Entries relevant to one worker: audience matches their work status (or is
// "all") and the platform, when set, is one of theirs.
std::vector<TaxResource> resources_for(const std::vector<TaxResource>& catalog, const WorkerProfile& worker);

void to_json(json& j, const TaxDay& d);
void to_json(json& j, const TaxResource& r);

}  // namespace g2g
