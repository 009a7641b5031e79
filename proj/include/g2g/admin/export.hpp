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

#include <filesystem>
#include <string>

#include "g2g/core/result.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

inline constexpr int kExportSchemaVersion = 1;
inline constexpr std::string_view kEmptyExportWarning = "EMPTY_EXPORT";

// "workers" | "policymakers" | "advocates" (singular accepted). Admin is not
// an audience.
Result<Role> parse_export_audience(std::string_view text);
std::string_view audience_name(Role audience);

struct ExportBundle {
  Role audience = Role::kPolicymaker;
  std::string stories_ndjson;   // one redacted story per line, oldest first
  std::string insights_ndjson;  // one k-suppressed table per line
  json manifest;
  std::size_t story_count = 0;
  std::size_t table_count = 0;
};

// Stories whose audience admits `audience`, rendered as that audience sees
// them, and every insight table at threshold k. Never carries ledger rows.
Result<ExportBundle> build_export(const Store& store, Role audience, int k);

// Writes stories.ndjson, insights.ndjson and manifest.json into dir.
Status write_export(const ExportBundle& bundle, const std::filesystem::path& dir);

}  // namespace g2g
