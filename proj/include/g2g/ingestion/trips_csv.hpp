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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2g/core/money.hpp"
#include "g2g/core/result.hpp"
#include "g2g/core/time.hpp"
#include "g2g/domain/types.hpp"

namespace g2g {

// One row of the canonical trip export:
//   trip_id,request_time,begin_time,end_time,distance_miles,fare_total,
//   service_fee,surge_amount,tip_amount,city
struct TripRecord {
  std::string trip_id;
  Timestamp request_time{};
  Timestamp begin_time{};
  Timestamp end_time{};
  double distance_miles = 0;
  Money fare_total;
  Money service_fee;
  Money surge_amount;
  Money tip_amount;
  std::optional<std::string> city;

  bool operator==(const TripRecord&) const = default;
};

struct RowError {
  std::size_t line = 0;  // 1-based physical line where the row starts
  Error error;
};

struct ImportReport {
  std::size_t accepted = 0;
  std::size_t duplicates = 0;
  std::vector<RowError> rejected;
  std::string source_digest;

  std::size_t rows() const { return accepted + duplicates + rejected.size(); }
};

enum class CsvMode { kStrict, kLenient };

struct ParsedTrips {
  std::vector<TripRecord> records;
  std::vector<std::size_t> lines;  // parallel to records
  // accepted = records.size(); duplicates = repeated trip_ids in this file.
  ImportReport report;
};

// RFC-4180 tokenizer. Returns rows with the physical line each starts on.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
Result<std::vector<CsvRow>> read_csv(std::string_view text);

// File-level failures (EMPTY_FILE, MISSING_HEADER, UNKNOWN_COLUMN) reject the
// whole file; row-level failures are isolated into report.rejected.
Result<ParsedTrips> parse_trips_csv(std::string_view bytes, CsvMode mode = CsvMode::kStrict);

// Canonical-schema writer; parse_trips_csv(serialize_trips_csv(r)) == r.
std::string serialize_trips_csv(std::span<const TripRecord> records);

std::string trip_dedupe_key(Platform platform, std::string_view trip_id);

// Maps a trip to an uber IncomeEntry. ZERO_DURATION when the trip rounds to
// less than one minute.
Result<IncomeEntry> normalize_trip(const TripRecord& trip, const WorkerId& worker,
                                   const EntryId& entry_id);

}  // namespace g2g
