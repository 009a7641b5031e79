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

#include "g2g/ingestion/trips_csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "g2g/core/crypto.hpp"

namespace g2g {

namespace {

constexpr std::array<std::string_view, 10> kColumns{
    "trip_id",    "request_time", "begin_time",   "end_time",   "distance_miles",
    "fare_total", "service_fee",  "surge_amount", "tip_amount", "city"};
// Columns that may be absent from the header.
constexpr std::string_view kOptionalColumn = "city";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Result<double> parse_decimal(std::string_view s) {
  s = trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return Error(ErrorCode::kInvalidValue, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

bool is_blank_row(const CsvRow& row) {
  return row.fields.size() == 1 && trim(row.fields[0]).empty();
}

}  // namespace

Result<std::vector<CsvRow>> read_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool row_has_content = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row = CsvRow{};
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          return Error(ErrorCode::kMalformedRow, "stray quote on line " + std::to_string(line));
        }
        in_quotes = true;
        field_was_quoted = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_row();
        row.line = ++line;
        break;
      default:
        if (field_was_quoted) {
          return Error(ErrorCode::kMalformedRow,
                       "text after closing quote on line " + std::to_string(line));
        }
        field += c;
        row_has_content = true;
    }
  }
  if (in_quotes) return Error(ErrorCode::kMalformedRow, "unterminated quoted field");
  if (row_has_content || !field.empty()) end_row();
  return rows;
}

Result<ParsedTrips> parse_trips_csv(std::string_view bytes, CsvMode mode) {
  ParsedTrips out;
  out.report.source_digest = sha256_hex(bytes);
  std::string_view text = bytes;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  auto rows_or = read_csv(text);
  if (!rows_or) return rows_or.error();
  auto& rows = *rows_or;
  std::size_t first = 0;
  while (first < rows.size() && is_blank_row(rows[first])) ++first;
  if (first == rows.size()) return Error(ErrorCode::kEmptyFile, "file contains no header row");

  // Header.
  const CsvRow& header = rows[first];
  std::map<std::string_view, std::size_t> index;
  std::vector<std::string> unknown;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    std::string_view name = trim(header.fields[i]);
    bool known = false;
    for (auto col : kColumns) {
      if (col == name) {
        index[col] = i;
        known = true;
      }
    }
    if (!known) unknown.emplace_back(name);
  }
  std::vector<std::string> missing;
  for (auto col : kColumns) {
    if (col != kOptionalColumn && !index.contains(col)) missing.emplace_back(col);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    Error e(ErrorCode::kMissingHeader, "header is missing column(s): " + list);
    e.field = missing.front();
    return e;
  }
  if (mode == CsvMode::kStrict && !unknown.empty()) {
    return Error(ErrorCode::kUnknownColumn, "unknown column '" + unknown.front() + "'", unknown.front());
  }

  std::set<std::string> seen_ids;
  for (std::size_t r = first + 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (is_blank_row(row)) continue;
    auto reject = [&](ErrorCode code, std::string msg, std::string field = {}) {
      out.report.rejected.push_back(RowError{row.line, Error(code, std::move(msg), std::move(field))});
    };
    if (row.fields.size() != header.fields.size()) {
      reject(ErrorCode::kMalformedRow, "expected " + std::to_string(header.fields.size()) +
                                           " fields, found " + std::to_string(row.fields.size()));
      continue;
    }
    auto cell = [&](std::string_view col) -> std::string_view {
      auto it = index.find(col);
      return it == index.end() ? std::string_view{} : trim(row.fields[it->second]);
    };

    TripRecord t;
    std::optional<Error> problem;
    auto note = [&](Error e, std::string_view col) {
      if (!problem) {
        e.field = std::string(col);
        problem = std::move(e);
      }
    };
    t.trip_id = std::string(cell("trip_id"));
    if (t.trip_id.empty()) note(Error(ErrorCode::kMissingRequired, "trip_id is empty"), "trip_id");

    auto ts = [&](std::string_view col, Timestamp& dst) {
      auto v = parse_timestamp(cell(col));
      if (v) dst = *v;
      else note(Error(ErrorCode::kMalformedRow, std::string(col) + ": " + v.error().message), col);
    };
    ts("request_time", t.request_time);
    ts("begin_time", t.begin_time);
    ts("end_time", t.end_time);

    if (auto d = parse_decimal(cell("distance_miles")); !d) {
      note(Error(ErrorCode::kMalformedRow, "distance_miles: " + d.error().message), "distance_miles");
    } else if (*d < 0) {
      note(Error(ErrorCode::kNegativeAmount, "distance_miles must be >= 0"), "distance_miles");
    } else {
      t.distance_miles = *d;
    }

    auto money = [&](std::string_view col, Money& dst, bool empty_is_zero) {
      std::string_view raw = cell(col);
      if (raw.empty() && empty_is_zero) {
        dst = Money{};
        return;
      }
      auto m = Money::parse(raw);
      if (!m) note(Error(ErrorCode::kMalformedRow, std::string(col) + ": " + m.error().message), col);
      else if (m->is_negative()) note(Error(ErrorCode::kNegativeAmount, std::string(col) + " must be >= 0"), col);
      else dst = *m;
    };
    money("fare_total", t.fare_total, false);
    money("service_fee", t.service_fee, true);
    money("surge_amount", t.surge_amount, true);
    money("tip_amount", t.tip_amount, true);
    if (auto c = cell("city"); !c.empty()) t.city = std::string(c);

    if (!problem && t.end_time < t.begin_time) {
      note(Error(ErrorCode::kTimeOrder, "end_time precedes begin_time"), "end_time");
    }
    if (problem) {
      out.report.rejected.push_back(RowError{row.line, std::move(*problem)});
      continue;
    }
    if (!seen_ids.insert(t.trip_id).second) {
      ++out.report.duplicates;
      continue;
    }
    out.records.push_back(std::move(t));
    out.lines.push_back(row.line);
  }
  out.report.accepted = out.records.size();
  return out;
}

namespace {

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string serialize_trips_csv(std::span<const TripRecord> records) {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += "\r\n";
  for (const auto& t : records) {
    out += csv_escape(t.trip_id) + ',' + format_timestamp(t.request_time) + ',' +
           format_timestamp(t.begin_time) + ',' + format_timestamp(t.end_time) + ',' +
           format_double(t.distance_miles) + ',' + t.fare_total.to_string() + ',' +
           t.service_fee.to_string() + ',' + t.surge_amount.to_string() + ',' +
           t.tip_amount.to_string() + ',' + csv_escape(t.city.value_or("")) + "\r\n";
  }
  return out;
}

std::string trip_dedupe_key(Platform platform, std::string_view trip_id) {
  std::string material(enum_name(platform));
  material += '\x1f';
  material += trip_id;
  return std::string(enum_name(platform)) + ":" + sha256_hex(material).substr(0, 32);
}

Result<IncomeEntry> normalize_trip(const TripRecord& trip, const WorkerId& worker,
                                   const EntryId& entry_id) {
  using namespace std::chrono;
  if (trip.end_time < trip.begin_time) {
    return Error(ErrorCode::kTimeOrder, "end_time precedes begin_time", "end_time");
  }
  auto ms = (trip.end_time - trip.begin_time).count();
  // Nearest minute, halves up.
  std::int64_t minutes = (ms + 30'000) / 60'000;
  if (minutes <= 0) {
    return Error(ErrorCode::kZeroDuration, "trip has no measurable duration", "end_time");
  }
  IncomeEntry e;
  e.entry_id = entry_id;
  e.worker_id = worker;
  e.platform = Platform::kUber;
  e.work_date = date_of(trip.begin_time);
  e.start_minute = minute_of_day(trip.begin_time);
  e.duration_minutes = minutes;
  e.work_type = WorkType::kTrip;
  e.income_amount = trip.fare_total + trip.tip_amount;
  e.tips = trip.tip_amount;
  e.platform_fee = trip.service_fee;
  e.surge_amount = trip.surge_amount;
  e.distance_miles = trip.distance_miles;
  e.city = trip.city;
  e.source = EntrySource::kCsvImport;
  e.dedupe_key = trip_dedupe_key(Platform::kUber, trip.trip_id);
  return e;
}

}  // namespace g2g
