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

#include "g2g/service/cron.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace g2g {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

// Sets bits lo..hi of the field; returns false on a malformed term.
template <std::size_t N>
bool parse_field(std::string_view field, int lo, int hi, std::bitset<N>& bits) {
  for (auto term : split(field, ',')) {
    int step = 1;
    if (auto slash = term.find('/'); slash != std::string_view::npos) {
      if (!to_int(term.substr(slash + 1), step) || step < 1) return false;
      term = term.substr(0, slash);
    }
    int a = lo, b = hi;
    if (term != "*") {
      if (auto dash = term.find('-'); dash != std::string_view::npos) {
        if (!to_int(term.substr(0, dash), a) || !to_int(term.substr(dash + 1), b)) return false;
      } else {
        if (!to_int(term, a)) return false;
        b = step > 1 ? hi : a;
      }
    }
    if (a < lo || b > hi || a > b) return false;
    for (int v = a; v <= b; v += step) bits.set(static_cast<std::size_t>(v));
  }
  return true;
}

}  // namespace

Result<CronSchedule> parse_cron(std::string_view spec) {
  if (spec == "@hourly") spec = "0 * * * *";
  else if (spec == "@daily" || spec == "@midnight") spec = "0 0 * * *";
  else if (spec == "@weekly") spec = "0 0 * * 0";
  else if (spec == "@monthly") spec = "0 0 1 * *";

  std::istringstream in{std::string(spec)};
  std::vector<std::string> f;
  for (std::string tok; in >> tok;) f.push_back(tok);
  auto bad = [&](std::string what) {
    return Error(ErrorCode::kInvalidValue, "bad cron schedule '" + std::string(spec) + "': " + what);
  };
  if (f.size() != 5) return bad("expected five fields");

  CronSchedule c;
  std::bitset<8> dow;
  if (!parse_field(f[0], 0, 59, c.minutes)) return bad("minute");
  if (!parse_field(f[1], 0, 23, c.hours)) return bad("hour");
  if (!parse_field(f[2], 1, 31, c.days)) return bad("day of month");
  if (!parse_field(f[3], 1, 12, c.months)) return bad("month");
  if (!parse_field(f[4], 0, 7, dow)) return bad("day of week");
  for (std::size_t d = 0; d < 7; ++d) c.weekdays[d] = dow[d];
  if (dow[7]) c.weekdays.set(0);
  c.any_day = f[2] == "*";
  c.any_weekday = f[4] == "*";
  return c;
}

Timestamp next_run(const CronSchedule& c, Timestamp after) {
  using namespace std::chrono;
  auto t = floor<minutes>(after) + minutes(1);
  // A valid schedule always matches within a few years (Feb 29 at worst).
  const auto limit = t + days(366 * 5);
  for (; t < limit; t += minutes(1)) {
    auto day = floor<days>(t);
    year_month_day ymd{day};
    hh_mm_ss hms{t - day};
    if (!c.months[static_cast<unsigned>(ymd.month())]) {
      t = sys_days(year_month_day{ymd.year() / ymd.month() / 1} + months(1)) - minutes(1);
      continue;
    }
    bool dom = c.days[static_cast<unsigned>(ymd.day())];
    bool dow = c.weekdays[weekday(day).c_encoding()];
    // Classic cron: when both day fields are restricted, either may match.
    bool day_ok = c.any_day ? (c.any_weekday || dow) : (c.any_weekday ? dom : (dom || dow));
    if (!day_ok) {
      t = day + days(1) - minutes(1);
      continue;
    }
    if (!c.hours[static_cast<std::size_t>(hms.hours().count())]) {
      t = day + hms.hours() + hours(1) - minutes(1);
      continue;
    }
    if (c.minutes[static_cast<std::size_t>(hms.minutes().count())]) return time_point_cast<milliseconds>(t);
  }
  return time_point_cast<milliseconds>(limit);
}

}  // namespace g2g
