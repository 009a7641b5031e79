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

#include "g2g/core/time.hpp"

#include <cstdio>

namespace g2g {

namespace {

using namespace std::chrono;

bool read_digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

std::string pad(int v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

Result<Date> parse_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !read_digits(text, 0, 4, y) || !read_digits(text, 5, 2, m) ||
      !read_digits(text, 8, 2, d)) {
    return Error(ErrorCode::kInvalidValue, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  Date date{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!date.ok()) {
    return Error(ErrorCode::kInvalidValue, "no such calendar date: " + std::string(text));
  }
  return date;
}

std::string format_date(Date d) {
  return pad(static_cast<int>(d.year()), 4) + "-" + pad(static_cast<unsigned>(d.month()), 2) +
         "-" + pad(static_cast<unsigned>(d.day()), 2);
}

Result<Timestamp> parse_timestamp(std::string_view text) {
  auto bad = [&](const char* why) {
    return Error(ErrorCode::kInvalidValue,
                 std::string(why) + ": '" + std::string(text) + "'");
  };
  if (text.size() < 20) return bad("timestamp too short");
  auto date = parse_date(text.substr(0, 10));
  if (!date) return bad("bad date part");
  if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') return bad("missing 'T'");
  int hh = 0, mm = 0, ss = 0;
  if (!read_digits(text, 11, 2, hh) || text[13] != ':' || !read_digits(text, 14, 2, mm) ||
      text[16] != ':' || !read_digits(text, 17, 2, ss)) {
    return bad("bad time part");
  }
  if (hh > 23 || mm > 59 || ss > 59) return bad("time out of range");
  std::size_t pos = 19;
  int millis = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int scale = 100;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      millis += (text[pos] - '0') * scale;
      scale /= 10;
      ++pos;
    }
    if (pos == start) return bad("empty fraction");
  }
  if (pos >= text.size()) return bad("missing UTC offset");
  int offset_minutes = 0;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    int sign = text[pos] == '-' ? -1 : 1;
    int oh = 0, om = 0;
    if (!read_digits(text, pos + 1, 2, oh)) return bad("bad offset");
    std::size_t mpos = pos + 3;
    if (mpos < text.size() && text[mpos] == ':') ++mpos;
    if (!read_digits(text, mpos, 2, om)) return bad("bad offset");
    if (oh > 23 || om > 59) return bad("offset out of range");
    offset_minutes = sign * (oh * 60 + om);
    pos = mpos + 2;
  } else {
    return bad("missing UTC offset");
  }
  if (pos != text.size()) return bad("trailing characters");
  auto local = sys_days(*date) + hours(hh) + minutes(mm) + seconds(ss) + milliseconds(millis);
  return Timestamp(local - minutes(offset_minutes));
}

std::string format_timestamp(Timestamp ts) {
  auto day = floor<days>(ts);
  Date d{day};
  hh_mm_ss<milliseconds> tod{ts - day};
  std::string out = format_date(d) + "T" + pad(static_cast<int>(tod.hours().count()), 2) + ":" +
                    pad(static_cast<int>(tod.minutes().count()), 2) + ":" +
                    pad(static_cast<int>(tod.seconds().count()), 2);
  if (tod.subseconds().count() != 0) {
    out += "." + pad(static_cast<int>(tod.subseconds().count()), 3);
  }
  out += "Z";
  return out;
}

Date date_of(Timestamp ts) { return Date{floor<days>(ts)}; }

Timestamp start_of(Date d) { return Timestamp(sys_days(d)); }

int minute_of_day(Timestamp ts) {
  auto since = ts - floor<days>(ts);
  return static_cast<int>(duration_cast<minutes>(since).count());
}

int weekday_index(Date d) {
  return static_cast<int>(weekday{sys_days(d)}.iso_encoding()) - 1;
}

IsoWeek iso_week(Date d) {
  // The ISO week belongs to the year containing its Thursday.
  sys_days day{d};
  int wd = weekday_index(d);
  sys_days thursday = day - days(wd) + days(3);
  Date th{thursday};
  sys_days jan1{th.year() / January / 1};
  int week = static_cast<int>((thursday - jan1).count() / 7) + 1;
  return IsoWeek{static_cast<int>(th.year()), week};
}

std::string format_iso_week(IsoWeek w) {
  return pad(w.year, 4) + "-W" + pad(w.week, 2);
}

}  // namespace g2g
