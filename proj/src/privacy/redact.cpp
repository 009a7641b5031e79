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

#include "g2g/privacy/redact.hpp"

#include <algorithm>
#include <regex>

namespace g2g {

namespace {

std::string street_suffixes() {
  static constexpr std::string_view kWords[] = {
      "street", "st", "avenue", "ave", "road", "rd", "boulevard", "blvd", "drive", "dr",
      "lane", "ln", "court", "ct", "way", "place", "pl", "terrace", "parkway", "pkwy",
      "highway", "hwy", "circle", "cir", "square", "sq", "trail", "pike"};
  std::string alt;
  for (auto w : kWords) {
    if (!alt.empty()) alt += '|';
    alt += '[';
    alt += static_cast<char>(w[0] - 'a' + 'A');
    alt += w[0];
    alt += ']';
    alt += w.substr(1);
  }
  return alt;
}

struct Pattern {
  PiiKind kind;
  std::regex re;
};

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> kPatterns = [] {
    std::vector<Pattern> p;
    p.push_back({PiiKind::kEmail, std::regex(R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})")});
    p.push_back({PiiKind::kPhone,
                 std::regex(R"((\+?1[-. ]?)?(\(\d{3}\) ?|\b\d{3}[-. ])\d{3}[-. ]\d{4}\b)")});
    // House number (optional unit letter), one to four name words (capitalized or ordinal), suffix.
    p.push_back({PiiKind::kStreetAddress,
                 std::regex(R"(\b\d{1,6}[A-Z]?( +([A-Z][A-Za-z'-]*|\d+(st|nd|rd|th))){1,4} +()" +
                            street_suffixes() + R"()\b)")});
    return p;
  }();
  return kPatterns;
}

}  // namespace

std::string_view placeholder(PiiKind kind) {
  switch (kind) {
    case PiiKind::kStreetAddress: return "[ADDRESS]";
    case PiiKind::kPhone: return "[PHONE]";
    case PiiKind::kEmail: return "[EMAIL]";
  }
  return "";
}

RedactionResult redact_text(std::string_view text) {
  std::vector<Finding> found;
  for (const auto& p : patterns()) {
    for (std::cregex_iterator it(text.data(), text.data() + text.size(), p.re), end; it != end; ++it) {
      auto begin = static_cast<std::size_t>(it->position(0));
      found.push_back({p.kind, begin, begin + static_cast<std::size_t>(it->length(0))});
    }
  }
  // Earliest start wins; on ties the longer span, then pattern order.
  std::stable_sort(found.begin(), found.end(), [](const Finding& a, const Finding& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    return a.end > b.end;
  });
  RedactionResult out;
  std::size_t cursor = 0;
  for (const auto& f : found) {
    if (f.begin < cursor) continue;
    out.redacted_text.append(text.substr(cursor, f.begin - cursor));
    out.redacted_text.append(placeholder(f.kind));
    out.findings.push_back(f);
    cursor = f.end;
  }
  out.redacted_text.append(text.substr(cursor));
  return out;
}

}  // namespace g2g
