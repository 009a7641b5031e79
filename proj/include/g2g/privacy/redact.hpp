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
#include <string>
#include <string_view>
#include <vector>

#include "g2g/core/enum_names.hpp"

namespace g2g {

enum class PiiKind { kStreetAddress, kPhone, kEmail };

template <> struct EnumNames<PiiKind> {
  static constexpr std::array<std::string_view, 3> names{"street_address", "phone", "email"};
};

struct Finding {
  PiiKind kind;
  std::size_t begin;  // byte offsets into the input
  std::size_t end;
  bool operator==(const Finding&) const = default;
};

struct RedactionResult {
  std::string redacted_text;
  std::vector<Finding> findings;
};

std::string_view placeholder(PiiKind kind);

RedactionResult redact_text(std::string_view text);

}  // namespace g2g
