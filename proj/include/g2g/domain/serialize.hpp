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

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "g2g/domain/types.hpp"

namespace g2g {

using json = nlohmann::json;

template <typename E>
concept NamedEnum = std::is_enum_v<E> && requires { EnumNames<E>::names; };

template <NamedEnum E>
void to_json(json& j, E value) {
  j = std::string(enum_name(value));
}

template <NamedEnum E>
void from_json(const json& j, E& value) {
  auto parsed = parse_enum<E>(j.get<std::string>());
  if (!parsed) throw std::invalid_argument("unknown enum value '" + j.get<std::string>() + "'");
  value = *parsed;
}

void to_json(json& j, const Money& m);
void from_json(const json& j, Money& m);

json date_to_json(Date d);
Date date_from_json(const json& j);
json timestamp_to_json(Timestamp t);
Timestamp timestamp_from_json(const json& j);

void to_json(json& j, const Demographics& d);
void from_json(const json& j, Demographics& d);
void to_json(json& j, const WorkerProfile& p);
void from_json(const json& j, WorkerProfile& p);
void to_json(json& j, const AudienceSet& a);
void from_json(const json& j, AudienceSet& a);
void to_json(json& j, const MediaRef& m);
void from_json(const json& j, MediaRef& m);
void to_json(json& j, const Story& s);
void from_json(const json& j, Story& s);
void to_json(json& j, const IncomeEntry& e);
void from_json(const json& j, IncomeEntry& e);
void to_json(json& j, const ExpenseEntry& e);
void from_json(const json& j, ExpenseEntry& e);
void to_json(json& j, const AuditEvent& e);
void from_json(const json& j, AuditEvent& e);

// Optional members: absent key <=> nullopt.
template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->template get<T>();
  }
}

}  // namespace g2g
