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

#include <cassert>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace g2g {

// Stable error identifiers. The wire name of each code is its
// SCREAMING_SNAKE spelling (see error_code_name).
enum class ErrorCode {
  kValidation,
  kEmptyTags,
  kEmptyContent,
  kEvidenceNotOwned,
  kUnknownTag,
  kMissingRequired,
  kNegativeAmount,
  kNonpositiveAmount,
  kFieldNotAllowedForPlatform,
  kTipsExceedIncome,
  kInvalidValue,
  kPlatformNotInProfile,
  kMissingHeader,
  kUnknownColumn,
  kEmptyFile,
  kMalformedRow,
  kTimeOrder,
  kZeroDuration,
  kOwnershipMismatch,
  kInvalidK,
  kUnauthorizedActor,
  kEmptyRange,
  kUnknownDimension,
  kUnknownAttribute,
  kEmptyPlan,
  kUnacknowledgedRedaction,
  kInvalidCursor,
  kNotVisible,
  kRoleCannotLike,
  kVersionConflict,
  kNotFound,
  kImmutableKind,
  kTokenUsed,
  kTokenExpired,
  kTokenInvalid,
  kUsernameTaken,
  kUnauthenticated,
  kForbidden,
  kRateLimited,
  kPlatformRequiredForWorker,
  kPlatformNotAllowedForRole,
  kNonEmptyDb,
  kNoCalendar,
  kBadRequest,
  kIo,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

struct Error {
  ErrorCode code = ErrorCode::kInternal;
  std::string message;
  std::string field;
  // Populated for kValidation: every violation found, not just the first.
  std::vector<Error> violations;

  Error() = default;
  Error(ErrorCode c, std::string msg = {}, std::string f = {})
      : code(c), message(std::move(msg)), field(std::move(f)) {}

  bool has_violation(ErrorCode c) const;
};

// Value-or-error. Kept deliberately small: no monadic helpers beyond what
// callers here actually use.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  Result(Error error) : state_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() & {
    assert(ok());
    return std::get<0>(state_);
  }
  const T& value() const& {
    assert(ok());
    return std::get<0>(state_);
  }
  T&& value() && {
    assert(ok());
    return std::get<0>(std::move(state_));
  }
  const Error& error() const {
    assert(!ok());
    return std::get<1>(state_);
  }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

 private:
  std::variant<T, Error> state_;
};

using Status = Result<std::monostate>;

inline Status ok_status() { return std::monostate{}; }

}  // namespace g2g
