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

#include "g2g/core/result.hpp"

#include <algorithm>

namespace g2g {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "VALIDATION_FAILED";
    case ErrorCode::kEmptyTags: return "EMPTY_TAGS";
    case ErrorCode::kEmptyContent: return "EMPTY_CONTENT";
    case ErrorCode::kEvidenceNotOwned: return "EVIDENCE_NOT_OWNED";
    case ErrorCode::kUnknownTag: return "UNKNOWN_TAG";
    case ErrorCode::kMissingRequired: return "MISSING_REQUIRED";
    case ErrorCode::kNegativeAmount: return "NEGATIVE_AMOUNT";
    case ErrorCode::kNonpositiveAmount: return "NONPOSITIVE_AMOUNT";
    case ErrorCode::kFieldNotAllowedForPlatform: return "FIELD_NOT_ALLOWED_FOR_PLATFORM";
    case ErrorCode::kTipsExceedIncome: return "TIPS_EXCEED_INCOME";
    case ErrorCode::kInvalidValue: return "INVALID_VALUE";
    case ErrorCode::kPlatformNotInProfile: return "PLATFORM_NOT_IN_PROFILE";
    case ErrorCode::kMissingHeader: return "MISSING_HEADER";
    case ErrorCode::kUnknownColumn: return "UNKNOWN_COLUMN";
    case ErrorCode::kEmptyFile: return "EMPTY_FILE";
    case ErrorCode::kMalformedRow: return "MALFORMED_ROW";
    case ErrorCode::kTimeOrder: return "TIME_ORDER";
    case ErrorCode::kZeroDuration: return "ZERO_DURATION";
    case ErrorCode::kOwnershipMismatch: return "OWNERSHIP_MISMATCH";
    case ErrorCode::kInvalidK: return "INVALID_K";
    case ErrorCode::kUnauthorizedActor: return "UNAUTHORIZED_ACTOR";
    case ErrorCode::kEmptyRange: return "EMPTY_RANGE";
    case ErrorCode::kUnknownDimension: return "UNKNOWN_DIMENSION";
    case ErrorCode::kUnknownAttribute: return "UNKNOWN_ATTRIBUTE";
    case ErrorCode::kEmptyPlan: return "EMPTY_PLAN";
    case ErrorCode::kUnacknowledgedRedaction: return "UNACKNOWLEDGED_REDACTION";
    case ErrorCode::kInvalidCursor: return "INVALID_CURSOR";
    case ErrorCode::kNotVisible: return "NOT_VISIBLE";
    case ErrorCode::kRoleCannotLike: return "ROLE_CANNOT_LIKE";
    case ErrorCode::kVersionConflict: return "VERSION_CONFLICT";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kImmutableKind: return "IMMUTABLE_KIND";
    case ErrorCode::kTokenUsed: return "TOKEN_USED";
    case ErrorCode::kTokenExpired: return "TOKEN_EXPIRED";
    case ErrorCode::kTokenInvalid: return "TOKEN_INVALID";
    case ErrorCode::kUsernameTaken: return "USERNAME_TAKEN";
    case ErrorCode::kUnauthenticated: return "UNAUTHENTICATED";
    case ErrorCode::kForbidden: return "FORBIDDEN";
    case ErrorCode::kRateLimited: return "RATE_LIMITED";
    case ErrorCode::kPlatformRequiredForWorker: return "PLATFORM_REQUIRED_FOR_WORKER";
    case ErrorCode::kPlatformNotAllowedForRole: return "PLATFORM_NOT_ALLOWED_FOR_ROLE";
    case ErrorCode::kNonEmptyDb: return "NON_EMPTY_DB";
    case ErrorCode::kNoCalendar: return "NO_CALENDAR";
    case ErrorCode::kBadRequest: return "BAD_REQUEST";
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "INTERNAL";
}

bool Error::has_violation(ErrorCode c) const {
  if (code == c) return true;
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Error& v) { return v.code == c; });
}

}  // namespace g2g
