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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2g/core/crypto.hpp"
#include "g2g/domain/serialize.hpp"
#include "g2g/storage/store.hpp"

namespace g2g {

// {"before": {...}, "after": {...}} over top-level keys that differ.
json field_diff(const json& before, const json& after);

AuditEvent make_event(IdSource& ids, const Clock& clock, const WorkerId& actor, SubjectKind kind,
                      std::string subject_id, AuditAction action, json diff = json::object());

// Appends one event after checking the actor may act on the subject: only
// the owner creates, edits, deletes or rescopes; any worker may like.
Status record_action(Store& store, const AuditEvent& event);

// Every event for the subject, oldest first.
std::vector<AuditEvent> edit_history(const Store& store, SubjectKind kind, const std::string& id);

std::int64_t count_edits(const std::vector<AuditEvent>& history);

using SubjectKey = std::pair<SubjectKind, std::string>;

// Folds a whole log from genesis into the current payload of every live
// subject. An income delete also drops that entry from any story evidence,
// mirroring the cascade the feed applies in the same batch.
std::map<SubjectKey, json> replay(const std::vector<AuditEvent>& log);

}  // namespace g2g
