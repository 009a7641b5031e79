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

#include "g2g/privacy/audit.hpp"

#include <algorithm>

namespace g2g {

json field_diff(const json& before, const json& after) {
  json b = json::object();
  json a = json::object();
  for (const auto& [key, value] : before.items()) {
    auto it = after.find(key);
    if (it == after.end() || *it != value) b[key] = value;
  }
  for (const auto& [key, value] : after.items()) {
    auto it = before.find(key);
    if (it == before.end() || *it != value) a[key] = value;
  }
  return json{{"before", std::move(b)}, {"after", std::move(a)}};
}

AuditEvent make_event(IdSource& ids, const Clock& clock, const WorkerId& actor, SubjectKind kind,
                      std::string subject_id, AuditAction action, json diff) {
  AuditEvent e;
  e.event_id = ids.next("evt");
  e.actor_id = actor;
  e.subject_kind = kind;
  e.subject_id = std::move(subject_id);
  e.action = action;
  e.at = clock.now();
  e.diff = std::move(diff);
  return e;
}

namespace {

std::optional<RecordKind> record_kind(SubjectKind kind) {
  switch (kind) {
    case SubjectKind::kProfile: return RecordKind::kProfile;
    case SubjectKind::kStory: return RecordKind::kStory;
    case SubjectKind::kIncome: return RecordKind::kIncome;
    case SubjectKind::kExpense: return RecordKind::kExpense;
    case SubjectKind::kInvite: return RecordKind::kInvite;
    case SubjectKind::kBlob: return RecordKind::kBlob;
  }
  return std::nullopt;
}

}  // namespace

Status record_action(Store& store, const AuditEvent& event) {
  if (event.actor_id.empty()) return Error(ErrorCode::kUnauthorizedActor, "event has no actor");
  auto kind = record_kind(event.subject_kind);
  bool owner_only = event.action != AuditAction::kLike && event.action != AuditAction::kUnlike;
  if (kind && owner_only && event.action != AuditAction::kCreate) {
    auto rec = store.get(*kind, event.subject_id);
    if (rec && !rec->owner.empty() && rec->owner != event.actor_id) {
      return Error(ErrorCode::kUnauthorizedActor,
                   event.actor_id + " may not act on " + event.subject_id);
    }
  }
  return store.append_audit(event);
}

std::vector<AuditEvent> edit_history(const Store& store, SubjectKind kind, const std::string& id) {
  auto snap = store.snapshot();
  return store.audit_history(kind, id, snap);
}

std::int64_t count_edits(const std::vector<AuditEvent>& history) {
  return std::count_if(history.begin(), history.end(),
                       [](const AuditEvent& e) { return e.action == AuditAction::kEdit; });
}

std::map<SubjectKey, json> replay(const std::vector<AuditEvent>& log) {
  std::map<SubjectKey, json> state;
  for (const auto& e : log) {
    SubjectKey key{e.subject_kind, e.subject_id};
    switch (e.action) {
      case AuditAction::kCreate:
        state[key] = e.diff.value("after", json::object());
        break;
      case AuditAction::kDelete:
        state.erase(key);
        if (e.subject_kind == SubjectKind::kIncome) {
          for (auto& [k, payload] : state) {
            if (k.first != SubjectKind::kStory) continue;
            auto it = payload.find("evidence");
            if (it == payload.end() || !it->is_array()) continue;
            json kept = json::array();
            for (const auto& id : *it) {
              if (id != e.subject_id) kept.push_back(id);
            }
            *it = std::move(kept);
          }
        }
        break;
      default: {
        auto it = state.find(key);
        if (it == state.end()) break;
        json& cur = it->second;
        const json after = e.diff.value("after", json::object());
        const json before = e.diff.value("before", json::object());
        for (const auto& [field, value] : before.items()) {
          if (!after.contains(field)) cur.erase(field);
        }
        for (const auto& [field, value] : after.items()) cur[field] = value;
      }
    }
  }
  return state;
}

}  // namespace g2g
