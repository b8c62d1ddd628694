// Copyright 2026 The Accucheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACCUCHECK_SESSION_H_
#define ACCUCHECK_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "accucheck/annotation.h"
#include "accucheck/rational.h"
#include "json.hpp"

namespace accucheck {

enum class DocState { kPending, kInProgress, kDone };
std::string_view DocStateName(DocState s);

struct Suggestion {
  enum class Decision { kOpen, kAccepted, kRejected };
  Mistake mistake;  // never modified after the session is created
  Decision decision = Decision::kOpen;
};

struct DocSession {
  std::string doc_id;
  DocState state = DocState::kPending;
  MistakeList working;
  std::vector<Suggestion> suggestions;
  std::int64_t version = 0;
  int edits = 0;
  std::int64_t opened_ms = 0;  // first edit
  std::int64_t done_ms = 0;
};

struct AnnotationSession {
  std::string session_id;
  std::string annotator_id;
  std::vector<std::string> doc_ids;
  std::map<std::string, DocSession> docs;
  std::int64_t created_ms = 0;
};

// A single edit. Existing working mistakes are addressed by their span, which
// is unique because working lists never overlap.
struct EditCommand {
  enum class Kind {
    kAcceptPre,
    kRejectPre,
    kAdd,
    kRemove,
    kMoveSpan,
    kSetCategory,
    kSetNote,
    kMarkDone,
    kReopen,
  };
  Kind kind = Kind::kAdd;
  int suggestion = -1;           // accept_pre / reject_pre
  int target_start = -1;         // remove / move_span / set_*
  int target_end = -1;
  int start = -1;                // add / move_span
  int end = -1;
  MistakeCategory category = MistakeCategory::kOther;  // add / set_category
  std::string note;              // add / set_note
};

std::string_view EditKindName(EditCommand::Kind k);
std::optional<EditCommand::Kind> ParseEditKind(std::string_view name);

nlohmann::json ToJson(const Mistake &m);
nlohmann::json ToJson(const EditCommand &c);
// Throws SessionError(kInvalid) on malformed input.
EditCommand EditCommandFromJson(const nlohmann::json &j);

class SessionError : public std::runtime_error {
 public:
  enum class Code {
    kNotFound,    // unknown session or document
    kInvalid,     // malformed request
    kRejected,    // would break the working list (overlap, bad span, done doc)
    kStaleWrite,  // version mismatch
    kLocked,      // another client holds the lease
  };
  SessionError(Code code, const std::string &what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct SessionMetrics {
  int docs_done = 0;
  int edits = 0;
  int suggestions = 0;           // over done docs
  int accepted = 0;              // over done docs
  Ratio acceptance_rate;         // undefined without suggestions
  std::map<std::string, std::int64_t> elapsed_ms;  // done docs only
};

struct Lease {
  std::string holder;
  std::int64_t expires_ms = 0;
};

// Sessions persisted under one directory. Every acknowledged edit is
// appended to the session's log and flushed to disk before Apply returns;
// opening a store replays snapshots and logs. Close() (or the destructor)
// compacts each log into a snapshot.
class SessionStore {
 public:
  using Clock = std::function<std::int64_t()>;  // milliseconds

  SessionStore(std::filesystem::path dir, const TextIndex &texts, Clock clock = {});
  ~SessionStore();
  SessionStore(const SessionStore &) = delete;
  SessionStore &operator=(const SessionStore &) = delete;

  // Pre-annotations for documents outside `doc_ids` are ignored.
  AnnotationSession Create(const std::string &annotator_id, const std::vector<std::string> &doc_ids,
                           const MistakeList &pre);

  AnnotationSession Get(const std::string &session_id) const;
  std::vector<std::string> List() const;

  // Applies one command. `expected_version` must equal the document's
  // current version. While a lease held by another client is live the edit
  // is refused; with no live lease the caller takes it.
  DocSession Apply(const std::string &session_id, const std::string &doc_id,
                   const EditCommand &command, std::int64_t expected_version,
                   const std::string &client);

  Lease AcquireLease(const std::string &session_id, const std::string &client);
  void ReleaseLease(const std::string &session_id, const std::string &client);
  std::int64_t lease_ttl_ms() const { return lease_ttl_ms_; }
  void set_lease_ttl_ms(std::int64_t ms) { lease_ttl_ms_ = ms; }

  // Working lists of all documents in session order.
  MistakeList Export(const std::string &session_id, bool *complete = nullptr) const;
  SessionMetrics Metrics(const std::string &session_id) const;

  // Writes snapshots and truncates logs.
  void Close();

  const TextIndex &texts() const { return texts_; }

 private:
  struct Entry {
    AnnotationSession session;
    std::optional<Lease> lease;
  };

  Entry &Find(const std::string &session_id);
  const Entry &Find(const std::string &session_id) const;
  std::filesystem::path LogPath(const std::string &id) const;
  std::filesystem::path SnapshotPath(const std::string &id) const;
  void AppendLog(const std::string &id, const nlohmann::json &record);
  void Load();
  std::string NewSessionId();

  std::filesystem::path dir_;
  const TextIndex &texts_;
  Clock clock_;
  std::int64_t lease_ttl_ms_ = 30000;
  mutable std::mutex mu_;
  std::map<std::string, Entry> sessions_;
  std::map<std::string, std::int64_t> seq_;  // last log sequence number
  bool closed_ = false;
};

// Applies `command` to a copy of `doc` and returns it, or throws
// SessionError(kRejected / kInvalid). Pure; used by the store and by replay.
DocSession ApplyCommand(const DocSession &doc, const EditCommand &command,
                        const TokenizedText &text, std::int64_t now_ms);

nlohmann::json ToJson(const AnnotationSession &s);
AnnotationSession SessionFromJson(const nlohmann::json &j);

}  // namespace accucheck

#endif  // ACCUCHECK_SESSION_H_
