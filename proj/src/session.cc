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

#include "accucheck/session.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace accucheck {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "accept_pre", "reject_pre", "add", "remove", "move_span",
    "set_category", "set_note", "mark_done", "reopen"};

constexpr std::array<std::string_view, 3> kStateNames = {"pending", "in_progress", "done"};
constexpr std::array<std::string_view, 3> kDecisionNames = {"open", "accepted", "rejected"};

std::int64_t SystemNowMs() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

[[noreturn]] void Invalid(const std::string &what) {
  throw SessionError(SessionError::Code::kInvalid, what);
}

[[noreturn]] void Rejected(const std::string &what) {
  throw SessionError(SessionError::Code::kRejected, what);
}

Mistake MistakeFromJson(const json &j, const std::string &doc_id) {
  if (!j.is_object()) Invalid("mistake must be an object");
  Mistake m;
  m.doc_id = doc_id;
  m.start = j.at("start").get<int>();
  m.end = j.at("end").get<int>();
  auto cat = ParseCategoryLabel(j.at("category").get<std::string>());
  if (!cat) Invalid("unknown category " + j.at("category").dump());
  m.category = *cat;
  m.note = j.value("note", "");
  return m;
}

template <std::size_t N, typename E>
E EnumFromName(const std::array<std::string_view, N> &names, const std::string &s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<E>(i);
  Invalid("unknown value \"" + s + "\"");
}

// Writes `data` and flushes it to stable storage.
void WriteDurably(const fs::path &path, const std::string &data, bool append) {
  const int flags = O_WRONLY | O_CREAT | (append ? O_APPEND : O_TRUNC);
  const int fd = ::open(path.c_str(), flags, 0644);
  if (fd < 0) throw std::runtime_error("cannot open " + path.string());
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      ::close(fd);
      throw std::runtime_error("write failed: " + path.string());
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    throw std::runtime_error("fsync failed: " + path.string());
  }
  ::close(fd);
}

void SyncDirectory(const fs::path &dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
}

bool ValidSessionId(std::string_view id) {
  return !id.empty() && id.size() <= 64 &&
         std::all_of(id.begin(), id.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

MistakeList::iterator FindTarget(DocSession &doc, const EditCommand &c) {
  auto it = std::find_if(doc.working.begin(), doc.working.end(), [&](const Mistake &m) {
    return m.start == c.target_start && m.end == c.target_end;
  });
  if (it == doc.working.end()) {
    Rejected("no mistake at [" + std::to_string(c.target_start) + "," +
             std::to_string(c.target_end) + "]");
  }
  return it;
}

void CheckSpan(const Mistake &m, const TokenizedText &text) {
  if (m.start < 0 || m.end < m.start || m.end >= text.size()) {
    Rejected("span [" + std::to_string(m.start) + "," + std::to_string(m.end) +
             "] is outside the " + std::to_string(text.size()) + "-token text");
  }
}

void CheckNoOverlap(const Mistake &m, const MistakeList &others, const Mistake *ignore) {
  for (const Mistake &o : others) {
    if (&o == ignore) continue;
    if (m.Overlaps(o)) {
      Rejected("span [" + std::to_string(m.start) + "," + std::to_string(m.end) +
               "] overlaps [" + std::to_string(o.start) + "," + std::to_string(o.end) + "] " +
               std::string(CategoryLabel(o.category)));
    }
  }
}

}  // namespace

std::string_view DocStateName(DocState s) { return kStateNames[static_cast<int>(s)]; }

std::string_view EditKindName(EditCommand::Kind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<EditCommand::Kind> ParseEditKind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<EditCommand::Kind>(i);
  return std::nullopt;
}

json ToJson(const Mistake &m) {
  return {{"start", m.start}, {"end", m.end}, {"category", CategoryLabel(m.category)}, {"note", m.note}};
}

json ToJson(const EditCommand &c) {
  json j{{"kind", EditKindName(c.kind)}};
  using K = EditCommand::Kind;
  switch (c.kind) {
    case K::kAcceptPre:
    case K::kRejectPre:
      j["suggestion"] = c.suggestion;
      break;
    case K::kAdd:
      j["start"] = c.start;
      j["end"] = c.end;
      j["category"] = CategoryLabel(c.category);
      j["note"] = c.note;
      break;
    case K::kRemove:
      j["target"] = {c.target_start, c.target_end};
      break;
    case K::kMoveSpan:
      j["target"] = {c.target_start, c.target_end};
      j["start"] = c.start;
      j["end"] = c.end;
      break;
    case K::kSetCategory:
      j["target"] = {c.target_start, c.target_end};
      j["category"] = CategoryLabel(c.category);
      break;
    case K::kSetNote:
      j["target"] = {c.target_start, c.target_end};
      j["note"] = c.note;
      break;
    case K::kMarkDone:
    case K::kReopen:
      break;
  }
  return j;
}

EditCommand EditCommandFromJson(const json &j) {
  try {
    if (!j.is_object() || !j.contains("kind")) Invalid("command needs a \"kind\"");
    auto kind = ParseEditKind(j.at("kind").get<std::string>());
    if (!kind) Invalid("unknown command kind " + j.at("kind").dump());
    EditCommand c;
    c.kind = *kind;
    using K = EditCommand::Kind;
    if (c.kind == K::kAcceptPre || c.kind == K::kRejectPre) c.suggestion = j.at("suggestion").get<int>();
    if (c.kind == K::kRemove || c.kind == K::kMoveSpan || c.kind == K::kSetCategory ||
        c.kind == K::kSetNote) {
      const json &t = j.at("target");
      if (!t.is_array() || t.size() != 2) Invalid("target must be [start, end]");
      c.target_start = t[0].get<int>();
      c.target_end = t[1].get<int>();
    }
    if (c.kind == K::kAdd || c.kind == K::kMoveSpan) {
      c.start = j.at("start").get<int>();
      c.end = j.at("end").get<int>();
    }
    if (c.kind == K::kAdd || c.kind == K::kSetCategory) {
      auto cat = ParseCategoryLabel(j.at("category").get<std::string>());
      if (!cat) Invalid("unknown category " + j.at("category").dump());
      c.category = *cat;
    }
    if (c.kind == K::kAdd || c.kind == K::kSetNote) c.note = j.value("note", "");
    return c;
  } catch (const json::exception &e) {
    Invalid(std::string("malformed command: ") + e.what());
  }
}

DocSession ApplyCommand(const DocSession &current, const EditCommand &c, const TokenizedText &text,
                        std::int64_t now_ms) {
  using K = EditCommand::Kind;
  DocSession doc = current;
  if (doc.state == DocState::kDone && c.kind != K::kReopen) {
    Rejected("document " + doc.doc_id + " is done; reopen it first");
  }
  auto suggestion = [&]() -> Suggestion & {
    if (c.suggestion < 0 || c.suggestion >= static_cast<int>(doc.suggestions.size())) {
      Rejected("no suggestion " + std::to_string(c.suggestion));
    }
    return doc.suggestions[c.suggestion];
  };
  auto has_copy = [&](const Mistake &m) {
    return std::find(doc.working.begin(), doc.working.end(), m) != doc.working.end();
  };
  switch (c.kind) {
    case K::kAcceptPre: {
      Suggestion &s = suggestion();
      if (!has_copy(s.mistake)) {
        CheckSpan(s.mistake, text);
        CheckNoOverlap(s.mistake, doc.working, nullptr);
        doc.working.push_back(s.mistake);
      }
      s.decision = Suggestion::Decision::kAccepted;
      break;
    }
    case K::kRejectPre: {
      Suggestion &s = suggestion();
      std::erase(doc.working, s.mistake);
      s.decision = Suggestion::Decision::kRejected;
      break;
    }
    case K::kAdd: {
      const Mistake m{doc.doc_id, c.start, c.end, c.category, c.note};
      CheckSpan(m, text);
      CheckNoOverlap(m, doc.working, nullptr);
      doc.working.push_back(m);
      break;
    }
    case K::kRemove: {
      auto it = FindTarget(doc, c);
      for (Suggestion &s : doc.suggestions)
        if (s.mistake == *it) s.decision = Suggestion::Decision::kRejected;
      doc.working.erase(it);
      break;
    }
    case K::kMoveSpan: {
      auto it = FindTarget(doc, c);
      Mistake moved = *it;
      moved.start = c.start;
      moved.end = c.end;
      CheckSpan(moved, text);
      CheckNoOverlap(moved, doc.working, &*it);
      *it = moved;
      break;
    }
    case K::kSetCategory:
      FindTarget(doc, c)->category = c.category;
      break;
    case K::kSetNote:
      FindTarget(doc, c)->note = c.note;
      break;
    case K::kMarkDone:
      doc.state = DocState::kDone;
      doc.done_ms = now_ms;
      break;
    case K::kReopen:
      if (doc.state != DocState::kDone) Rejected("document " + doc.doc_id + " is not done");
      doc.state = DocState::kInProgress;
      doc.done_ms = 0;
      break;
  }
  if (doc.state == DocState::kPending) doc.state = DocState::kInProgress;
  if (doc.opened_ms == 0) doc.opened_ms = now_ms;
  SortMistakes(doc.working);
  ++doc.edits;
  ++doc.version;
  return doc;
}

json ToJson(const AnnotationSession &s) {
  json docs = json::array();
  for (const std::string &id : s.doc_ids) {
    const DocSession &d = s.docs.at(id);
    json sug = json::array();
    for (const Suggestion &x : d.suggestions) {
      json m = ToJson(x.mistake);
      m["decision"] = kDecisionNames[static_cast<int>(x.decision)];
      sug.push_back(m);
    }
    json working = json::array();
    for (const Mistake &m : d.working) working.push_back(ToJson(m));
    docs.push_back({{"doc_id", id},
                    {"state", DocStateName(d.state)},
                    {"version", d.version},
                    {"edits", d.edits},
                    {"opened_ms", d.opened_ms},
                    {"done_ms", d.done_ms},
                    {"suggestions", sug},
                    {"working", working}});
  }
  return {{"session_id", s.session_id},
          {"annotator_id", s.annotator_id},
          {"created_ms", s.created_ms},
          {"docs", docs}};
}

AnnotationSession SessionFromJson(const json &j) {
  AnnotationSession s;
  s.session_id = j.at("session_id").get<std::string>();
  s.annotator_id = j.at("annotator_id").get<std::string>();
  s.created_ms = j.at("created_ms").get<std::int64_t>();
  for (const json &d : j.at("docs")) {
    DocSession doc;
    doc.doc_id = d.at("doc_id").get<std::string>();
    doc.state = EnumFromName<3, DocState>(kStateNames, d.at("state").get<std::string>());
    doc.version = d.at("version").get<std::int64_t>();
    doc.edits = d.at("edits").get<int>();
    doc.opened_ms = d.at("opened_ms").get<std::int64_t>();
    doc.done_ms = d.at("done_ms").get<std::int64_t>();
    for (const json &x : d.at("suggestions")) {
      doc.suggestions.push_back(
          {MistakeFromJson(x, doc.doc_id),
           EnumFromName<3, Suggestion::Decision>(kDecisionNames, x.at("decision").get<std::string>())});
    }
    for (const json &m : d.at("working")) doc.working.push_back(MistakeFromJson(m, doc.doc_id));
    s.doc_ids.push_back(doc.doc_id);
    s.docs.emplace(doc.doc_id, std::move(doc));
  }
  return s;
}

// ---------------------------------------------------------------------------

SessionStore::SessionStore(fs::path dir, const TextIndex &texts, Clock clock)
    : dir_(std::move(dir)), texts_(texts), clock_(clock ? std::move(clock) : Clock(SystemNowMs)) {
  fs::create_directories(dir_);
  Load();
}

SessionStore::~SessionStore() {
  try {
    Close();
  } catch (...) {
    // The logs are still intact; the next open replays them.
  }
}

fs::path SessionStore::LogPath(const std::string &id) const { return dir_ / (id + ".log"); }
fs::path SessionStore::SnapshotPath(const std::string &id) const { return dir_ / (id + ".snap"); }

void SessionStore::AppendLog(const std::string &id, const json &record) {
  WriteDurably(LogPath(id), record.dump() + "\n", /*append=*/true);
}

// Snapshot first (if any), then the log. Each log record carries a sequence
// number; records already folded into the snapshot are skipped, so a crash
// between writing a snapshot and truncating the log is harmless. A torn
// final line (crash during append) was never acknowledged and is dropped.
void SessionStore::Load() {
  std::set<std::string> ids;
  for (const auto &entry : fs::directory_iterator(dir_)) {
    const fs::path p = entry.path();
    if (p.extension() == ".log" || p.extension() == ".snap") ids.insert(p.stem().string());
  }
  for (const std::string &id : ids) {
    if (!ValidSessionId(id)) continue;
    Entry e;
    std::int64_t seq = 0;
    bool have = false;
    if (fs::exists(SnapshotPath(id))) {
      std::ifstream in(SnapshotPath(id));
      json snap = json::parse(in);
      e.session = SessionFromJson(snap);
      seq = snap.value("seq", std::int64_t{0});
      have = true;
    }
    if (fs::exists(LogPath(id))) {
      std::ifstream in(LogPath(id));
      std::vector<std::string> lines;
      for (std::string line; std::getline(in, line);) lines.push_back(line);
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        json rec = json::parse(lines[k], nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded()) {
          if (k + 1 == lines.size()) break;
          throw std::runtime_error("corrupt log record " + std::to_string(k + 1) + " in " +
                                   LogPath(id).string());
        }
        const std::int64_t rec_seq = rec.at("seq").get<std::int64_t>();
        if (rec_seq <= seq && have) continue;
        const std::string op = rec.at("op").get<std::string>();
        if (op == "create") {
          e.session = SessionFromJson(rec.at("session"));
          have = true;
        } else if (op == "edit") {
          if (!have) throw std::runtime_error("edit before create in " + LogPath(id).string());
          const std::string doc_id = rec.at("doc").get<std::string>();
          DocSession &doc = e.session.docs.at(doc_id);
          doc = ApplyCommand(doc, EditCommandFromJson(rec.at("cmd")), texts_.at(doc_id),
                             rec.at("ts").get<std::int64_t>());
        }
        seq = rec_seq;
      }
    }
    if (have) {
      seq_[id] = seq;
      sessions_.emplace(id, std::move(e));
    }
  }
}

std::string SessionStore::NewSessionId() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  for (;;) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
    std::string id(buf);
    if (!sessions_.contains(id) && !fs::exists(LogPath(id))) return id;
  }
}

AnnotationSession SessionStore::Create(const std::string &annotator_id,
                                       const std::vector<std::string> &doc_ids,
                                       const MistakeList &pre) {
  std::lock_guard lock(mu_);
  if (closed_) Invalid("store is closed");
  AnnotationSession s;
  std::set<std::string> seen;
  for (const std::string &id : doc_ids) {
    if (!texts_.contains(id)) throw SessionError(SessionError::Code::kNotFound, "unknown document " + id);
    if (!seen.insert(id).second) Invalid("duplicate document " + id);
  }
  MistakeList relevant;
  for (const Mistake &m : pre)
    if (seen.contains(m.doc_id)) relevant.push_back(m);
  if (const auto report = ValidateMistakes(relevant, texts_); !report.ok()) {
    Invalid("invalid pre-annotations: " + report.Summary());
  }
  s.session_id = NewSessionId();
  s.annotator_id = annotator_id;
  s.created_ms = clock_();
  s.doc_ids = doc_ids;
  for (const std::string &id : doc_ids) {
    DocSession doc;
    doc.doc_id = id;
    s.docs.emplace(id, std::move(doc));
  }
  SortMistakes(relevant);
  for (const Mistake &m : relevant) s.docs.at(m.doc_id).suggestions.push_back({m, Suggestion::Decision::kOpen});
  AppendLog(s.session_id, {{"op", "create"}, {"seq", 1}, {"session", ToJson(s)}});
  SyncDirectory(dir_);
  seq_[s.session_id] = 1;
  sessions_.emplace(s.session_id, Entry{s, std::nullopt});
  return s;
}

SessionStore::Entry &SessionStore::Find(const std::string &session_id) {
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw SessionError(SessionError::Code::kNotFound, "unknown session " + session_id);
  return it->second;
}

const SessionStore::Entry &SessionStore::Find(const std::string &session_id) const {
  return const_cast<SessionStore *>(this)->Find(session_id);
}

AnnotationSession SessionStore::Get(const std::string &session_id) const {
  std::lock_guard lock(mu_);
  return Find(session_id).session;
}

std::vector<std::string> SessionStore::List() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> ids;
  for (const auto &[id, _] : sessions_) ids.push_back(id);
  return ids;
}

DocSession SessionStore::Apply(const std::string &session_id, const std::string &doc_id,
                               const EditCommand &command, std::int64_t expected_version,
                               const std::string &client) {
  std::lock_guard lock(mu_);
  if (closed_) Invalid("store is closed");
  Entry &e = Find(session_id);
  auto it = e.session.docs.find(doc_id);
  if (it == e.session.docs.end()) {
    throw SessionError(SessionError::Code::kNotFound, "document " + doc_id + " is not in session " + session_id);
  }
  const std::int64_t now = clock_();
  if (e.lease && e.lease->expires_ms > now && e.lease->holder != client) {
    throw SessionError(SessionError::Code::kLocked, "session is leased to " + e.lease->holder);
  }
  if (it->second.version != expected_version) {
    throw SessionError(SessionError::Code::kStaleWrite,
                       "stale write: document is at version " + std::to_string(it->second.version) +
                           ", edit was based on " + std::to_string(expected_version));
  }
  DocSession next = ApplyCommand(it->second, command, texts_.at(doc_id), now);
  const std::int64_t seq = seq_[session_id] + 1;
  AppendLog(session_id, {{"op", "edit"}, {"seq", seq}, {"doc", doc_id}, {"ts", now}, {"cmd", ToJson(command)}});
  seq_[session_id] = seq;
  it->second = std::move(next);
  e.lease = Lease{client, now + lease_ttl_ms_};
  return it->second;
}

Lease SessionStore::AcquireLease(const std::string &session_id, const std::string &client) {
  std::lock_guard lock(mu_);
  Entry &e = Find(session_id);
  const std::int64_t now = clock_();
  if (e.lease && e.lease->expires_ms > now && e.lease->holder != client) {
    throw SessionError(SessionError::Code::kLocked, "session is leased to " + e.lease->holder);
  }
  e.lease = Lease{client, now + lease_ttl_ms_};
  return *e.lease;
}

void SessionStore::ReleaseLease(const std::string &session_id, const std::string &client) {
  std::lock_guard lock(mu_);
  Entry &e = Find(session_id);
  if (e.lease && e.lease->holder == client) e.lease.reset();
}

MistakeList SessionStore::Export(const std::string &session_id, bool *complete) const {
  std::lock_guard lock(mu_);
  const AnnotationSession &s = Find(session_id).session;
  MistakeList out;
  bool all_done = true;
  for (const std::string &id : s.doc_ids) {
    const DocSession &d = s.docs.at(id);
    all_done = all_done && d.state == DocState::kDone;
    out.insert(out.end(), d.working.begin(), d.working.end());
  }
  if (complete) *complete = all_done;
  return out;
}

SessionMetrics SessionStore::Metrics(const std::string &session_id) const {
  std::lock_guard lock(mu_);
  const AnnotationSession &s = Find(session_id).session;
  SessionMetrics m;
  for (const std::string &id : s.doc_ids) {
    const DocSession &d = s.docs.at(id);
    m.edits += d.edits;
    if (d.state != DocState::kDone) continue;
    ++m.docs_done;
    m.elapsed_ms[id] = d.done_ms - d.opened_ms;
    for (const Suggestion &x : d.suggestions) {
      ++m.suggestions;
      m.accepted += x.decision == Suggestion::Decision::kAccepted;
    }
  }
  m.acceptance_rate = MakeRatio(m.accepted, m.suggestions);
  return m;
}

void SessionStore::Close() {
  std::lock_guard lock(mu_);
  if (closed_) return;
  closed_ = true;
  for (const auto &[id, e] : sessions_) {
    json snap = ToJson(e.session);
    snap["seq"] = seq_[id];
    const fs::path tmp = dir_ / (id + ".snap.tmp");
    WriteDurably(tmp, snap.dump() + "\n", /*append=*/false);
    fs::rename(tmp, SnapshotPath(id));
    SyncDirectory(dir_);
    WriteDurably(LogPath(id), "", /*append=*/false);
  }
}

}  // namespace accucheck
