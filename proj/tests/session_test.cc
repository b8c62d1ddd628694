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

#include <filesystem>
#include <fstream>
#include <random>

#include "accucheck/corpus.h"
#include "accucheck/gsml.h"
#include "doctest.h"
#include "support/oracles.h"

using namespace accucheck;
namespace fs = std::filesystem;
using K = EditCommand::Kind;
using Code = SessionError::Code;

namespace {

constexpr auto N = MistakeCategory::kName;
constexpr auto U = MistakeCategory::kNumber;
constexpr auto W = MistakeCategory::kWord;

// A fresh state directory, removed afterwards.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("accucheck-session-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

TextIndex Texts() {
  TextIndex t;
  t.emplace("a", testing::PlainText("a", 20));
  t.emplace("b", testing::PlainText("b", 10));
  return t;
}

const MistakeList kPre = {{"a", 2, 3, U, "p0"}, {"a", 8, 8, N, "p1"}, {"b", 0, 0, W, "p2"}, {"b", 5, 6, U, "p3"}};

EditCommand Cmd(K kind) {
  EditCommand c;
  c.kind = kind;
  return c;
}
EditCommand Accept(int i) {
  EditCommand c = Cmd(K::kAcceptPre);
  c.suggestion = i;
  return c;
}
EditCommand Reject(int i) {
  EditCommand c = Cmd(K::kRejectPre);
  c.suggestion = i;
  return c;
}
EditCommand Add(int s, int e, MistakeCategory cat, std::string note = "") {
  EditCommand c = Cmd(K::kAdd);
  c.start = s;
  c.end = e;
  c.category = cat;
  c.note = std::move(note);
  return c;
}
EditCommand Targeted(K kind, int s, int e) {
  EditCommand c = Cmd(kind);
  c.target_start = s;
  c.target_end = e;
  return c;
}

Code CodeOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const SessionError &e) {
    return e.code();
  }
  FAIL("expected SessionError");
  return Code::kInvalid;
}

struct Fixture {
  TempDir dir;
  TextIndex texts = Texts();
  std::int64_t now = 1000;
  std::unique_ptr<SessionStore> store;
  Fixture() { Open(); }
  void Open() { store = std::make_unique<SessionStore>(dir.path, texts, [this] { return now; }); }
  std::int64_t Version(const std::string &sid, const std::string &doc) {
    return store->Get(sid).docs.at(doc).version;
  }
  DocSession Do(const std::string &sid, const std::string &doc, const EditCommand &c,
                const std::string &client = "c1") {
    return store->Apply(sid, doc, c, Version(sid, doc), client);
  }
};

}  // namespace

TEST_CASE("create validates documents and attaches suggestions") {
  Fixture f;
  const AnnotationSession s = f.store->Create("ann", {"a", "b"}, kPre);
  CHECK(s.session_id.size() == 16);
  CHECK(s.docs.at("a").suggestions.size() == 2);
  CHECK(s.docs.at("b").suggestions.size() == 2);
  CHECK(s.docs.at("a").working.empty());
  CHECK(s.docs.at("a").state == DocState::kPending);
  CHECK(CodeOf([&] { f.store->Create("ann", {"a", "a"}, {}); }) == Code::kInvalid);
  CHECK(CodeOf([&] { f.store->Create("ann", {"zz"}, {}); }) == Code::kNotFound);
  // Suggestions for documents outside the session are ignored.
  CHECK(f.store->Create("ann", {"b"}, kPre).docs.at("b").suggestions.size() == 2);
  CHECK(f.store->List().size() == 2);
  CHECK(CodeOf([&] { f.store->Get("0000000000000000"); }) == Code::kNotFound);
}

TEST_CASE("accepting copies a suggestion once") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  DocSession d = f.Do(sid, "a", Accept(0));
  CHECK(d.working == MistakeList{kPre[0]});
  CHECK(d.state == DocState::kInProgress);
  CHECK(d.version == 1);
  d = f.Do(sid, "a", Accept(0));
  CHECK(d.working.size() == 1);
  d = f.Do(sid, "a", Reject(0));
  CHECK(d.working.empty());
  CHECK(d.suggestions[0].decision == Suggestion::Decision::kRejected);
  CHECK(d.suggestions[0].mistake == kPre[0]);
  CHECK(CodeOf([&] { f.Do(sid, "a", Accept(7)); }) == Code::kRejected);
}

TEST_CASE("overlapping edits are refused and change nothing") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.Do(sid, "a", Accept(0));
  const DocSession before = f.store->Get(sid).docs.at("a");
  CHECK(CodeOf([&] { f.Do(sid, "a", Add(3, 5, W)); }) == Code::kRejected);
  CHECK(CodeOf([&] { f.Do(sid, "a", Add(19, 20, W)); }) == Code::kRejected);
  CHECK(CodeOf([&] { f.Do(sid, "a", Add(5, 4, W)); }) == Code::kRejected);
  EditCommand move = Targeted(K::kMoveSpan, 2, 3);
  move.start = 7;
  move.end = 9;
  f.Do(sid, "a", Add(9, 9, U));
  CHECK(CodeOf([&] { f.Do(sid, "a", move); }) == Code::kRejected);
  const DocSession after = f.store->Get(sid).docs.at("a");
  CHECK(after.working.size() == before.working.size() + 1);
  CHECK(after.version == before.version + 1);
}

TEST_CASE("span, category and note edits") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.Do(sid, "a", Accept(0));
  EditCommand move = Targeted(K::kMoveSpan, 2, 3);
  move.start = 1;
  move.end = 4;
  DocSession d = f.Do(sid, "a", move);
  CHECK(d.working[0].start == 1);
  CHECK(d.working[0].end == 4);
  EditCommand cat = Targeted(K::kSetCategory, 1, 4);
  cat.category = W;
  d = f.Do(sid, "a", cat);
  CHECK(d.working[0].category == W);
  EditCommand note = Targeted(K::kSetNote, 1, 4);
  note.note = "wrong verb";
  d = f.Do(sid, "a", note);
  CHECK(d.working[0].note == "wrong verb");
  // The suggestion itself is untouched.
  CHECK(d.suggestions[0].mistake == kPre[0]);
  CHECK(CodeOf([&] { f.Do(sid, "a", Targeted(K::kRemove, 2, 3)); }) == Code::kRejected);
  d = f.Do(sid, "a", Targeted(K::kRemove, 1, 4));
  CHECK(d.working.empty());
}

TEST_CASE("done documents are frozen until reopened") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.Do(sid, "a", Cmd(K::kMarkDone));
  CHECK(CodeOf([&] { f.Do(sid, "a", Add(0, 0, N)); }) == Code::kRejected);
  f.Do(sid, "a", Cmd(K::kReopen));
  CHECK(f.Do(sid, "a", Add(0, 0, N)).working.size() == 1);
  CHECK(CodeOf([&] { f.Do(sid, "a", Cmd(K::kReopen)); }) == Code::kRejected);
}

TEST_CASE("export lists working mistakes and flags partial sessions") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"b", "a"}, kPre).session_id;
  f.Do(sid, "a", Accept(1));
  f.Do(sid, "b", Accept(1));
  f.Do(sid, "b", Add(2, 2, N, "x"));
  bool complete = true;
  MistakeList out = f.store->Export(sid, &complete);
  CHECK_FALSE(complete);
  REQUIRE(out.size() == 3);
  CHECK(out[0].doc_id == "b");
  CHECK(out[2] == kPre[1]);
  f.Do(sid, "a", Cmd(K::kMarkDone));
  f.Do(sid, "b", Cmd(K::kMarkDone));
  out = f.store->Export(sid, &complete);
  CHECK(complete);
  CHECK(ParseGsml(WriteGsml(out)) == out);
}

TEST_CASE("metrics count only finished documents") {
  Fixture f;
  const MistakeList pre = {{"a", 0, 0, U, ""}, {"a", 2, 2, U, ""}, {"a", 4, 4, U, ""}, {"a", 6, 6, U, ""}};
  const std::string sid = f.store->Create("ann", {"a", "b"}, pre).session_id;
  CHECK(RenderRatio(f.store->Metrics(sid).acceptance_rate) == "-");
  f.now = 2000;
  f.Do(sid, "a", Accept(0));
  f.Do(sid, "a", Accept(1));
  f.Do(sid, "a", Accept(2));
  f.Do(sid, "a", Reject(3));
  f.now = 9500;
  f.Do(sid, "a", Cmd(K::kMarkDone));
  const SessionMetrics m = f.store->Metrics(sid);
  CHECK(m.docs_done == 1);
  CHECK(m.suggestions == 4);
  CHECK(m.accepted == 3);
  CHECK(RenderRatio(m.acceptance_rate) == "0.750");
  CHECK(m.edits == 5);
  CHECK(m.elapsed_ms.at("a") == 7500);
  CHECK_FALSE(m.elapsed_ms.contains("b"));
}

TEST_CASE("a write based on an old version is refused") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.store->Apply(sid, "a", Accept(0), 0, "c1");
  CHECK(CodeOf([&] { f.store->Apply(sid, "a", Accept(1), 0, "c1"); }) == Code::kStaleWrite);
  CHECK(f.store->Apply(sid, "a", Accept(1), 1, "c1").version == 2);
}

TEST_CASE("leases keep a second client out until they expire") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  const Lease l = f.store->AcquireLease(sid, "c1");
  CHECK(l.expires_ms == f.now + f.store->lease_ttl_ms());
  CHECK(CodeOf([&] { f.store->AcquireLease(sid, "c2"); }) == Code::kLocked);
  CHECK(CodeOf([&] { f.Do(sid, "a", Accept(0), "c2"); }) == Code::kLocked);
  f.Do(sid, "a", Accept(0), "c1");
  f.now += f.store->lease_ttl_ms();
  f.Do(sid, "a", Accept(1), "c2");  // expired, so c2 takes over
  CHECK(CodeOf([&] { f.Do(sid, "a", Reject(1), "c1"); }) == Code::kLocked);
  f.store->ReleaseLease(sid, "c2");
  f.Do(sid, "a", Reject(1), "c1");
}

TEST_CASE("acknowledged edits survive a crash") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a", "b"}, kPre).session_id;
  f.Do(sid, "a", Accept(0));
  f.Do(sid, "a", Add(10, 12, W, "n"));
  f.Do(sid, "b", Cmd(K::kMarkDone));
  const AnnotationSession before = f.store->Get(sid);
  // Simulate a crash: reopen from disk without closing.
  SessionStore reopened(f.dir.path, f.texts, [&] { return f.now; });
  const AnnotationSession after = reopened.Get(sid);
  CHECK(after.docs.at("a").working == before.docs.at("a").working);
  CHECK(after.docs.at("a").version == 2);
  CHECK(after.docs.at("b").state == DocState::kDone);
  CHECK(ToJson(after) == ToJson(before));
}

TEST_CASE("a torn final log line is dropped") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.Do(sid, "a", Accept(0));
  {
    std::ofstream log(f.dir.path / (sid + ".log"), std::ios::app);
    log << R"({"op":"edit","seq":3,"doc":"a","ts":1,"cmd":{"kind":"acc)";
  }
  SessionStore reopened(f.dir.path, f.texts, [&] { return f.now; });
  CHECK(reopened.Get(sid).docs.at("a").version == 1);
}

TEST_CASE("close compacts logs into snapshots") {
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  f.Do(sid, "a", Accept(0));
  f.Do(sid, "a", Accept(1));
  const AnnotationSession before = f.store->Get(sid);
  f.store->Close();
  CHECK(fs::file_size(f.dir.path / (sid + ".log")) == 0);
  CHECK(fs::exists(f.dir.path / (sid + ".snap")));
  CHECK(CodeOf([&] { f.store->Create("ann", {"a"}, {}); }) == Code::kInvalid);
  f.Open();
  CHECK(ToJson(f.store->Get(sid)) == ToJson(before));
  // Edits after reopening append to the log again and survive another crash.
  f.Do(sid, "a", Add(15, 15, N));
  SessionStore again(f.dir.path, f.texts, [&] { return f.now; });
  CHECK(again.Get(sid).docs.at("a").working.size() == 3);
}

TEST_CASE("commands round-trip through JSON") {
  std::vector<EditCommand> cmds = {Accept(2), Reject(1), Add(1, 2, N, "x"), Targeted(K::kRemove, 3, 4),
                                   Cmd(K::kMarkDone), Cmd(K::kReopen)};
  EditCommand move = Targeted(K::kMoveSpan, 1, 1);
  move.start = 2;
  move.end = 3;
  cmds.push_back(move);
  for (const EditCommand &c : cmds) {
    const EditCommand back = EditCommandFromJson(ToJson(c));
    CHECK(ToJson(back) == ToJson(c));
  }
  CHECK(CodeOf([] { EditCommandFromJson(nlohmann::json{{"kind", "fly"}}); }) == Code::kInvalid);
  CHECK(CodeOf([] { EditCommandFromJson(nlohmann::json{{"kind", "add"}, {"start", 1}}); }) == Code::kInvalid);
}

TEST_CASE("random edit sequences keep the working list valid") {
  std::mt19937 rng(5);
  Fixture f;
  const std::string sid = f.store->Create("ann", {"a"}, kPre).session_id;
  for (int i = 0; i < 400; ++i) {
    EditCommand c;
    switch (rng() % 4) {
      case 0: c = Accept(static_cast<int>(rng() % 2)); break;
      case 1: c = Reject(static_cast<int>(rng() % 2)); break;
      case 2: {
        const int s = static_cast<int>(rng() % 20);
        c = Add(s, std::min(19, s + static_cast<int>(rng() % 3)), static_cast<MistakeCategory>(rng() % 6));
        break;
      }
      default: {
        const MistakeList w = f.store->Get(sid).docs.at("a").working;
        if (w.empty()) continue;
        const Mistake &m = w[rng() % w.size()];
        c = Targeted(K::kRemove, m.start, m.end);
      }
    }
    try {
      f.Do(sid, "a", c);
    } catch (const SessionError &e) {
      REQUIRE(e.code() == Code::kRejected);
    }
    const MistakeList w = f.store->Get(sid).docs.at("a").working;
    REQUIRE(ValidateMistakes(w, f.texts).ok());
  }
}
