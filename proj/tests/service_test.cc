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

#include "accucheck/service.h"

#include <filesystem>
#include <random>
#include <thread>

#include "accucheck/corpus.h"
#include "accucheck/fact_checker.h"
#include "accucheck/gsml.h"
#include "doctest.h"
#include "httplib.h"
#include "json.hpp"

using namespace accucheck;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kDir = std::string(ACCUCHECK_FIXTURE_DIR) + "/memphis_phoenix";

// A running service over the Grizzlies-Suns fixture, pre-annotated by the checker.
struct Running {
  fs::path state;
  TextIndex texts = LoadTexts(kDir + "/texts");
  MistakeList pre;
  std::unique_ptr<SessionStore> store;
  std::unique_ptr<AnnotationService> service;
  std::thread thread;

  explicit Running(std::string token = "") {
    std::random_device rd;
    state = fs::temp_directory_path() / ("accucheck-service-" + std::to_string(rd()) + std::to_string(rd()));
    const GameData game = LoadGameFile(kDir + "/games/201411050PHO.json");
    pre = CheckDocument(texts.at("recap"), game);
    store = std::make_unique<SessionStore>(state, texts);
    service = std::make_unique<AnnotationService>(*store, ServiceOptions{std::move(token), pre});
    REQUIRE(service->Bind("127.0.0.1", 0));
    thread = std::thread([this] { service->Serve(); });
  }
  ~Running() {
    service->Stop();
    thread.join();
    store->Close();
    fs::remove_all(state);
  }
  httplib::Client Client() const {
    httplib::Client c("127.0.0.1", service->port());
    c.set_connection_timeout(5);
    return c;
  }
};

httplib::Result PostJson(httplib::Client &c, const std::string &path, const json &body) {
  return c.Post(path, body.dump(), "application/json");
}

std::string CreateSession(httplib::Client &c) {
  auto res = PostJson(c, "/sessions", {{"annotator_id", "ann1"}, {"doc_ids", {"recap"}}});
  REQUIRE(res);
  REQUIRE(res->status == 201);
  return json::parse(res->body).at("session_id").get<std::string>();
}

}  // namespace

TEST_CASE("health check") {
  Running r;
  httplib::Client c = r.Client();
  auto res = c.Get("/healthz");
  REQUIRE(res);
  CHECK(res->status == 200);
}

TEST_CASE("accept every suggestion, finish and export") {
  Running r;
  REQUIRE(r.pre.size() >= 7);
  httplib::Client c = r.Client();
  const std::string sid = CreateSession(c);
  const std::string doc_path = "/sessions/" + sid + "/docs/recap";

  auto view = c.Get(doc_path);
  REQUIRE(view);
  REQUIRE(view->status == 200);
  json doc = json::parse(view->body);
  CHECK(doc.at("tokens").size() == r.texts.at("recap").tokens.size());
  const std::size_t n = doc.at("suggestions").size();
  CHECK(n == r.pre.size());

  std::int64_t version = doc.at("version");
  for (std::size_t i = 0; i < n; ++i) {
    auto res = PostJson(c, doc_path + "/edits",
                        {{"client", "ui"}, {"version", version},
                         {"command", {{"kind", "accept_pre"}, {"suggestion", i}}}});
    REQUIRE(res);
    REQUIRE(res->status == 200);
    version = json::parse(res->body).at("version");
  }

  auto partial = c.Post("/sessions/" + sid + "/export", "", "application/json");
  REQUIRE(partial);
  CHECK(partial->status == 200);
  CHECK(partial->has_header("X-Accucheck-Warning"));

  auto done = PostJson(c, doc_path + "/edits",
                       {{"client", "ui"}, {"version", version}, {"command", {{"kind", "mark_done"}}}});
  REQUIRE(done);
  CHECK(done->status == 200);

  auto exported = c.Post("/sessions/" + sid + "/export", "", "application/json");
  REQUIRE(exported);
  CHECK(exported->status == 200);
  CHECK_FALSE(exported->has_header("X-Accucheck-Warning"));
  CHECK(ParseGsml(exported->body) == r.pre);

  auto metrics = c.Get("/sessions/" + sid + "/metrics");
  REQUIRE(metrics);
  const json m = json::parse(metrics->body);
  CHECK(m.at("acceptance_rate_text") == "1.000");
  CHECK(m.at("docs_done") == 1);
}

TEST_CASE("two edits against the same version: one wins") {
  Running r;
  httplib::Client setup = r.Client();
  const std::string sid = CreateSession(setup);
  const std::string path = "/sessions/" + sid + "/docs/recap/edits";
  int statuses[2] = {0, 0};
  std::vector<std::thread> threads;
  for (int k = 0; k < 2; ++k) {
    threads.emplace_back([&, k] {
      httplib::Client c = r.Client();
      auto res = PostJson(c, path,
                          {{"client", "ui"}, {"version", 0},
                           {"command", {{"kind", "accept_pre"}, {"suggestion", k}}}});
      statuses[k] = res ? res->status : -1;
    });
  }
  for (std::thread &t : threads) t.join();
  std::sort(std::begin(statuses), std::end(statuses));
  CHECK(statuses[0] == 200);
  CHECK(statuses[1] == 409);
  CHECK(r.store->Get(sid).docs.at("recap").working.size() == 1);
}

TEST_CASE("error statuses") {
  Running r;
  httplib::Client c = r.Client();
  const std::string sid = CreateSession(c);
  const std::string path = "/sessions/" + sid + "/docs/recap/edits";

  CHECK(c.Get("/sessions/ffffffffffffffff")->status == 404);
  CHECK(c.Get("/sessions/" + sid + "/docs/nope")->status == 404);
  CHECK(PostJson(c, "/sessions", json::object())->status == 400);
  CHECK(c.Post(path, "{not json", "application/json")->status == 400);
  CHECK(PostJson(c, path, {{"version", 0}, {"command", {{"kind", "fly"}}}})->status == 400);
  CHECK(PostJson(c, path,
                 {{"client", "a"}, {"version", 0},
                  {"command", {{"kind", "add"}, {"start", 5}, {"end", 900}, {"category", "WORD"}}}})
            ->status == 422);

  CHECK(PostJson(c, "/sessions/" + sid + "/lease", {{"client", "a"}})->status == 200);
  CHECK(PostJson(c, "/sessions/" + sid + "/lease", {{"client", "b"}})->status == 423);
  CHECK(PostJson(c, path, {{"client", "b"}, {"version", 0}, {"command", {{"kind", "mark_done"}}}})->status == 423);
  CHECK(PostJson(c, "/sessions/" + sid + "/lease", {{"client", "a"}, {"release", true}})->status == 200);
  CHECK(PostJson(c, path, {{"client", "b"}, {"version", 0}, {"command", {{"kind", "mark_done"}}}})->status == 200);
}

TEST_CASE("bearer token") {
  Running r("s3cret");
  httplib::Client c = r.Client();
  CHECK(c.Get("/healthz")->status == 200);
  CHECK(PostJson(c, "/sessions", {{"annotator_id", "x"}})->status == 401);
  c.set_bearer_token_auth("wrong");
  CHECK(PostJson(c, "/sessions", {{"annotator_id", "x"}})->status == 401);
  c.set_bearer_token_auth("s3cret");
  auto res = PostJson(c, "/sessions", {{"annotator_id", "x"}});
  REQUIRE(res);
  CHECK(res->status == 201);
  // Without doc_ids every loaded text is in the session.
  CHECK(json::parse(res->body).at("docs").size() == r.texts.size());
}
