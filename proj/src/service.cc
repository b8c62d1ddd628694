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

#include "accucheck/gsml.h"
#include "httplib.h"

namespace accucheck {

using nlohmann::json;

namespace {

void SendJson(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response &res, int status, std::string_view code, const std::string &message) {
  SendJson(res, status, {{"error", code}, {"message", message}});
}

void SendSessionError(httplib::Response &res, const SessionError &e) {
  using C = SessionError::Code;
  switch (e.code()) {
    case C::kNotFound: return SendError(res, 404, "not_found", e.what());
    case C::kInvalid: return SendError(res, 400, "invalid", e.what());
    case C::kRejected: return SendError(res, 422, "rejected", e.what());
    case C::kStaleWrite: return SendError(res, 409, "stale_write", e.what());
    case C::kLocked: return SendError(res, 423, "locked", e.what());
  }
}

json DocSummary(const DocSession &d) {
  return {{"doc_id", d.doc_id},
          {"state", DocStateName(d.state)},
          {"version", d.version},
          {"working_count", d.working.size()},
          {"suggestion_count", d.suggestions.size()}};
}

json SessionSummary(const AnnotationSession &s) {
  json docs = json::array();
  for (const std::string &id : s.doc_ids) docs.push_back(DocSummary(s.docs.at(id)));
  return {{"session_id", s.session_id}, {"annotator_id", s.annotator_id}, {"docs", docs}};
}

json DocView(const DocSession &d, const TokenizedText &text) {
  static constexpr std::string_view kDecision[] = {"open", "accepted", "rejected"};
  json suggestions = json::array();
  for (std::size_t i = 0; i < d.suggestions.size(); ++i) {
    json m = ToJson(d.suggestions[i].mistake);
    m["index"] = i;
    m["decision"] = kDecision[static_cast<int>(d.suggestions[i].decision)];
    suggestions.push_back(m);
  }
  json working = json::array();
  for (const Mistake &m : d.working) working.push_back(ToJson(m));
  return {{"doc_id", d.doc_id},
          {"state", DocStateName(d.state)},
          {"version", d.version},
          {"tokens", text.tokens},
          {"suggestions", suggestions},
          {"working", working}};
}

// Runs a handler body, mapping exceptions to error responses.
template <typename F>
void Guard(httplib::Response &res, F &&body) {
  try {
    body();
  } catch (const SessionError &e) {
    SendSessionError(res, e);
  } catch (const json::exception &e) {
    SendError(res, 400, "invalid", std::string("malformed JSON: ") + e.what());
  } catch (const std::exception &e) {
    SendError(res, 500, "internal", e.what());
  }
}

}  // namespace

AnnotationService::AnnotationService(SessionStore &store, ServiceOptions options)
    : store_(store), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

AnnotationService::~AnnotationService() { Stop(); }

bool AnnotationService::Bind(const std::string &host, int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
    return port_ > 0;
  }
  port_ = port;
  return server_->bind_to_port(host, port);
}

void AnnotationService::Serve() { server_->listen_after_bind(); }

void AnnotationService::Stop() {
  if (server_) server_->stop();
}

void AnnotationService::Routes() {
  httplib::Server &s = *server_;

  s.set_pre_routing_handler([this](const httplib::Request &req, httplib::Response &res) {
    if (options_.token.empty() || req.path == "/healthz") return httplib::Server::HandlerResponse::Unhandled;
    if (req.get_header_value("Authorization") != "Bearer " + options_.token) {
      SendError(res, 401, "unauthorized", "missing or wrong bearer token");
      return httplib::Server::HandlerResponse::Handled;
    }
    return httplib::Server::HandlerResponse::Unhandled;
  });

  s.Get("/healthz", [](const httplib::Request &, httplib::Response &res) {
    SendJson(res, 200, {{"status", "ok"}});
  });

  s.Post("/sessions", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] {
      const json body = req.body.empty() ? json::object() : json::parse(req.body);
      const std::string annotator = body.value("annotator_id", "");
      if (annotator.empty()) throw SessionError(SessionError::Code::kInvalid, "annotator_id is required");
      std::vector<std::string> docs;
      if (body.contains("doc_ids")) {
        docs = body.at("doc_ids").get<std::vector<std::string>>();
      } else {
        for (const auto &[id, _] : store_.texts()) docs.push_back(id);
      }
      const bool with_pre = body.value("pre_annotations", true);
      const AnnotationSession created =
          store_.Create(annotator, docs, with_pre ? options_.pre_annotations : MistakeList{});
      SendJson(res, 201, SessionSummary(created));
    });
  });

  s.Get(R"(/sessions/([0-9a-zA-Z]+))", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] { SendJson(res, 200, SessionSummary(store_.Get(req.matches[1]))); });
  });

  s.Get(R"(/sessions/([0-9a-zA-Z]+)/docs/([^/]+))", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] {
      const AnnotationSession session = store_.Get(req.matches[1]);
      const std::string doc = req.matches[2];
      auto it = session.docs.find(doc);
      if (it == session.docs.end()) {
        throw SessionError(SessionError::Code::kNotFound, "document " + doc + " is not in the session");
      }
      SendJson(res, 200, DocView(it->second, store_.texts().at(doc)));
    });
  });

  s.Post(R"(/sessions/([0-9a-zA-Z]+)/docs/([^/]+)/edits)",
         [this](const httplib::Request &req, httplib::Response &res) {
           Guard(res, [&] {
             const json body = json::parse(req.body);
             if (!body.contains("version") || !body.contains("command")) {
               throw SessionError(SessionError::Code::kInvalid, "edit needs \"version\" and \"command\"");
             }
             const EditCommand cmd = EditCommandFromJson(body.at("command"));
             const std::string doc = req.matches[2];
             const DocSession updated = store_.Apply(req.matches[1], doc, cmd,
                                                     body.at("version").get<std::int64_t>(),
                                                     body.value("client", ""));
             SendJson(res, 200, DocView(updated, store_.texts().at(doc)));
           });
         });

  s.Post(R"(/sessions/([0-9a-zA-Z]+)/lease)", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] {
      const json body = json::parse(req.body);
      const std::string client = body.value("client", "");
      if (client.empty()) throw SessionError(SessionError::Code::kInvalid, "client is required");
      if (body.value("release", false)) {
        store_.ReleaseLease(req.matches[1], client);
        SendJson(res, 200, {{"released", true}});
        return;
      }
      const Lease lease = store_.AcquireLease(req.matches[1], client);
      SendJson(res, 200, {{"holder", lease.holder}, {"expires_ms", lease.expires_ms},
                          {"ttl_ms", store_.lease_ttl_ms()}});
    });
  });

  s.Post(R"(/sessions/([0-9a-zA-Z]+)/export)", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] {
      bool complete = false;
      const MistakeList list = store_.Export(req.matches[1], &complete);
      if (!complete) res.set_header("X-Accucheck-Warning", "partial export: some documents are not done");
      res.status = 200;
      res.set_content(WriteGsml(list), "text/csv");
    });
  });

  s.Get(R"(/sessions/([0-9a-zA-Z]+)/metrics)", [this](const httplib::Request &req, httplib::Response &res) {
    Guard(res, [&] {
      const SessionMetrics m = store_.Metrics(req.matches[1]);
      json rate = m.acceptance_rate ? json(m.acceptance_rate->ToDouble()) : json(nullptr);
      SendJson(res, 200, {{"docs_done", m.docs_done},
                          {"edits", m.edits},
                          {"suggestions", m.suggestions},
                          {"accepted", m.accepted},
                          {"acceptance_rate", rate},
                          {"acceptance_rate_text", RenderRatio(m.acceptance_rate)},
                          {"elapsed_ms", m.elapsed_ms}});
    });
  });
}

}  // namespace accucheck
