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

#ifndef ACCUCHECK_SERVICE_H_
#define ACCUCHECK_SERVICE_H_

#include <memory>
#include <string>

#include "accucheck/annotation.h"
#include "accucheck/session.h"

namespace httplib {
class Server;
}

namespace accucheck {

struct ServiceOptions {
  // When non-empty, every route except /healthz requires
  // "Authorization: Bearer <token>".
  std::string token;
  // Suggestions offered in new sessions.
  MistakeList pre_annotations;
};

// HTTP+JSON front end over a SessionStore.
//
//   GET  /healthz
//   POST /sessions                       {"annotator_id", "doc_ids"?}
//   GET  /sessions/{id}
//   GET  /sessions/{id}/docs/{doc}       tokens, suggestions, working, version
//   POST /sessions/{id}/docs/{doc}/edits {"client", "version", "command"}
//   POST /sessions/{id}/lease            {"client", "release"?}
//   POST /sessions/{id}/export           GSML (text/csv)
//   GET  /sessions/{id}/metrics
//
// Errors are {"error": code, "message": text} with status 400 (invalid),
// 401, 404, 409 (stale_write), 422 (rejected) or 423 (locked).
class AnnotationService {
 public:
  AnnotationService(SessionStore &store, ServiceOptions options);
  ~AnnotationService();

  // Binds and serves until Stop(). Port 0 picks a free port; see port().
  bool Bind(const std::string &host, int port);
  void Serve();
  void Stop();
  int port() const { return port_; }

 private:
  void Routes();

  SessionStore &store_;
  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = 0;
};

}  // namespace accucheck

#endif  // ACCUCHECK_SERVICE_H_
