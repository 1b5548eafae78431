// Copyright 2026 The colq Authors
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


#ifndef COLQ_HTTP_HPP
#define COLQ_HTTP_HPP

#include <string>

#include <httplib.h>

#include "colq/log.hpp"
#include "colq/service.hpp"

namespace colq {

/// Binds every route of `service` onto an httplib server.
inline void mount(httplib::Server& server, Service& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
    log::info(req.method + " " + req.path + " -> " + std::to_string(r.status));
  };
  server.Get(R"(/.*)", forward);
  server.Post(R"(/.*)", forward);
  server.Put(R"(/.*)", forward);
  server.Delete(R"(/.*)", forward);
}

/// Blocks until the server stops. Returns false when the port cannot be bound.
inline bool serve(const std::string& host, int port, Service& service) {
  httplib::Server server;
  mount(server, service);
  log::info("listening on " + host + ":" + std::to_string(port));
  return server.listen(host, port);
}

}  // namespace colq

#endif  // COLQ_HTTP_HPP
