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


#ifndef COLQ_SERVICE_HPP
#define COLQ_SERVICE_HPP

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "colq/log.hpp"
#include "colq/report.hpp"

namespace colq {

using Clock = std::chrono::steady_clock;

struct ServiceConfig {
  std::size_t enumerate_cap = 10'000;
  std::chrono::seconds session_ttl{3600};
  std::size_t undo_depth = 10'000;
  std::function<Clock::time_point()> clock = [] { return Clock::now(); };
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Transport-free request handler. The HTTP layer only forwards method, path and body.
class Service {
 public:
  explicit Service(ServiceConfig config = {}) : config_(std::move(config)) {}

  Response handle(const std::string& method, const std::string& path, const std::string& body) {
    try {
      return route(method, split_path(path), body);
    } catch (const QuiverError& e) {
      return error(400, std::string(to_string(e.kind())), e.what());
    } catch (const nlohmann::json::exception& e) {
      return error(400, "Parse", e.what());
    }
  }

  std::size_t session_count() {
    const std::lock_guard<std::mutex> lock(mu_);
    return sessions_.size();
  }

  const ServiceConfig& config() const { return config_; }

 private:
  struct Step {
    ColouredQuiver before;
    Vertex vertex;
  };

  struct Session {
    explicit Session(ColouredQuiver q) : current(std::move(q)) {}
    std::mutex mu;  // serializes requests on one session
    ColouredQuiver current;
    std::deque<Step> undo;
    Clock::time_point last_used;
  };

  using Json = report::json;

  static std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : path.substr(0, path.find('?'))) {
      if (c == '/') {
        if (!cur.empty()) parts.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
  }

  static Response ok(const Json& j, int status = 200) { return {status, "application/json", report::body(j)}; }

  static Response error(int status, const std::string& kind, const std::string& message) {
    return {status, "application/json", report::body(report::error_json(kind, message))};
  }

  static nlohmann::json parse_body(const std::string& body) {
    try {
      return nlohmann::json::parse(body.empty() ? std::string("{}") : body);
    } catch (const nlohmann::json::parse_error& e) {
      throw QuiverError(ErrorKind::Parse, e.what());
    }
  }

  // Accepts {"quiver": {...}, ...} or a bare quiver object.
  static ColouredQuiver quiver_of(const nlohmann::json& j) {
    if (j.is_object() && j.contains("quiver")) return from_json(j.at("quiver"));
    return from_json(j);
  }

  static MutationSequence vertices_of(const nlohmann::json& j) {
    MutationSequence seq;
    if (j.contains("vertex")) {
      if (!j.at("vertex").is_number_integer()) throw QuiverError(ErrorKind::Parse, "vertex must be an integer");
      seq.push_back(j.at("vertex").get<int>());
    } else if (j.contains("vertices") && j.at("vertices").is_array()) {
      for (const auto& v : j.at("vertices")) {
        if (!v.is_number_integer()) throw QuiverError(ErrorKind::Parse, "vertices must be integers");
        seq.push_back(v.get<int>());
      }
    } else {
      throw QuiverError(ErrorKind::Parse, "request needs 'vertex' or 'vertices'");
    }
    return seq;
  }

  static int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::logic_error&) {
      throw QuiverError(ErrorKind::Parse, "bad integer '" + s + "'");
    }
    if (used != s.size()) throw QuiverError(ErrorKind::Parse, "bad integer '" + s + "'");
    return v;
  }

  Response route(const std::string& method, const std::vector<std::string>& p, const std::string& body) {
    log::debug(method + " /" + (p.empty() ? std::string() : p[0]));
    const bool post = method == "POST";
    const bool get = method == "GET";
    if (p.size() == 2 && p[0] == "quiver" && post) {
      const nlohmann::json req = parse_body(body);
      const ColouredQuiver q = quiver_of(req);
      if (p[1] == "validate") return ok(report::validate_json(q));
      if (p[1] == "mutate") return ok(report::mutate_json(q, vertices_of(req)));
      if (p[1] == "classify") return ok(report::classify_json(q));
      if (p[1] == "zero-part") return ok(report::gabriel_json(q));
      if (p[1] == "analyze") return ok(report::analyze_json(q));
    }
    if (p.size() == 2 && p[0] == "orbit" && p[1] == "enumerate" && post) return enumerate(parse_body(body));
    if (p.size() == 4 && p[0] == "standard" && get) {
      const int n = parse_int(p[2]);
      const int m = parse_int(p[3]);
      if (p[1] == "d") return ok(to_json(standard_d_quiver(n, m)));
      if (p[1] == "a") return ok(to_json(standard_a_quiver(n, m)));
    }
    if (!p.empty() && p[0] == "session") return session_route(method, p, body);
    if (p.empty() || (p[0] != "quiver" && p[0] != "orbit" && p[0] != "standard")) {
      return error(404, "NotFound", "no such endpoint");
    }
    return (post || get) ? error(404, "NotFound", "no such endpoint")
                         : error(405, "MethodNotAllowed", "use GET or POST");
  }

  Response enumerate(const nlohmann::json& req) {
    const ColouredQuiver q = quiver_of(req);
    std::size_t cap = config_.enumerate_cap;
    if (req.is_object() && req.contains("cap")) {
      const auto& c = req.at("cap");
      if (!c.is_number_integer() || c.get<long long>() < 1) {
        throw QuiverError(ErrorKind::Parse, "cap must be a positive integer");
      }
      cap = std::min<std::size_t>(cap, c.get<std::size_t>());
    }
    const OrbitReport r = mutation_class(q, cap);
    if (r.capped) {
      return error(409, std::string(to_string(ErrorKind::CapExceeded)),
                   "mutation class has more than " + std::to_string(cap) + " members");
    }
    return {200, "application/x-ndjson", report::orbit_ndjson(r)};
  }

  Json session_json(const std::string& id, const Session& s) const {
    return {{"id", id}, {"quiver", to_json(s.current)}, {"depth", s.undo.size()}};
  }

  void evict(Clock::time_point now) {
    for (auto it = sessions_.begin(); it != sessions_.end();) {
      if (now - it->second->last_used > config_.session_ttl) {
        log::info("session " + it->first + " expired");
        it = sessions_.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::shared_ptr<Session> find(const std::string& id, Clock::time_point now) {
    const std::lock_guard<std::mutex> lock(mu_);
    evict(now);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  Response session_route(const std::string& method, const std::vector<std::string>& p,
                         const std::string& body) {
    const Clock::time_point now = config_.clock();
    if (p.size() == 1 && method == "POST") {
      auto s = std::make_shared<Session>(quiver_of(parse_body(body)));
      s->last_used = now;
      std::string id;
      {
        const std::lock_guard<std::mutex> lock(mu_);
        evict(now);
        id = "s" + std::to_string(++next_id_);
        sessions_.emplace(id, s);
      }
      return ok(session_json(id, *s), 201);
    }
    if (p.size() < 2) return error(404, "NotFound", "no such endpoint");
    const std::shared_ptr<Session> s = find(p[1], now);
    if (!s) return error(404, "UnknownSession", "no session '" + p[1] + "'");
    const std::lock_guard<std::mutex> lock(s->mu);
    s->last_used = now;
    if (p.size() == 2 && method == "GET") return ok(session_json(p[1], *s));
    if (p.size() == 3 && method == "POST" && p[2] == "mutate") {
      const MutationSequence seq = vertices_of(parse_body(body));
      ColouredQuiver cur = s->current;
      std::vector<Step> steps;
      for (Vertex v : seq) {
        ColouredQuiver next = mutate(cur, v);
        steps.push_back({std::move(cur), v});
        cur = std::move(next);
      }
      // Applied only once every step succeeded.
      for (Step& st : steps) {
        s->undo.push_back(std::move(st));
        if (s->undo.size() > config_.undo_depth) s->undo.pop_front();
      }
      s->current = std::move(cur);
      return ok(session_json(p[1], *s));
    }
    if (p.size() == 3 && method == "POST" && p[2] == "undo") {
      if (s->undo.empty()) return error(409, "EmptyUndo", "nothing to undo");
      s->current = std::move(s->undo.back().before);
      s->undo.pop_back();
      return ok(session_json(p[1], *s));
    }
    return error(404, "NotFound", "no such endpoint");
  }

  ServiceConfig config_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 0;
};

}  // namespace colq

#endif  // COLQ_SERVICE_HPP
