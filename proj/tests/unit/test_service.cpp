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


#include <catch_amalgamated.hpp>

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "colq/http.hpp"
#include "colq/service.hpp"

using namespace colq;
using nlohmann::json;

namespace {

const std::string kD4 = R"({"n":4,"m":2,"arrows":[[1,2,0],[2,3,0],[2,4,0]]})";

json body_of(const Response& r) { return json::parse(r.body); }

std::string create_session(Service& s, const std::string& quiver) {
  const Response r = s.handle("POST", "/session", quiver);
  REQUIRE(r.status == 201);
  return body_of(r)["id"].get<std::string>();
}

}  // namespace

TEST_CASE("standard quiver endpoint", "[service]") {
  Service s;
  const Response r = s.handle("GET", "/standard/d/4/2", "");
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/json");
  CHECK(r.body == kD4 + "\n");
  CHECK(s.handle("GET", "/standard/d/3/2", "").status == 400);
  CHECK(s.handle("GET", "/standard/d/x/2", "").status == 400);
  CHECK(s.handle("GET", "/standard/a/3/1", "").body == R"({"n":3,"m":1,"arrows":[[1,2,0],[2,3,0]]})" "\n");
}

TEST_CASE("stateless mutate", "[service]") {
  Service s;
  const Response r = s.handle("POST", "/quiver/mutate", R"({"quiver":)" + kD4 + R"(,"vertex":1})");
  REQUIRE(r.status == 200);
  CHECK(body_of(r)["arrows"] == json::parse("[[2,1,0],[2,3,0],[2,4,0]]"));
  const Response seq = s.handle("POST", "/quiver/mutate", R"({"quiver":)" + kD4 + R"(,"vertices":[2,2,2]})");
  CHECK(body_of(seq) == json::parse(kD4));
  CHECK(s.handle("POST", "/quiver/mutate", R"({"quiver":)" + kD4 + "}").status == 400);
  const Response out = s.handle("POST", "/quiver/mutate", R"({"quiver":)" + kD4 + R"(,"vertex":7})");
  CHECK(out.status == 400);
  CHECK(body_of(out)["error"] == "VertexOutOfRange");
}

TEST_CASE("invalid quivers name the violated axiom", "[service]") {
  Service s;
  auto err = [&](const std::string& body) {
    const Response r = s.handle("POST", "/quiver/validate", body);
    CHECK(r.status == 400);
    return body_of(r)["error"].get<std::string>();
  };
  CHECK(err(R"({"n":2,"m":1,"arrows":[[1,2,0],[1,2,1]]})") == "MonochromaticityViolation");
  CHECK(err(R"({"n":2,"m":2,"arrows":[[1,2,0],[2,1,0]]})") == "SkewConflict");
  CHECK(err(R"({"n":2,"m":1,"arrows":[[1,1,0]]})") == "LoopArrow");
  CHECK(err(R"({"n":2,"m":1,"arrows":[[1,2,5]]})") == "ColourOutOfRange");
  CHECK(err(R"({"n":2,"m":1,"arrows":[[1,3,0]]})") == "VertexOutOfRange");
  CHECK(err("{not json") == "Parse");
  const Response ok = s.handle("POST", "/quiver/validate", kD4);
  CHECK(ok.status == 200);
  CHECK(body_of(ok)["valid"] == true);
}

TEST_CASE("classify and zero-part endpoints", "[service]") {
  Service s;
  const json c = body_of(s.handle("POST", "/quiver/classify", R"({"quiver":)" + kD4 + "}"));
  CHECK(c["verdict"] == "TypeI");
  CHECK(c["a"] == 3);
  CHECK(c["b"] == 4);
  const json z = body_of(s.handle("POST", "/quiver/zero-part", kD4));
  CHECK(z["arrows"] == json::parse("[[1,2],[2,3],[2,4]]"));
  CHECK(z["components"][0]["verdict"] == "Acyclic");
}

TEST_CASE("orbit enumeration streams NDJSON and honours caps", "[service]") {
  ServiceConfig cfg;
  cfg.enumerate_cap = 100;
  Service s(cfg);
  const Response r = s.handle("POST", "/orbit/enumerate", R"({"quiver":)" + kD4 + "}");
  REQUIRE(r.status == 200);
  CHECK(r.content_type == "application/x-ndjson");
  std::vector<json> lines;
  std::size_t start = 0;
  while (start < r.body.size()) {
    const std::size_t end = r.body.find('\n', start);
    lines.push_back(json::parse(r.body.substr(start, end - start)));
    start = end + 1;
  }
  REQUIRE(lines.size() == 16);
  CHECK(lines.back()["done"] == true);
  CHECK(lines.back()["members"] == 15);
  CHECK(lines[0]["index"] == 0);

  CHECK(s.handle("POST", "/orbit/enumerate", R"({"quiver":)" + kD4 + R"(,"cap":10})").status == 409);
  // the request cap cannot raise the service cap
  const Response big = s.handle("POST", "/orbit/enumerate",
                                R"({"quiver":{"n":7,"m":2,"arrows":[[1,2,0],[2,3,0],[3,4,0],[4,5,0],[5,6,0],[5,7,0]]},"cap":100000})");
  CHECK(big.status == 409);
  CHECK(body_of(big)["error"] == "CapExceeded");
  CHECK(s.handle("POST", "/orbit/enumerate", R"({"quiver":)" + kD4 + R"(,"cap":0})").status == 400);
}

TEST_CASE("routing errors", "[service]") {
  Service s;
  CHECK(s.handle("GET", "/nope", "").status == 404);
  CHECK(s.handle("GET", "/quiver/validate", "").status == 404);
  CHECK(s.handle("DELETE", "/quiver/validate", "").status == 405);
}

TEST_CASE("sessions mutate and undo", "[service]") {
  Service s;
  const std::string id = create_session(s, kD4);
  const json before = json::parse(kD4);

  Response r = s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":1})");
  REQUIRE(r.status == 200);
  CHECK(body_of(r)["depth"] == 1);
  CHECK(body_of(r)["quiver"] != before);
  r = s.handle("POST", "/session/" + id + "/undo", "");
  REQUIRE(r.status == 200);
  CHECK(body_of(r)["quiver"] == before);
  CHECK(body_of(r)["depth"] == 0);
  CHECK(s.handle("POST", "/session/" + id + "/undo", "").status == 409);

  // mu_v followed by m more mutations at v is the identity
  for (int v = 1; v <= 4; ++v) {
    for (int i = 0; i < 3; ++i) s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":)" + std::to_string(v) + "}");
    CHECK(body_of(s.handle("GET", "/session/" + id, ""))["quiver"] == before);
  }
  CHECK(body_of(s.handle("GET", "/session/" + id, ""))["depth"] == 12);

  CHECK(s.handle("POST", "/session/missing/mutate", R"({"vertex":1})").status == 404);
  CHECK(s.handle("POST", "/session/missing/undo", "").status == 404);
  CHECK(s.handle("POST", "/session", R"({"n":0,"m":1})").status == 400);
  // a failing step leaves the session untouched
  CHECK(s.handle("POST", "/session/" + id + "/mutate", R"({"vertices":[1,9]})").status == 400);
  CHECK(body_of(s.handle("GET", "/session/" + id, ""))["depth"] == 12);
}

TEST_CASE("session undo depth is bounded", "[service]") {
  ServiceConfig cfg;
  cfg.undo_depth = 2;
  Service s(cfg);
  const std::string id = create_session(s, kD4);
  s.handle("POST", "/session/" + id + "/mutate", R"({"vertices":[1,2,3]})");
  CHECK(s.handle("POST", "/session/" + id + "/undo", "").status == 200);
  const Response last = s.handle("POST", "/session/" + id + "/undo", "");
  CHECK(last.status == 200);
  // two undos from mu_3 mu_2 mu_1 leave mu_1 applied
  CHECK(body_of(last)["quiver"] == json::parse(to_json(mutate(standard_d_quiver(4, 2), 1)).dump()));
  CHECK(s.handle("POST", "/session/" + id + "/undo", "").status == 409);
}

TEST_CASE("sessions expire", "[service]") {
  auto now = std::make_shared<Clock::time_point>(Clock::time_point{});
  ServiceConfig cfg;
  cfg.session_ttl = std::chrono::seconds(10);
  cfg.clock = [now] { return *now; };
  Service s(cfg);
  const std::string id = create_session(s, kD4);
  *now += std::chrono::seconds(9);
  CHECK(s.handle("GET", "/session/" + id, "").status == 200);
  *now += std::chrono::seconds(9);  // last use refreshed the deadline
  CHECK(s.handle("GET", "/session/" + id, "").status == 200);
  *now += std::chrono::seconds(11);
  CHECK(s.handle("GET", "/session/" + id, "").status == 404);
  CHECK(s.session_count() == 0);
}

TEST_CASE("concurrent requests on one session are serialized", "[service]") {
  Service s;
  const std::string id = create_session(s, kD4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&s, &id, t] {
      for (int i = 0; i < 25; ++i) {
        s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":)" + std::to_string(1 + (t + i) % 4) + "}");
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(body_of(s.handle("GET", "/session/" + id, ""))["depth"] == 100);
  for (int i = 0; i < 100; ++i) REQUIRE(s.handle("POST", "/session/" + id + "/undo", "").status == 200);
  CHECK(body_of(s.handle("GET", "/session/" + id, ""))["quiver"] == json::parse(kD4));
}

TEST_CASE("HTTP transport forwards to the service", "[http]") {
  Service service;
  httplib::Server server;
  mount(server, service);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&server] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto got = client.Get("/standard/d/4/2");
  REQUIRE(got);
  CHECK(got->status == 200);
  CHECK(got->body == kD4 + "\n");

  auto created = client.Post("/session", kD4, "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = json::parse(created->body)["id"];
  auto mutated = client.Post("/session/" + id + "/mutate", R"({"vertex":2})", "application/json");
  REQUIRE(mutated);
  CHECK(mutated->status == 200);
  auto undone = client.Post("/session/" + id + "/undo", "", "application/json");
  REQUIRE(undone);
  CHECK(json::parse(undone->body)["quiver"] == json::parse(kD4));
  auto missing = client.Post("/session/zzz/undo", "", "application/json");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto bad = client.Post("/quiver/validate", R"({"n":2,"m":1,"arrows":[[1,2,0],[1,2,1]]})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["error"] == "MonochromaticityViolation");

  server.stop();
  worker.join();
}
