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


#ifndef COLQ_REPORT_HPP
#define COLQ_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "colq/canonical.hpp"
#include "colq/class_d.hpp"
#include "colq/cycles.hpp"
#include "colq/enumeration.hpp"
#include "colq/gabriel.hpp"
#include "colq/io.hpp"
#include "colq/mutation.hpp"

// JSON bodies shared by the CLI (--json) and the HTTP service, so both print the
// same bytes for the same input.
namespace colq::report {

using json = nlohmann::ordered_json;

inline json set_json(VertexSet s) { return members(s); }

inline json validate_json(const ColouredQuiver& q) {
  return {{"valid", true}, {"simple", q.is_simple()}, {"quiver", to_json(q)}};
}

inline json mutate_json(const ColouredQuiver& q, const MutationSequence& steps) {
  return to_json(mutate_seq(q, steps));
}

inline json classify_json(const ColouredQuiver& q) {
  const DClassification c = classify_D(q);
  json out{{"verdict", std::string(to_string(c.verdict))}};
  if (c.type_i) {
    const TypeIWitness& w = *c.type_i;
    out["a"] = w.a;
    out["b"] = w.b;
    out["x"] = w.x;
    out["y"] = w.y;
    json comps = json::array();
    for (VertexSet s : w.components) comps.push_back(set_json(s));
    out["components"] = comps;
  } else if (c.type_ii) {
    const TypeIIWitness& w = *c.type_ii;
    out["cycle"] = w.cycle;
    out["cliques"] = w.cliques;
    json comps = json::array();
    for (VertexSet s : w.components) comps.push_back(set_json(s));
    out["components"] = comps;
  } else {
    out["reason"] = c.reason;
  }
  if (c.verdict != DVerdict::NotMember) out["both_types"] = c.both_types;
  return out;
}

inline json gabriel_json(const ColouredQuiver& q) {
  const GabrielReport g = gabriel_report(q);
  json arrows = json::array();
  for (auto [s, t] : g.zero.arrows) arrows.push_back({s, t});
  json comps = json::array();
  for (const GabrielVerdict& v : g.components) {
    json c{{"vertices", set_json(v.component)}, {"verdict", std::string(to_string(v.kind))}};
    if (v.kind == GabrielKind::SubtypeI) {
      c["cycle"] = v.cycle;
      c["a"] = v.a;
      c["b"] = v.b;
    } else if (v.kind == GabrielKind::SubtypeII) {
      c["cycle"] = v.cycle;
      c["blocks"] = v.block_sizes;
      c["removed_blocks"] = v.removed_blocks;
    } else if (v.kind == GabrielKind::Unverified) {
      c["reason"] = v.reason;
    }
    comps.push_back(c);
  }
  return {{"n", g.zero.n},
          {"arrows", arrows},
          {"degree_ok", g.degrees.ok},
          {"degree_offenders", g.degrees.offenders},
          {"components", comps}};
}

/// Plain digraph text: one `i j` line per zero-coloured arrow.
inline std::string zero_part_text(const ColouredQuiver& q) {
  std::string out;
  for (auto [s, t] : zero_part(q).arrows) out += std::to_string(s) + ' ' + std::to_string(t) + '\n';
  return out;
}

inline json analyze_json(const ColouredQuiver& q) {
  const Adjacency adj = adjacency(q);
  json out;
  if (is_connected(q)) {
    out["euler_characteristic"] = euler_characteristic(q);
  } else {
    out["euler_characteristic"] = nullptr;
  }
  out["holes"] = induced_cycles(adj, 4);
  json tris = json::array();
  for (const Triangle& t : triangles(q)) {
    tris.push_back({{"vertices", {t.a, t.b, t.c}}, {"colouration", t.colouration}});
  }
  out["triangles"] = tris;
  json cliques = json::array();
  for (VertexSet c : maximal_cliques(adj)) {
    if (set_size(c) >= 3) cliques.push_back(set_json(c));
  }
  out["cliques"] = cliques;
  return out;
}

/// One NDJSON line per member, then a summary line.
inline std::string orbit_ndjson(const OrbitReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    out += json{{"index", i}, {"key", r.members[i].short_hash()},
                {"quiver", to_json(quiver_from_key(r.members[i]))}}
               .dump();
    out += '\n';
  }
  out += json{{"done", true}, {"members", r.members.size()}, {"capped", r.capped},
              {"depth", r.depth}, {"diameter", r.diameter}}
             .dump();
  out += '\n';
  return out;
}

inline json orbit_index_json(const OrbitReport& r) {
  json members = json::array();
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    members.push_back({{"index", i}, {"key", r.members[i].short_hash()},
                       {"file", r.members[i].short_hash() + ".cq"}});
  }
  json edges = json::array();
  for (const OrbitEdge& e : r.edges) edges.push_back({e.from, e.vertex, e.to});
  return {{"seed", r.seed.short_hash()}, {"members", members}, {"edges", edges},
          {"depth", r.depth}, {"diameter", r.diameter}, {"capped", r.capped}};
}

inline json stats_json(const OrbitStats& s) {
  json euler = json::object();
  for (auto [k, v] : s.euler) euler[std::to_string(k)] = v;
  json tri = json::object();
  for (auto [k, v] : s.triangles) tri[std::to_string(k)] = v;
  return {{"euler_characteristic", euler}, {"triangles", tri}, {"verdicts", s.verdicts},
          {"both_types", s.both_types}};
}

/// Response and CLI body: compact JSON plus a newline.
inline std::string body(const json& j) { return j.dump() + '\n'; }

inline json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace colq::report

#endif  // COLQ_REPORT_HPP
