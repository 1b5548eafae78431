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


#ifndef COLQ_CLASS_A_HPP
#define COLQ_CLASS_A_HPP

#include <optional>
#include <string>
#include <vector>

#include "colq/cycles.hpp"
#include "colq/quiver.hpp"

namespace colq {

struct Violation {
  std::string condition;
  std::string location;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const std::vector<Vertex>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s + ")";
}

struct AClassReport {
  bool accepted = false;
  std::vector<std::optional<CliqueSplit>> splits;  // entry v - 1
  std::vector<Violation> violations;
};

namespace detail {

// Class-A conditions on the subgraph `adj` restricted to `within`; colours come from q.
// Stops at the first violation unless `all` is set.
inline std::vector<Violation> class_a_violations(const ColouredQuiver& q, const Adjacency& adj,
                                                 VertexSet within, bool all,
                                                 std::vector<std::optional<CliqueSplit>>* splits) {
  std::vector<Violation> out;
  auto fail = [&](std::string cond, std::string where) {
    out.push_back({std::move(cond), std::move(where)});
    return !all;
  };
  const std::vector<Vertex> vs = members(within);
  if (vs.empty()) return out;
  for (Vertex u : vs) {
    for (Vertex v : members(nbrs(adj, u) & within)) {
      if (u < v && q.multiplicity(u, v) > 1) {
        if (fail("simple", describe({u, v}))) return out;
      }
    }
  }
  VertexSet seen = vertex_bit(vs.front());
  for (VertexSet frontier = seen; frontier != 0;) {
    VertexSet next = 0;
    for (Vertex v : members(frontier)) next |= nbrs(adj, v) & within;
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != within && fail("connected", describe(members(within & ~seen)))) return out;
  for (const auto& hole : induced_cycles(adj, 4, within)) {
    if (fail("no-holes", describe(hole))) return out;
  }
  for (Vertex v : vs) {
    const auto split = two_clique_split(adj, v, within);
    if (splits != nullptr) (*splits)[static_cast<std::size_t>(v - 1)] = split;
    if (!split) {
      if (fail("two-clique-split", describe({v}))) return out;
    } else if (split->first_size() > q.m() + 2) {
      if (fail("clique-size", describe(members(split->first)))) return out;
    }
  }
  for (const auto& tri : induced_cycles(adj, 3, within)) {
    if (tri.size() != 3) continue;
    if (kappa(q, tri) != q.m() - 1 && fail("triangle-colouration", describe(tri))) return out;
  }
  return out;
}

}  // namespace detail

/// Membership in the mutation class of A_n.
inline AClassReport is_in_class_A(const ColouredQuiver& q) {
  AClassReport r;
  r.splits.resize(static_cast<std::size_t>(q.n()));
  r.violations =
      detail::class_a_violations(q, adjacency(q), q.all_vertices(), true, &r.splits);
  r.accepted = r.violations.empty();
  return r;
}

}  // namespace colq

#endif  // COLQ_CLASS_A_HPP
