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


#ifndef COLQ_CYCLES_HPP
#define COLQ_CYCLES_HPP

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colq/quiver.hpp"

namespace colq {

/// x_1 .. x_{k+1}; a cycle repeats its first vertex at the end.
struct VertexPath {
  std::vector<Vertex> vertices;

  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  /// Number of arrows traversed.
  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

/// Closes a ring x_1 .. x_k into the path x_1 .. x_k x_1.
inline VertexPath ring_path(std::vector<Vertex> ring) {
  if (!ring.empty()) ring.push_back(ring.front());
  return VertexPath{std::move(ring)};
}

struct CycleReport {
  VertexPath cycle;
  int forward_weight = 0;
  int reverse_weight = 0;
  int colouration = 0;
};

/// Sum of arrow colours along p.
inline int path_weight(const ColouredQuiver& q, const VertexPath& p) {
  int total = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    total += q.colour(p.vertices[i], p.vertices[i + 1]);  // throws MissingArrow
  }
  return total;
}

inline CycleReport cycle_colouration(const ColouredQuiver& q, const VertexPath& cycle) {
  if (!cycle.closed() || cycle.length() < 3) {
    throw QuiverError(ErrorKind::NotACycle, "a cycle must be closed and have at least 3 arrows");
  }
  std::vector<Vertex> ring(cycle.vertices.begin(), cycle.vertices.end() - 1);
  std::vector<Vertex> sorted = ring;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw QuiverError(ErrorKind::NotACycle, "cycle repeats a vertex");
  }
  VertexPath reversed{std::vector<Vertex>(cycle.vertices.rbegin(), cycle.vertices.rend())};
  CycleReport r;
  r.cycle = cycle;
  r.forward_weight = path_weight(q, cycle);
  r.reverse_weight = path_weight(q, reversed);
  r.colouration = std::min(r.forward_weight, r.reverse_weight);
  return r;
}

/// Colouration of the ring x_1 .. x_k (not closed).
inline int kappa(const ColouredQuiver& q, const std::vector<Vertex>& ring) {
  return cycle_colouration(q, ring_path(ring)).colouration;
}

/// Edges minus vertices plus one, edges counted with multiplicity.
inline int euler_characteristic(const ColouredQuiver& q) {
  if (!is_connected(q)) throw QuiverError(ErrorKind::Disconnected, "quiver is not connected");
  return underlying_graph(q).edge_count() - q.n() + 1;
}

/// Underlying simple graph as neighbour masks; entry v - 1 holds N(v).
using Adjacency = std::vector<VertexSet>;

inline Adjacency adjacency(const ColouredQuiver& q) {
  Adjacency adj(static_cast<std::size_t>(q.n()));
  for (Vertex v = 1; v <= q.n(); ++v) adj[static_cast<std::size_t>(v - 1)] = q.neighbours(v);
  return adj;
}

inline VertexSet nbrs(const Adjacency& adj, Vertex v) { return adj[static_cast<std::size_t>(v - 1)]; }

inline bool is_clique(const Adjacency& adj, VertexSet s) {
  for (Vertex v : members(s)) {
    if ((s & ~vertex_bit(v) & ~nbrs(adj, v)) != 0) return false;
  }
  return true;
}

inline bool is_clique(const ColouredQuiver& q, VertexSet s) { return is_clique(adjacency(q), s); }

/// Induced cycles of length >= min_len, once each. Each ring starts at its smallest
/// vertex and its second vertex is smaller than its last.
inline std::vector<std::vector<Vertex>> induced_cycles(const Adjacency& adj, int min_len,
                                                       VertexSet within = ~VertexSet{0}) {
  std::vector<std::vector<Vertex>> out;
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> path;
  std::function<void(VertexSet)> extend = [&](VertexSet interior) {
    const Vertex s = path.front();
    const Vertex tail = path.back();
    for (Vertex w : members(nbrs(adj, tail) & within)) {
      if (w <= s || std::find(path.begin(), path.end(), w) != path.end()) continue;
      if ((nbrs(adj, w) & interior) != 0) continue;
      if (path.size() >= 2 && contains(nbrs(adj, w), s)) {
        if (path[1] < w && static_cast<int>(path.size()) + 1 >= min_len) {
          out.push_back(path);
          out.back().push_back(w);
        }
        continue;
      }
      path.push_back(w);
      extend(path.size() >= 3 ? interior | vertex_bit(tail) : interior);
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    if (!contains(within, s)) continue;
    path.assign(1, s);
    extend(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexPath> enumerate_induced_cycles(const ColouredQuiver& q, int min_len) {
  std::vector<VertexPath> out;
  for (auto& ring : induced_cycles(adjacency(q), std::max(min_len, 3))) {
    out.push_back(ring_path(std::move(ring)));
  }
  return out;
}

/// Holes: induced cycles of length at least four.
inline bool has_hole(const Adjacency& adj, VertexSet within = ~VertexSet{0}) {
  return !induced_cycles(adj, 4, within).empty();
}

/// All simple cycles of length >= 3 in an undirected graph, once each, same
/// normal form as induced_cycles.
inline std::vector<std::vector<Vertex>> simple_cycles(const Adjacency& adj,
                                                      VertexSet within = ~VertexSet{0}) {
  std::vector<std::vector<Vertex>> out;
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> path;
  std::function<void(VertexSet)> extend = [&](VertexSet used) {
    const Vertex s = path.front();
    for (Vertex w : members(nbrs(adj, path.back()) & within & ~used)) {
      if (w <= s) continue;
      if (path.size() >= 2 && contains(nbrs(adj, w), s) && path[1] < w) {
        out.push_back(path);
        out.back().push_back(w);
      }
      path.push_back(w);
      extend(used | vertex_bit(w));
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    if (!contains(within, s)) continue;
    path.assign(1, s);
    extend(vertex_bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  int colouration = 0;
};

inline std::vector<Triangle> triangles(const ColouredQuiver& q) {
  std::vector<Triangle> out;
  for (Vertex a = 1; a <= q.n(); ++a) {
    for (Vertex b : members(q.neighbours(a))) {
      if (b <= a) continue;
      for (Vertex c : members(q.neighbours(a) & q.neighbours(b))) {
        if (c <= b) continue;
        out.push_back({a, b, c, kappa(q, {a, b, c})});
      }
    }
  }
  return out;
}

/// Maximal cliques (Bron-Kerbosch with pivoting), each as a vertex set.
inline std::vector<VertexSet> maximal_cliques(const Adjacency& adj) {
  std::vector<VertexSet> out;
  const int n = static_cast<int>(adj.size());
  const VertexSet all = n == 64 ? ~VertexSet{0} : vertex_bit(n + 1) - 1;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p,
                                                                VertexSet x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    const Vertex pivot = std::countr_zero(p | x) + 1;
    for (Vertex v : members(p & ~nbrs(adj, pivot))) {
      bk(r | vertex_bit(v), p & nbrs(adj, v), x & nbrs(adj, v));
      p &= ~vertex_bit(v);
      x |= vertex_bit(v);
    }
  };
  bk(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Two cliques through v covering its closed neighbourhood.
struct CliqueSplit {
  VertexSet first = 0;   // the larger one
  VertexSet second = 0;

  int first_size() const { return set_size(first); }
  int second_size() const { return set_size(second); }
};

/// Splits N[v] into two cliques meeting only in v with nothing between them.
/// Valency 0 gives ({v}, {v}).
inline std::optional<CliqueSplit> two_clique_split(const Adjacency& adj, Vertex v,
                                                   VertexSet within = ~VertexSet{0}) {
  const VertexSet nb = nbrs(adj, v) & within;
  std::vector<VertexSet> parts;
  VertexSet rest = nb;
  while (rest != 0) {
    VertexSet comp = vertex_bit(std::countr_zero(rest) + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (Vertex u : members(frontier)) next |= nbrs(adj, u) & nb;
      frontier = next & ~comp;
      comp |= next;
    }
    parts.push_back(comp);
    rest &= ~comp;
    if (parts.size() > 2) return std::nullopt;
  }
  for (VertexSet p : parts) {
    if (!is_clique(adj, p)) return std::nullopt;
  }
  const VertexSet self = vertex_bit(v);
  CliqueSplit s{self | (parts.empty() ? 0 : parts[0]), self | (parts.size() < 2 ? 0 : parts[1])};
  if (s.second_size() > s.first_size()) std::swap(s.first, s.second);
  return s;
}

inline std::optional<CliqueSplit> two_clique_split(const ColouredQuiver& q, Vertex v) {
  return two_clique_split(adjacency(q), v);
}

/// {a, b} together with `middles` is complete except for the missing pair {a, b}.
inline bool quasi_complete_check(const ColouredQuiver& q, Vertex a, Vertex b, VertexSet middles) {
  if (a == b || contains(middles, a) || contains(middles, b)) return false;
  if (q.adjacent(a, b)) return false;
  const Adjacency adj = adjacency(q);
  if (!is_clique(adj, middles)) return false;
  return (nbrs(adj, a) & middles) == middles && (nbrs(adj, b) & middles) == middles;
}

}  // namespace colq

#endif  // COLQ_CYCLES_HPP
