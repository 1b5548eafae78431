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


#ifndef COLQ_CLASS_D_HPP
#define COLQ_CLASS_D_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "colq/class_a.hpp"
#include "colq/cycles.hpp"
#include "colq/quiver.hpp"

namespace colq {

enum class DVerdict { TypeI, TypeII, NotMember };

constexpr std::string_view to_string(DVerdict v) {
  switch (v) {
    case DVerdict::TypeI: return "TypeI";
    case DVerdict::TypeII: return "TypeII";
    case DVerdict::NotMember: return "NotMember";
  }
  return "?";
}

struct TypeIWitness {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<Vertex> x;  // k middle vertices
  std::vector<Vertex> y;  // r middle vertices, possibly none
  std::vector<VertexSet> components;
};

struct TypeIIWitness {
  std::vector<Vertex> cycle;             // x_1..x_k with w(x_1 .. x_k x_1) = m - 1
  std::vector<std::vector<Vertex>> cliques;  // entry i: the z's on arrow x_i -> x_{i+1}
  std::vector<VertexSet> components;
};

/// `literal` checks the definition's conditions only. The default adds two conditions
/// the class also satisfies: an attachment vertex sees a single clique inside its
/// component, and for middle vertices x, x' on the same side the triangles (a x x') and
/// (b x x') reach weight m - 1 in the same direction.
struct DOptions {
  bool literal = false;
};

struct DClassification {
  DVerdict verdict = DVerdict::NotMember;
  std::optional<TypeIWitness> type_i;
  std::optional<TypeIIWitness> type_ii;
  bool both_types = false;
  std::string reason;  // set for NotMember
};

namespace detail {

inline Adjacency without_edges_inside(Adjacency adj, VertexSet s) {
  for (Vertex v : members(s)) adj[static_cast<std::size_t>(v - 1)] &= ~s;
  return adj;
}

inline Adjacency without_vertices(Adjacency adj, VertexSet s) {
  for (auto& row : adj) row &= ~s;
  for (Vertex v : members(s)) {
    if (v <= static_cast<int>(adj.size())) adj[static_cast<std::size_t>(v - 1)] = 0;
  }
  return adj;
}

inline std::vector<VertexSet> split_components(const Adjacency& adj, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (rest != 0) {
    VertexSet comp = vertex_bit(std::countr_zero(rest) + 1);
    for (VertexSet frontier = comp; frontier != 0;) {
      VertexSet next = 0;
      for (Vertex v : members(frontier)) next |= nbrs(adj, v) & within;
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

// Residual check shared by both types: one component per attachment vertex, each in
// class A, with the attachment vertex seeing a single clique inside it.
inline std::optional<std::string> check_residual(const ColouredQuiver& q, const Adjacency& res,
                                                 VertexSet within, VertexSet attach,
                                                 std::vector<VertexSet>& comps, bool literal) {
  comps = split_components(res, within);
  if (comps.size() != static_cast<std::size_t>(set_size(attach))) {
    return "residual has " + std::to_string(comps.size()) + " components, expected " +
           std::to_string(set_size(attach));
  }
  for (VertexSet c : comps) {
    if (set_size(c & attach) != 1) return "residual component " + describe(members(c)) +
                                          " does not hold exactly one attachment vertex";
    const auto bad = class_a_violations(q, res, c, false, nullptr);
    if (!bad.empty()) {
      return "residual component " + describe(members(c)) + " not in class A: " +
             bad.front().condition + " " + bad.front().location;
    }
    const Vertex z = std::countr_zero(c & attach) + 1;
    if (!literal && !is_clique(res, nbrs(res, z) & c)) {
      return "attachment vertex " + std::to_string(z) + " sees two cliques in its component";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> try_type_i(const ColouredQuiver& q, const Adjacency& adj,
                                             Vertex a, Vertex b, TypeIWitness& w, bool literal) {
  const int m = q.m();
  const VertexSet mid = nbrs(adj, a);
  if (contains(mid, b)) return "a and b adjacent";
  if (nbrs(adj, b) != mid) return "a and b have different neighbours";
  if (mid == 0 || set_size(mid) > m + 1) return "middle size out of range";
  std::vector<VertexSet> parts = split_components(adj, mid);
  if (parts.size() > 2) return "middle vertices form more than two cliques";
  for (VertexSet p : parts) {
    if (!is_clique(adj, p)) return "middle part " + describe(members(p)) + " is not a clique";
  }
  const VertexSet xs = parts[0];
  const VertexSet ys = parts.size() == 2 ? parts[1] : 0;
  Adjacency res = without_vertices(adj, vertex_bit(a) | vertex_bit(b));
  res = without_edges_inside(without_edges_inside(std::move(res), xs), ys);
  std::vector<VertexSet> comps;
  const VertexSet rest = q.all_vertices() & ~(vertex_bit(a) | vertex_bit(b));
  if (auto err = check_residual(q, res, rest, mid, comps, literal)) return err;
  for (VertexSet side : {xs, ys}) {
    if (literal) break;
    for (Vertex x : members(side)) {
      for (Vertex x2 : members(side)) {
        if (x2 <= x) continue;
        if (path_weight(q, ring_path({a, x, x2})) != path_weight(q, ring_path({b, x, x2}))) {
          return "triangles " + describe({a, x, x2}) + " and " + describe({b, x, x2}) +
                 " are oriented oppositely";
        }
      }
    }
  }
  if (ys != 0) {
    for (Vertex x : members(xs)) {
      for (Vertex y : members(ys)) {
        if (kappa(q, {y, a, x, b}) != m - 1) {
          return "cycle " + describe({y, a, x, b}) + " has colouration " +
                 std::to_string(kappa(q, {y, a, x, b}));
        }
      }
    }
  }
  w = TypeIWitness{a, b, members(xs), members(ys), comps};
  return std::nullopt;
}

inline std::optional<std::string> try_type_ii(const ColouredQuiver& q, const Adjacency& adj,
                                              std::vector<Vertex> ring, TypeIIWitness& w,
                                              bool literal) {
  const int m = q.m();
  const int k = static_cast<int>(ring.size());
  if (kappa(q, ring) != m - 1) return "cycle " + describe(ring) + " colouration is not m-1";
  if (path_weight(q, ring_path(ring)) != m - 1) std::reverse(ring.begin() + 1, ring.end());
  const VertexSet centre = make_set(ring);
  auto at = [&](int i) { return ring[static_cast<std::size_t>(((i % k) + k) % k)]; };
  std::vector<VertexSet> z(static_cast<std::size_t>(k), 0);
  VertexSet attach = 0;
  for (int i = 0; i < k; ++i) {
    const Vertex xi = at(i);
    const Vertex xj = at(i + 1);
    const VertexSet zi = nbrs(adj, xi) & nbrs(adj, xj) & ~centre;
    for (Vertex v : members(zi)) {
      if ((nbrs(adj, v) & centre) != (vertex_bit(xi) | vertex_bit(xj))) {
        return "vertex " + std::to_string(v) + " meets the central cycle outside one arrow";
      }
    }
    if (set_size(zi) > m) return "clique on arrow " + describe({xi, xj}) + " exceeds m+2";
    if (!is_clique(adj, zi)) return "attachments of arrow " + describe({xi, xj}) +
                                    " do not form a clique";
    z[static_cast<std::size_t>(i)] = zi;
    attach |= zi;
  }
  for (int i = 0; i < k; ++i) {
    const VertexSet allowed = centre | z[static_cast<std::size_t>(i)] |
                              z[static_cast<std::size_t>((i + k - 1) % k)];
    if ((nbrs(adj, at(i)) & ~allowed) != 0) {
      return "central vertex " + std::to_string(at(i)) + " has a stray neighbour";
    }
  }
  Adjacency res = without_vertices(adj, centre);
  for (VertexSet zi : z) res = without_edges_inside(std::move(res), zi);
  std::vector<VertexSet> comps;
  if (auto err = check_residual(q, res, q.all_vertices() & ~centre, attach, comps, literal)) {
    return err;
  }
  for (int i = 0; i < k; ++i) {
    for (Vertex v : members(z[static_cast<std::size_t>(i)])) {
      if (path_weight(q, ring_path({at(i), at(i + 1), v})) != m - 1) {
        return "triangle " + describe({at(i), at(i + 1), v}) + " has the wrong weight";
      }
    }
  }
  if (k == 3) {
    for (int i = 0; i < 3; ++i) {
      if (q.colour(at(i), at(i + 1)) != 0) continue;
      const int others = set_size(z[static_cast<std::size_t>((i + 1) % 3)]) +
                         set_size(z[static_cast<std::size_t>((i + 2) % 3)]);
      if (others > m + 1) return "colour-0 central arrow with too many attachments elsewhere";
    }
  }
  w.cycle = ring;
  w.cliques.clear();
  for (VertexSet zi : z) w.cliques.push_back(members(zi));
  w.components = comps;
  return std::nullopt;
}

}  // namespace detail

/// Decides membership in the D_n class and returns a witness.
inline DClassification classify_D(const ColouredQuiver& q, DOptions opt = {}) {
  DClassification out;
  if (!q.is_simple()) {
    out.reason = "quiver is not simple";
    return out;
  }
  if (!is_connected(q)) {
    out.reason = "quiver is not connected";
    return out;
  }
  for (const Triangle& t : triangles(q)) {
    if (t.colouration != q.m() - 1) {
      out.reason = "triangle " + describe({t.a, t.b, t.c}) + " has colouration " +
                   std::to_string(t.colouration);
      return out;
    }
  }
  const Adjacency adj = adjacency(q);
  std::string why_i = "no pair of non-adjacent vertices with equal neighbourhoods";
  for (Vertex b = q.n(); b >= 1 && !out.type_i; --b) {
    for (Vertex a = b - 1; a >= 1; --a) {
      if (contains(nbrs(adj, a), b) || nbrs(adj, a) != nbrs(adj, b)) continue;
      TypeIWitness w;
      if (auto err = detail::try_type_i(q, adj, a, b, w, opt.literal)) {
        why_i = *err;
      } else {
        out.type_i = std::move(w);
        break;
      }
    }
  }
  std::string why_ii = "no induced cycle";
  for (const auto& ring : induced_cycles(adj, 3)) {
    TypeIIWitness w;
    if (auto err = detail::try_type_ii(q, adj, ring, w, opt.literal)) {
      why_ii = *err;
    } else {
      out.type_ii = std::move(w);
      break;
    }
  }
  out.both_types = out.type_i && out.type_ii;
  if (out.type_i) {
    out.verdict = DVerdict::TypeI;
  } else if (out.type_ii) {
    out.verdict = DVerdict::TypeII;
  } else {
    out.reason = "type I: " + why_i + "; type II: " + why_ii;
  }
  return out;
}

}  // namespace colq

#endif  // COLQ_CLASS_D_HPP
