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


#ifndef COLQ_GABRIEL_HPP
#define COLQ_GABRIEL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colq/cycles.hpp"
#include "colq/quiver.hpp"

namespace colq {

/// Arrows of colour 0, uncoloured. Keeps every vertex, so it may be disconnected.
struct ZeroPart {
  int n = 0;
  int m = 0;
  std::vector<std::pair<Vertex, Vertex>> arrows;  // sorted, repeated by multiplicity
  std::vector<VertexSet> components;              // ordered by smallest label

  std::vector<VertexSet> out_sets() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(n), 0);
    for (auto [s, t] : arrows) out[static_cast<std::size_t>(s - 1)] |= vertex_bit(t);
    return out;
  }

  Adjacency undirected() const {
    Adjacency adj(static_cast<std::size_t>(n), 0);
    for (auto [s, t] : arrows) {
      adj[static_cast<std::size_t>(s - 1)] |= vertex_bit(t);
      adj[static_cast<std::size_t>(t - 1)] |= vertex_bit(s);
    }
    return adj;
  }

  bool has_arrow(Vertex s, Vertex t) const {
    return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(s, t));
  }

  int out_degree(Vertex v) const {
    return static_cast<int>(std::count_if(arrows.begin(), arrows.end(),
                                          [v](const auto& a) { return a.first == v; }));
  }
  int in_degree(Vertex v) const {
    return static_cast<int>(std::count_if(arrows.begin(), arrows.end(),
                                          [v](const auto& a) { return a.second == v; }));
  }
};

inline ZeroPart zero_part(const ColouredQuiver& q) {
  ZeroPart z;
  z.n = q.n();
  z.m = q.m();
  for (Vertex i = 1; i <= q.n(); ++i) {
    for (Vertex j = 1; j <= q.n(); ++j) {
      if (i == j) continue;
      for (int k = q.count(i, j, 0); k > 0; --k) z.arrows.emplace_back(i, j);
    }
  }
  const Adjacency adj = z.undirected();
  VertexSet rest = q.all_vertices();
  while (rest != 0) {
    VertexSet comp = vertex_bit(std::countr_zero(rest) + 1);
    for (VertexSet frontier = comp; frontier != 0;) {
      VertexSet next = 0;
      for (Vertex v : members(frontier)) next |= nbrs(adj, v);
      frontier = next & ~comp;
      comp |= next;
    }
    z.components.push_back(comp);
    rest &= ~comp;
  }
  return z;
}

struct ZeroCycle {
  std::vector<Vertex> ring;
  bool oriented = false;  // every arrow runs the same way round
};

enum class CycleScope { Chordless, Simple };

/// Cycles of the zero part inside `within`, with orientation flags. Chordless cycles
/// are the ones the structural checks count; Simple also lists composites.
inline std::vector<ZeroCycle> zero_cycles(const ZeroPart& z, VertexSet within = ~VertexSet{0},
                                          CycleScope scope = CycleScope::Chordless) {
  std::vector<ZeroCycle> out;
  const Adjacency adj = z.undirected();
  auto rings = scope == CycleScope::Simple ? simple_cycles(adj, within)
                                           : induced_cycles(adj, 3, within);
  for (auto& ring : rings) {
    const std::size_t k = ring.size();
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex u = ring[i];
      const Vertex v = ring[(i + 1) % k];
      fwd = fwd && z.has_arrow(u, v);
      bwd = bwd && z.has_arrow(v, u);
    }
    out.push_back({std::move(ring), fwd || bwd});
  }
  return out;
}

/// (length, oriented) -> number of cycles.
using CycleCensus = std::map<std::pair<int, bool>, int>;

inline CycleCensus zero_part_cycle_census(const ZeroPart& z, VertexSet within = ~VertexSet{0},
                                          CycleScope scope = CycleScope::Simple) {
  CycleCensus c;
  for (const ZeroCycle& cyc : zero_cycles(z, within, scope)) {
    ++c[{static_cast<int>(cyc.ring.size()), cyc.oriented}];
  }
  return c;
}

struct DegreeCheck {
  bool ok = true;
  std::vector<Vertex> offenders;  // in- or out-degree above two
};

inline DegreeCheck degree_bounds(const ZeroPart& z, VertexSet within = ~VertexSet{0}) {
  DegreeCheck d;
  for (Vertex v = 1; v <= z.n; ++v) {
    if (!contains(within, v)) continue;
    if (z.in_degree(v) > 2 || z.out_degree(v) > 2) d.offenders.push_back(v);
  }
  d.ok = d.offenders.empty();
  return d;
}

/// Cycle shape allowed in a component: oriented (m+2)-cycles, at most one oriented
/// (m+3)-cycle, at most one non-oriented cycle. Counts chordless cycles.
inline std::optional<std::string> census_shape_violation(const ZeroPart& z, VertexSet within) {
  int long_oriented = 0;
  int non_oriented = 0;
  for (const ZeroCycle& c : zero_cycles(z, within)) {
    const int len = static_cast<int>(c.ring.size());
    if (!c.oriented) {
      ++non_oriented;
    } else if (len == z.m + 3) {
      ++long_oriented;
    } else if (len != z.m + 2) {
      return "oriented cycle of length " + std::to_string(len) + " " + describe(c.ring);
    }
  }
  if (long_oriented > 1) return std::to_string(long_oriented) + " oriented (m+3)-cycles";
  if (non_oriented > 1) return std::to_string(non_oriented) + " non-oriented cycles";
  return std::nullopt;
}

enum class GabrielKind { SubtypeI, SubtypeII, Acyclic, Unverified };

constexpr std::string_view to_string(GabrielKind k) {
  switch (k) {
    case GabrielKind::SubtypeI: return "SubtypeI";
    case GabrielKind::SubtypeII: return "SubtypeII";
    case GabrielKind::Acyclic: return "Acyclic";
    case GabrielKind::Unverified: return "Unverified";
  }
  return "?";
}

struct GabrielVerdict {
  GabrielKind kind = GabrielKind::Unverified;
  VertexSet component = 0;
  std::vector<Vertex> cycle;       // S for subtype I, C (clockwise order) for subtype II
  Vertex a = 0;                    // subtype I
  Vertex b = 0;
  std::vector<int> block_sizes;    // subtype II: m + 1 - k_i
  int removed_blocks = 0;          // subtype II: t
  std::string reason;              // Unverified
};

struct GabrielReport {
  ZeroPart zero;
  std::vector<GabrielVerdict> components;
  DegreeCheck degrees;
};

namespace detail {

// Equal as cyclic sequences up to rotation and reflection.
inline bool same_ring(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  const std::size_t k = x.size();
  if (y.size() != k) return false;
  for (std::size_t s = 0; s < k; ++s) {
    bool fwd = true;
    bool rev = true;
    for (std::size_t i = 0; i < k; ++i) {
      fwd = fwd && x[i] == y[(s + i) % k];
      rev = rev && x[i] == y[(s + k - i) % k];
    }
    if (fwd || rev) return true;
  }
  return false;
}

inline std::optional<std::string> other_cycles_ok(
    const ZeroPart& z, VertexSet within, const std::vector<Vertex>& main,
    const std::vector<std::pair<Vertex, Vertex>>& guarded) {
  for (const ZeroCycle& c : zero_cycles(z, within)) {
    if (same_ring(c.ring, main)) continue;
    const int len = static_cast<int>(c.ring.size());
    if (!c.oriented || len != z.m + 2) {
      return "extra cycle " + describe(c.ring) + " is not an oriented (m+2)-cycle";
    }
    for (std::size_t i = 0; i < c.ring.size(); ++i) {
      const Vertex u = c.ring[i];
      const Vertex v = c.ring[(i + 1) % c.ring.size()];
      for (const auto& [s, t] : guarded) {
        if ((s == u && t == v) || (s == v && t == u)) {
          return "extra cycle " + describe(c.ring) + " shares arrow " + describe({s, t});
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<GabrielVerdict> try_subtype_i(const ZeroPart& z, VertexSet comp,
                                                   std::string& why) {
  const Adjacency adj = z.undirected();
  for (const ZeroCycle& c : zero_cycles(z, comp)) {
    if (!c.oriented || static_cast<int>(c.ring.size()) != z.m + 3) continue;
    std::vector<Vertex> s = c.ring;
    if (!z.has_arrow(s[0], s[1])) std::reverse(s.begin() + 1, s.end());
    const VertexSet sset = make_set(s);
    std::vector<Vertex> closed;
    for (Vertex v : s) {
      if ((nbrs(adj, v) & ~sset) == 0) closed.push_back(v);
    }
    std::optional<std::pair<Vertex, Vertex>> ab;
    for (std::size_t i = 0; i < closed.size() && !ab; ++i) {
      for (std::size_t j = i + 1; j < closed.size(); ++j) {
        if (!contains(nbrs(adj, closed[i]), closed[j])) {
          ab = std::make_pair(closed[i], closed[j]);
          break;
        }
      }
    }
    if (!ab) {
      why = "cycle " + describe(s) + " lacks two non-adjacent vertices closed inside it";
      continue;
    }
    std::vector<std::pair<Vertex, Vertex>> arrows;
    for (std::size_t i = 0; i < s.size(); ++i) arrows.emplace_back(s[i], s[(i + 1) % s.size()]);
    if (auto err = other_cycles_ok(z, comp, s, arrows)) {
      why = *err;
      continue;
    }
    GabrielVerdict v;
    v.kind = GabrielKind::SubtypeI;
    v.component = comp;
    v.cycle = s;
    v.a = ab->first;
    v.b = ab->second;
    return v;
  }
  return std::nullopt;
}

// Splits the clockwise runs of a ring into exactly r blocks of length 2..m.
inline std::optional<std::vector<int>> split_blocks(const std::vector<int>& runs, int r, int m) {
  std::vector<int> lo;
  std::vector<int> hi;
  int sum_lo = 0;
  int sum_hi = 0;
  for (int len : runs) {
    const int l = (len + m - 1) / m;
    const int h = len / 2;
    if (l > h) return std::nullopt;
    lo.push_back(l);
    hi.push_back(h);
    sum_lo += l;
    sum_hi += h;
  }
  if (r < sum_lo || r > sum_hi) return std::nullopt;
  std::vector<int> blocks;
  int spare = r - sum_lo;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const int parts = lo[i] + std::min(spare, hi[i] - lo[i]);
    spare -= parts - lo[i];
    int extra = runs[i] - 2 * parts;  // handed out on top of 2 per block
    for (int p = 0; p < parts; ++p) {
      const int add = std::min(extra, m - 2);
      blocks.push_back(2 + add);
      extra -= add;
    }
  }
  return blocks;
}

inline std::optional<GabrielVerdict> subtype_ii_on_cycle(const ZeroPart& z, VertexSet comp,
                                                         const std::vector<Vertex>& ring,
                                                         std::string& why) {
  const int m = z.m;
  const std::size_t k = ring.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<Vertex> c = ring;
    if (dir == 1) std::reverse(c.begin() + 1, c.end());
    std::vector<bool> cw(k);
    int count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      cw[i] = z.has_arrow(c[i], c[(i + 1) % k]);
      count += cw[i] ? 1 : 0;
    }
    if (count == static_cast<int>(k) || count == 0) continue;
    if ((count + m - 1) % (m + 1) != 0) {
      why = "cycle " + describe(c) + " has " + std::to_string(count) + " clockwise arrows";
      continue;
    }
    const int r = (count + m - 1) / (m + 1);
    if (r < 1 || r > m - 1) {
      why = "cycle " + describe(c) + " gives r=" + std::to_string(r);
      continue;
    }
    // maximal clockwise runs, starting after a counterclockwise arrow
    std::size_t start = 0;
    while (cw[start]) ++start;
    std::vector<int> runs;
    int len = 0;
    for (std::size_t s = 1; s <= k; ++s) {
      if (cw[(start + s) % k]) {
        ++len;
      } else if (len > 0) {
        runs.push_back(len);
        len = 0;
      }
    }
    if (len > 0) runs.push_back(len);
    const auto blocks = split_blocks(runs, r, m);
    if (!blocks) {
      why = "clockwise arrows of " + describe(c) + " do not split into " + std::to_string(r) +
            " blocks of length 2..m";
      continue;
    }
    std::vector<std::pair<Vertex, Vertex>> guarded;
    for (std::size_t i = 0; i < k; ++i) {
      if (cw[i]) guarded.emplace_back(c[i], c[(i + 1) % k]);
    }
    if (auto err = other_cycles_ok(z, comp, c, guarded)) {
      why = *err;
      continue;
    }
    GabrielVerdict v;
    v.kind = GabrielKind::SubtypeII;
    v.component = comp;
    v.cycle = c;
    v.block_sizes = *blocks;
    return v;
  }
  return std::nullopt;
}

}  // namespace detail

/// Subtype I check on one component.
inline GabrielVerdict verify_gabriel_subtype_I(const ZeroPart& z, VertexSet comp) {
  std::string why = "no oriented (m+3)-cycle";
  const DegreeCheck d = degree_bounds(z, comp);
  if (!d.ok) return {GabrielKind::Unverified, comp, {}, 0, 0, {}, 0,
                     "degree bound exceeded at " + describe(d.offenders)};
  if (auto v = detail::try_subtype_i(z, comp, why)) return *v;
  return {GabrielKind::Unverified, comp, {}, 0, 0, {}, 0, why};
}

/// Subtype II check on one component, with a one-block completion search.
inline GabrielVerdict verify_gabriel_subtype_II(const ZeroPart& z, VertexSet comp) {
  GabrielVerdict fail{GabrielKind::Unverified, comp, {}, 0, 0, {}, 0, ""};
  if (z.m < 2) {
    fail.reason = "subtype II has no admissible r when m = 1";
    return fail;
  }
  const DegreeCheck d = degree_bounds(z, comp);
  if (!d.ok) {
    fail.reason = "degree bound exceeded at " + describe(d.offenders);
    return fail;
  }
  std::string why = "no non-oriented cycle";
  for (const ZeroCycle& c : zero_cycles(z, comp)) {
    if (c.oriented) continue;
    if (auto v = detail::subtype_ii_on_cycle(z, comp, c.ring, why)) return *v;
  }
  // completion: one removed clockwise block, re-added as a fresh directed path u -> v
  const int n = z.n;
  if (n + z.m - 1 <= ColouredQuiver::kMaxVertices) {
    for (Vertex u : members(comp)) {
      for (Vertex v : members(comp)) {
        if (u == v) continue;
        for (int len = 2; len <= z.m; ++len) {
          ZeroPart big = z;
          big.n = n + len - 1;
          Vertex prev = u;
          for (int i = 1; i < len; ++i) {
            big.arrows.emplace_back(prev, n + i);
            prev = n + i;
          }
          big.arrows.emplace_back(prev, v);
          std::sort(big.arrows.begin(), big.arrows.end());
          VertexSet bcomp = comp;
          for (int i = 1; i < len; ++i) bcomp |= vertex_bit(n + i);
          if (!degree_bounds(big, bcomp).ok) continue;
          for (const ZeroCycle& c : zero_cycles(big, bcomp)) {
            if (c.oriented || !contains(make_set(c.ring), n + 1)) continue;
            std::string ignored;
            if (auto got = detail::subtype_ii_on_cycle(big, bcomp, c.ring, ignored)) {
              got->component = comp;
              got->removed_blocks = 1;
              return *got;
            }
          }
        }
      }
    }
  }
  fail.reason = why + "; no one-block completion found";
  return fail;
}

/// Zero part plus a verdict per connected component.
inline GabrielReport gabriel_report(const ColouredQuiver& q) {
  GabrielReport r;
  r.zero = zero_part(q);
  r.degrees = degree_bounds(r.zero);
  for (VertexSet comp : r.zero.components) {
    if (zero_cycles(r.zero, comp).empty()) {
      GabrielVerdict v;
      v.kind = GabrielKind::Acyclic;
      v.component = comp;
      r.components.push_back(v);
      continue;
    }
    GabrielVerdict one = verify_gabriel_subtype_I(r.zero, comp);
    if (one.kind == GabrielKind::SubtypeI) {
      r.components.push_back(one);
      continue;
    }
    GabrielVerdict two = verify_gabriel_subtype_II(r.zero, comp);
    if (two.kind == GabrielKind::SubtypeII) {
      r.components.push_back(two);
      continue;
    }
    two.reason = "subtype I: " + one.reason + "; subtype II: " + two.reason;
    r.components.push_back(two);
  }
  return r;
}

}  // namespace colq

#endif  // COLQ_GABRIEL_HPP
