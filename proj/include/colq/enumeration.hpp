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


#ifndef COLQ_ENUMERATION_HPP
#define COLQ_ENUMERATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "colq/canonical.hpp"
#include "colq/class_a.hpp"
#include "colq/class_d.hpp"
#include "colq/cycles.hpp"
#include "colq/mutation.hpp"
#include "colq/quiver.hpp"

namespace colq {

/// (source member, vertex in the source's canonical labelling, target member), as
/// indices into OrbitReport::members.
struct OrbitEdge {
  std::size_t from = 0;
  Vertex vertex = 0;
  std::size_t to = 0;
};

struct OrbitReport {
  CanonKey seed;
  std::vector<CanonKey> members;  // breadth-first order, seed first
  std::unordered_map<CanonKey, std::size_t, CanonKeyHash> index;
  std::vector<OrbitEdge> edges;
  int depth = 0;      // eccentricity of the seed
  int diameter = -1;  // exact when members <= kDiameterLimit, else -1
  bool capped = false;

  static constexpr std::size_t kDiameterLimit = 20000;

  bool contains(const CanonKey& k) const { return index.count(k) > 0; }
  std::set<CanonKey> key_set() const { return {members.begin(), members.end()}; }
};

namespace detail {

inline int orbit_diameter(const OrbitReport& r) {
  const std::size_t n = r.members.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const OrbitEdge& e : r.edges) {
    if (e.from != e.to) out[e.from].push_back(e.to);
  }
  int best = 0;
  std::vector<int> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : out[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        best = std::max(best, dist[v]);
        ++reached;
        queue.push_back(v);
      }
    }
    if (reached != n) return -1;  // not strongly connected
  }
  return best;
}

}  // namespace detail

/// Breadth-first enumeration of the mutation class of q up to isomorphism.
inline OrbitReport mutation_class(const ColouredQuiver& q, std::size_t cap = 500'000) {
  OrbitReport r;
  r.seed = canonical_form(q);
  r.members.push_back(r.seed);
  r.index.emplace(r.seed, 0);
  std::vector<int> level{0};
  std::size_t head = 0;
  while (head < r.members.size()) {
    const std::size_t cur = head++;
    const ColouredQuiver base = quiver_from_key(r.members[cur]);
    for (Vertex v = 1; v <= base.n(); ++v) {
      const CanonKey next = canonical_form(mutate(base, v));
      auto it = r.index.find(next);
      if (it == r.index.end()) {
        if (r.members.size() >= cap) {
          r.capped = true;
          continue;
        }
        it = r.index.emplace(next, r.members.size()).first;
        r.members.push_back(next);
        level.push_back(level[cur] + 1);
        r.depth = std::max(r.depth, level.back());
      }
      r.edges.push_back({cur, v, it->second});
    }
  }
  if (!r.capped && r.members.size() <= OrbitReport::kDiameterLimit) {
    r.diameter = detail::orbit_diameter(r);
  }
  return r;
}

enum class ClassKind { Auto, A, D };

/// Members failing the class recognizer of the seed's type.
inline std::vector<Violation> closure_check(const OrbitReport& r, ClassKind kind = ClassKind::Auto) {
  std::vector<Violation> out;
  if (kind == ClassKind::Auto) {
    const ColouredQuiver seed = quiver_from_key(r.seed);
    kind = classify_D(seed).verdict != DVerdict::NotMember ? ClassKind::D : ClassKind::A;
  }
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const ColouredQuiver q = quiver_from_key(r.members[i]);
    if (kind == ClassKind::D) {
      const DClassification c = classify_D(q);
      if (c.verdict == DVerdict::NotMember) {
        out.push_back({c.reason, "member " + std::to_string(i) + " " + r.members[i].short_hash()});
      }
    } else {
      const AClassReport a = is_in_class_A(q);
      if (!a.accepted) {
        out.push_back({a.violations.front().condition + " " + a.violations.front().location,
                       "member " + std::to_string(i) + " " + r.members[i].short_hash()});
      }
    }
  }
  return out;
}

/// Every simple connected m-coloured quiver on n labelled vertices accepted by
/// classify_D, deduplicated by canonical key.
inline std::set<CanonKey> generate_all_members(int n, int m, double budget = 1e8,
                                               DOptions opt = {}) {
  if (n < 1 || n > 8) throw QuiverError(ErrorKind::BadSize, "exhaustive generation needs n <= 8");
  const int pairs = n * (n - 1) / 2;
  const double total = std::pow(static_cast<double>(m + 2), pairs);
  if (total > budget) {
    throw QuiverError(ErrorKind::BudgetExceeded,
                      std::to_string(static_cast<long double>(total)) + " candidates exceed budget");
  }
  std::vector<std::pair<Vertex, Vertex>> pair_list;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) pair_list.emplace_back(i, j);
  }
  const auto width = static_cast<std::size_t>(m + 1);
  std::set<CanonKey> out;
  std::vector<int> state(static_cast<std::size_t>(pairs), 0);
  std::vector<int> counts(static_cast<std::size_t>(n * n) * width, 0);
  for (;;) {
    // connectivity on the edge mask first
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < pairs; ++p) {
      if (state[static_cast<std::size_t>(p)] == 0) continue;
      const auto [i, j] = pair_list[static_cast<std::size_t>(p)];
      adj[static_cast<std::size_t>(i - 1)] |= vertex_bit(j);
      adj[static_cast<std::size_t>(j - 1)] |= vertex_bit(i);
    }
    VertexSet seen = 1;
    for (VertexSet frontier = 1; frontier != 0;) {
      VertexSet next = 0;
      for (Vertex v : members(frontier)) next |= adj[static_cast<std::size_t>(v - 1)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (set_size(seen) == n) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int p = 0; p < pairs; ++p) {
        const int s = state[static_cast<std::size_t>(p)];
        if (s == 0) continue;
        const auto [i, j] = pair_list[static_cast<std::size_t>(p)];
        counts[static_cast<std::size_t>((i - 1) * n + (j - 1)) * width +
               static_cast<std::size_t>(s - 1)] = 1;
        counts[static_cast<std::size_t>((j - 1) * n + (i - 1)) * width +
               static_cast<std::size_t>(m - (s - 1))] = 1;
      }
      const ColouredQuiver q = ColouredQuiver::from_counts(n, m, counts);
      if (classify_D(q, opt).verdict != DVerdict::NotMember) out.insert(canonical_form(q));
    }
    int p = 0;
    while (p < pairs && ++state[static_cast<std::size_t>(p)] == m + 2) {
      state[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == pairs) break;
  }
  return out;
}

struct TheoremAVerdict {
  bool equal = false;
  std::size_t orbit_size = 0;
  std::size_t generated_size = 0;
  std::vector<CanonKey> only_in_orbit;
  std::vector<CanonKey> only_generated;
  bool orbit_capped = false;
};

/// Compares the mutation class of D_n with the exhaustively recognized class.
inline TheoremAVerdict theorem_a_verdict(int n, int m, std::size_t cap = 500'000,
                                         double budget = 1e8, DOptions opt = {}) {
  TheoremAVerdict v;
  const OrbitReport orbit = mutation_class(standard_d_quiver(n, m), cap);
  const std::set<CanonKey> gen = generate_all_members(n, m, budget, opt);
  const std::set<CanonKey> orb = orbit.key_set();
  v.orbit_capped = orbit.capped;
  v.orbit_size = orb.size();
  v.generated_size = gen.size();
  std::set_difference(orb.begin(), orb.end(), gen.begin(), gen.end(),
                      std::back_inserter(v.only_in_orbit));
  std::set_difference(gen.begin(), gen.end(), orb.begin(), orb.end(),
                      std::back_inserter(v.only_generated));
  v.equal = !orbit.capped && v.only_in_orbit.empty() && v.only_generated.empty();
  return v;
}

struct OrbitStats {
  std::map<int, int> euler;      // chi -> members
  std::map<int, int> triangles;  // triangle count -> members
  std::map<std::string, int> verdicts;
  int both_types = 0;
};

inline OrbitStats orbit_stats(const OrbitReport& r) {
  OrbitStats s;
  for (const CanonKey& k : r.members) {
    const ColouredQuiver q = quiver_from_key(k);
    if (is_connected(q)) ++s.euler[euler_characteristic(q)];
    ++s.triangles[static_cast<int>(triangles(q).size())];
    if (q.is_simple()) {
      const DClassification c = classify_D(q);
      ++s.verdicts[std::string(to_string(c.verdict))];
      if (c.both_types) ++s.both_types;
    } else {
      ++s.verdicts["NotSimple"];
    }
  }
  return s;
}

}  // namespace colq

#endif  // COLQ_ENUMERATION_HPP
