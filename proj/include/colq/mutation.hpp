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


#ifndef COLQ_MUTATION_HPP
#define COLQ_MUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "colq/canonical.hpp"
#include "colq/quiver.hpp"

namespace colq {

using MutationSequence = std::vector<Vertex>;

namespace detail {

inline void check_vertex(const ColouredQuiver& q, Vertex j) {
  if (j < 1 || j > q.n()) {
    throw QuiverError(ErrorKind::VertexOutOfRange,
                      "vertex " + std::to_string(j) + " outside 1.." + std::to_string(q.n()));
  }
}

inline ColouredQuiver finish_mutation(int n, int m, const std::vector<int>& counts) {
  try {
    return ColouredQuiver::from_counts(n, m, counts);
  } catch (const QuiverError& e) {
    throw QuiverError(ErrorKind::IllDefinedMutation, e.what());
  }
}

}  // namespace detail

/// Coloured mutation at j by the closed formula.
inline ColouredQuiver mutate(const ColouredQuiver& q, Vertex j) {
  detail::check_vertex(q, j);
  const int n = q.n();
  const int m = q.m();
  const int w = m + 1;
  auto up = [w](int c) { return (c + 1) % w; };
  auto down = [w](int c) { return (c + w - 1) % w; };
  std::vector<int> out(static_cast<std::size_t>(n * n * w), 0);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex k = 1; k <= n; ++k) {
      if (i == k) continue;
      for (int c = 0; c <= m; ++c) {
        int value = 0;
        if (k == j) {
          value = q.count(i, j, down(c));
        } else if (i == j) {
          value = q.count(j, k, up(c));
        } else {
          int others = 0;
          for (int t = 0; t <= m; ++t) {
            if (t != c) others += q.count(i, k, t);
          }
          value = q.count(i, k, c) - others +
                  (q.count(i, j, c) - q.count(i, j, down(c))) * q.count(j, k, 0) +
                  q.count(i, j, m) * (q.count(j, k, c) - q.count(j, k, up(c)));
          value = std::max(0, value);
        }
        out[static_cast<std::size_t>(((i - 1) * n + (k - 1)) * w + c)] = value;
      }
    }
  }
  return detail::finish_mutation(n, m, out);
}

/// Coloured mutation at j by the add / cancel / shift procedure.
inline ColouredQuiver mutate_alt(const ColouredQuiver& q, Vertex j) {
  detail::check_vertex(q, j);
  const int n = q.n();
  const int m = q.m();
  const int w = m + 1;
  // working multiset of arrows, one bucket per (i, k, colour)
  std::vector<long> bag(static_cast<std::size_t>(n * n * w), 0);
  auto at = [&](Vertex i, Vertex k, int c) -> long& {
    return bag[static_cast<std::size_t>(((i - 1) * n + (k - 1)) * w + c)];
  };
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex k = 1; k <= n; ++k) {
      if (const auto l = (i == k) ? std::nullopt : q.link(i, k)) at(i, k, l->colour) = l->multiplicity;
    }
  }
  // step 1
  for (Vertex i = 1; i <= n; ++i) {
    if (i == j) continue;
    const auto in = q.link(i, j);
    if (!in) continue;
    for (Vertex k = 1; k <= n; ++k) {
      if (k == j || k == i) continue;
      const int out = q.count(j, k, 0);
      if (out == 0) continue;
      const long added = static_cast<long>(in->multiplicity) * out;
      at(i, k, in->colour) += added;
      at(k, i, m - in->colour) += added;
    }
  }
  // step 2: strip equal numbers of every colour present until one colour remains
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex k = 1; k <= n; ++k) {
      if (i == k) continue;
      for (;;) {
        long least = 0;
        int present = 0;
        for (int c = 0; c <= m; ++c) {
          const long v = at(i, k, c);
          if (v == 0) continue;
          ++present;
          least = (present == 1) ? v : std::min(least, v);
        }
        if (present <= 1) break;
        for (int c = 0; c <= m; ++c) {
          if (at(i, k, c) > 0) at(i, k, c) -= least;
        }
      }
    }
  }
  // step 3
  std::vector<int> out(bag.size(), 0);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex k = 1; k <= n; ++k) {
      for (int c = 0; c <= m; ++c) {
        const long v = at(i, k, c);
        if (v == 0) continue;
        int shifted = c;
        if (k == j) shifted = (c + 1) % w;
        if (i == j) shifted = (c + w - 1) % w;
        out[static_cast<std::size_t>(((i - 1) * n + (k - 1)) * w + shifted)] += static_cast<int>(v);
      }
    }
  }
  return detail::finish_mutation(n, m, out);
}

inline ColouredQuiver mutate_seq(const ColouredQuiver& q, const MutationSequence& seq) {
  ColouredQuiver cur = q;
  for (Vertex v : seq) cur = mutate(cur, v);
  return cur;
}

namespace detail {

struct SearchNode {
  ColouredQuiver quiver;      // stored in canonical labelling
  std::optional<CanonKey> parent;
  Vertex step = 0;            // canonical label of the vertex mutated to get here
  int depth = 0;
};

}  // namespace detail

/// Shortest mutation sequence taking `from` to a quiver isomorphic to `to`.
///
/// Breadth-first from both ends over canonical keys. Backward steps use mu^m as the
/// inverse of mu, which is only valid when mu(mu^m(B)) == B; if that ever fails the
/// backward side stops expanding. Returns nullopt when the reachable set is exhausted;
/// throws CapExceeded when more than `cap` states were stored without an answer.
inline std::optional<MutationSequence> find_mutation_path(const ColouredQuiver& from,
                                                          const ColouredQuiver& to,
                                                          std::size_t cap = 1'000'000) {
  if (from.n() != to.n() || from.m() != to.m()) {
    throw QuiverError(ErrorKind::SizeMismatch, "path search needs equal n and m");
  }
  const int n = from.n();
  const int m = from.m();
  using Map = std::unordered_map<CanonKey, detail::SearchNode, CanonKeyHash>;
  Map fwd;
  Map bwd;

  const CanonicalForm src = canonical_labelling(from);
  const CanonicalForm dst = canonical_labelling(to);
  if (src.key == dst.key) return MutationSequence{};
  fwd.emplace(src.key, detail::SearchNode{quiver_from_key(src.key), std::nullopt, 0, 0});
  bwd.emplace(dst.key, detail::SearchNode{quiver_from_key(dst.key), std::nullopt, 0, 0});
  std::deque<CanonKey> fq{src.key};
  std::deque<CanonKey> bq{dst.key};
  bool backward_ok = true;

  // (child key, step) pairs from `key` up to the root of `side`.
  auto chain = [](const Map& side, const CanonKey& key) {
    std::vector<std::pair<CanonKey, Vertex>> out;  // (child key, step)
    CanonKey cur = key;
    for (;;) {
      const auto& node = side.at(cur);
      if (!node.parent) break;
      out.emplace_back(cur, node.step);
      cur = *node.parent;
    }
    return out;
  };

  // Replays both halves on `from`, translating steps through isomorphisms.
  auto build = [&](const CanonKey& meet) {
    auto fchain = chain(fwd, meet);
    std::reverse(fchain.begin(), fchain.end());
    MutationSequence seq;
    ColouredQuiver cur = from;
    for (const auto& [child, step] : fchain) {
      const auto& node = fwd.at(child);
      const ColouredQuiver& parent_canon = fwd.at(*node.parent).quiver;
      const auto iso = isomorphism(parent_canon, cur);
      const Vertex v = (*iso)[static_cast<std::size_t>(step - 1)];
      seq.push_back(v);
      cur = mutate(cur, v);
    }
    {
      // walk from the meeting point towards the target
      CanonKey at = meet;
      for (;;) {
        const auto& node = bwd.at(at);
        if (!node.parent) break;
        const ColouredQuiver& parent_canon = bwd.at(*node.parent).quiver;
        const ColouredQuiver pre = mutate_seq(parent_canon, MutationSequence(
                                                                static_cast<std::size_t>(m),
                                                                node.step));
        const auto iso = isomorphism(pre, cur);
        const Vertex v = (*iso)[static_cast<std::size_t>(node.step - 1)];
        seq.push_back(v);
        cur = mutate(cur, v);
        at = *node.parent;
      }
    }
    return seq;
  };

  auto over_cap = [&] {
    if (fwd.size() + bwd.size() > cap) {
      throw QuiverError(ErrorKind::CapExceeded,
                        "path search exceeded " + std::to_string(cap) + " states");
    }
  };
  // Whole levels are expanded at a time so the best meeting point of a level is shortest.
  while (!fq.empty() || (backward_ok && !bq.empty())) {
    const bool go_forward = !backward_ok || bq.empty() || (!fq.empty() && fq.size() <= bq.size());
    std::optional<CanonKey> meet;
    int best = 0;
    auto consider = [&](const CanonKey& k) {
      const int total = fwd.at(k).depth + bwd.at(k).depth;
      if (!meet || total < best) {
        meet = k;
        best = total;
      }
    };
    if (go_forward) {
      for (std::size_t level = fq.size(); level > 0; --level) {
        const CanonKey key = fq.front();
        fq.pop_front();
        const detail::SearchNode node = fwd.at(key);
        for (Vertex v = 1; v <= n; ++v) {
          const CanonKey nk = canonical_form(mutate(node.quiver, v));
          if (fwd.count(nk)) continue;
          fwd.emplace(nk, detail::SearchNode{quiver_from_key(nk), key, v, node.depth + 1});
          if (bwd.count(nk)) consider(nk);
          fq.push_back(nk);
          over_cap();
        }
      }
    } else {
      for (std::size_t level = bq.size(); level > 0 && backward_ok; --level) {
        const CanonKey key = bq.front();
        bq.pop_front();
        const detail::SearchNode node = bwd.at(key);
        for (Vertex v = 1; v <= n; ++v) {
          const ColouredQuiver prev =
              mutate_seq(node.quiver, MutationSequence(static_cast<std::size_t>(m), v));
          if (!(mutate(prev, v) == node.quiver)) {
            backward_ok = false;
            break;
          }
          const CanonKey pk = canonical_form(prev);
          if (bwd.count(pk)) continue;
          bwd.emplace(pk, detail::SearchNode{quiver_from_key(pk), key, v, node.depth + 1});
          if (fwd.count(pk)) consider(pk);
          bq.push_back(pk);
          over_cap();
        }
      }
    }
    if (meet) return build(*meet);
  }
  return std::nullopt;
}

}  // namespace colq

#endif  // COLQ_MUTATION_HPP
