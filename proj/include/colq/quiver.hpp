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

#ifndef COLQ_QUIVER_HPP
#define COLQ_QUIVER_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colq/error.hpp"

namespace colq {

/// Vertex labels are 1-based everywhere in the public API.
using Vertex = int;
using Colour = int;

/// Bitset over vertex labels: bit (v - 1) stands for vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << (v - 1); }
constexpr bool contains(VertexSet s, Vertex v) { return (s & vertex_bit(v)) != 0; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

inline std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline VertexSet make_set(std::span<const Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= vertex_bit(v);
  return s;
}

/// One arrow i -> j of colour c.
struct Arrow {
  Vertex source = 0;
  Vertex target = 0;
  Colour colour = 0;

  auto operator<=>(const Arrow&) const = default;
};

/// The arrows between an ordered pair: all share one colour by monochromaticity.
struct Link {
  Colour colour = 0;
  int multiplicity = 0;

  auto operator<=>(const Link&) const = default;
};

/// An m-coloured quiver: no loops, monochromatic, skew-symmetric.
///
/// Immutable once built. Storage is a dense n x n table of (colour, multiplicity)
/// cells; a cell with multiplicity zero means no arrow.
class ColouredQuiver {
 public:
  static constexpr int kMaxVertices = 64;
  static constexpr int kMaxColour = 250;

  /// Builds from the dense table q[i][j][c], laid out as ((i-1)*n + (j-1))*(m+1) + c.
  /// Every invariant is checked.
  static ColouredQuiver from_counts(int n, int m, std::span<const int> counts) {
    check_dimensions(n, m);
    const auto width = static_cast<std::size_t>(m + 1);
    if (counts.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * width) {
      throw QuiverError(ErrorKind::BadSize, "count table has the wrong size");
    }
    ColouredQuiver q(n, m);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        const std::size_t base = q.index(i, j) * width;
        int colour = -1;
        int mult = 0;
        for (int c = 0; c <= m; ++c) {
          const int value = counts[base + static_cast<std::size_t>(c)];
          if (value < 0) throw QuiverError(ErrorKind::BadSize, "negative arrow count");
          if (value == 0) continue;
          if (i == j) {
            throw QuiverError(ErrorKind::LoopArrow, "loop at vertex " + std::to_string(i));
          }
          if (colour >= 0) {
            throw QuiverError(ErrorKind::MonochromaticityViolation,
                              "pair " + std::to_string(i) + "->" + std::to_string(j) +
                                  " carries colours " + std::to_string(colour) + " and " +
                                  std::to_string(c));
          }
          colour = c;
          mult = value;
        }
        if (mult > 0xffff) throw QuiverError(ErrorKind::BadSize, "multiplicity too large");
        if (mult > 0) q.cells_[q.index(i, j)] = Cell{static_cast<std::uint8_t>(colour),
                                                     static_cast<std::uint16_t>(mult)};
      }
    }
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = i + 1; j <= n; ++j) {
        const Cell a = q.cells_[q.index(i, j)];
        const Cell b = q.cells_[q.index(j, i)];
        const bool ok = a.mult == b.mult && (a.mult == 0 || a.colour + b.colour == m);
        if (!ok) {
          throw QuiverError(ErrorKind::SkewConflict, "pair {" + std::to_string(i) + "," +
                                                         std::to_string(j) +
                                                         "} is not skew-symmetric");
        }
      }
    }
    return q;
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  /// q_ij^(c): number of arrows i -> j of colour c.
  int count(Vertex i, Vertex j, Colour c) const {
    const Cell cell = cells_[checked_index(i, j)];
    return (cell.mult > 0 && cell.colour == c) ? cell.mult : 0;
  }

  std::optional<Link> link(Vertex i, Vertex j) const {
    const Cell cell = cells_[checked_index(i, j)];
    if (cell.mult == 0) return std::nullopt;
    return Link{cell.colour, cell.mult};
  }

  int multiplicity(Vertex i, Vertex j) const { return cells_[checked_index(i, j)].mult; }
  bool adjacent(Vertex i, Vertex j) const { return multiplicity(i, j) > 0; }

  /// Colour of the arrow i -> j; the pair must be adjacent.
  Colour colour(Vertex i, Vertex j) const {
    const Cell cell = cells_[checked_index(i, j)];
    if (cell.mult == 0) {
      throw QuiverError(ErrorKind::MissingArrow,
                        "no arrow " + std::to_string(i) + "->" + std::to_string(j));
    }
    return cell.colour;
  }

  VertexSet neighbours(Vertex v) const {
    VertexSet s = 0;
    for (Vertex u = 1; u <= n_; ++u) {
      if (u != v && cells_[checked_index(v, u)].mult > 0) s |= vertex_bit(u);
    }
    return s;
  }

  int valency(Vertex v) const { return set_size(neighbours(v)); }

  VertexSet all_vertices() const {
    return n_ == 64 ? ~VertexSet{0} : (vertex_bit(n_ + 1) - 1);
  }

  /// At most one arrow between any two vertices in each direction.
  bool is_simple() const {
    return std::all_of(cells_.begin(), cells_.end(), [](Cell c) { return c.mult <= 1; });
  }

  /// Total number of arrows, partners included.
  int arrow_count() const {
    int total = 0;
    for (Cell c : cells_) total += c.mult;
    return total;
  }

  /// One arrow per skew pair, repeated by multiplicity. The representative has
  /// colour c <= m - c; when c == m - c it leaves the smaller label.
  std::vector<Arrow> stored_arrows() const {
    std::vector<Arrow> out;
    for (Vertex i = 1; i <= n_; ++i) {
      for (Vertex j = i + 1; j <= n_; ++j) {
        const Cell cell = cells_[index(i, j)];
        if (cell.mult == 0) continue;
        Arrow a{i, j, cell.colour};
        if (2 * cell.colour > m_) a = Arrow{j, i, m_ - cell.colour};
        for (int k = 0; k < cell.mult; ++k) out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Dense q table in the layout accepted by from_counts.
  std::vector<int> counts() const {
    const auto width = static_cast<std::size_t>(m_ + 1);
    std::vector<int> out(cells_.size() * width, 0);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (cells_[k].mult > 0) out[k * width + cells_[k].colour] = cells_[k].mult;
    }
    return out;
  }

  /// Relabels vertex v as image[v - 1].
  ColouredQuiver relabelled(std::span<const Vertex> image) const {
    if (static_cast<int>(image.size()) != n_) {
      throw QuiverError(ErrorKind::SizeMismatch, "relabelling has the wrong length");
    }
    ColouredQuiver out(n_, m_);
    for (Vertex i = 1; i <= n_; ++i) {
      for (Vertex j = 1; j <= n_; ++j) {
        out.cells_[out.checked_index(image[static_cast<std::size_t>(i - 1)],
                                     image[static_cast<std::size_t>(j - 1)])] =
            cells_[index(i, j)];
      }
    }
    return out;
  }

  /// Induced subquiver on `keep`, relabelled 1..|keep| in increasing label order.
  ColouredQuiver induced(VertexSet keep) const {
    const std::vector<Vertex> vs = members(keep & all_vertices());
    if (vs.empty()) throw QuiverError(ErrorKind::BadSize, "empty induced subquiver");
    const int k = static_cast<int>(vs.size());
    ColouredQuiver out(k, m_);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        out.cells_[out.index(a + 1, b + 1)] =
            cells_[index(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)])];
      }
    }
    return out;
  }

  friend bool operator==(const ColouredQuiver& a, const ColouredQuiver& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.cells_ == b.cells_;
  }

 private:
  struct Cell {
    std::uint8_t colour = 0;
    std::uint16_t mult = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  ColouredQuiver(int n, int m)
      : n_(n), m_(m), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  static void check_dimensions(int n, int m) {
    if (n < 1 || n > kMaxVertices) {
      throw QuiverError(ErrorKind::BadSize, "vertex count must lie in 1.." +
                                                std::to_string(kMaxVertices));
    }
    if (m < 1 || m > kMaxColour) {
      throw QuiverError(ErrorKind::ColourOutOfRange, "colour bound m must lie in 1.." +
                                                         std::to_string(kMaxColour));
    }
  }

  std::size_t index(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  std::size_t checked_index(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw QuiverError(ErrorKind::VertexOutOfRange,
                        "vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1.." + std::to_string(n_));
    }
    return index(i, j);
  }

  int n_;
  int m_;
  std::vector<Cell> cells_;
};

/// Builds a quiver from one listed arrow per skew pair; partners are implied.
///
/// Listing a partner explicitly is accepted when it agrees: a pair listed in both
/// directions must pair every i->j:c line with one j->i:(m-c) line.
inline ColouredQuiver new_quiver(int n, int m, std::span<const Arrow> arrows) {
  if (n < 1 || n > ColouredQuiver::kMaxVertices) {
    throw QuiverError(ErrorKind::BadSize, "vertex count out of range");
  }
  if (m < 1 || m > ColouredQuiver::kMaxColour) {
    throw QuiverError(ErrorKind::ColourOutOfRange, "colour bound m out of range");
  }
  // (source, target) -> (colour, count) for the directions as listed.
  std::map<std::pair<Vertex, Vertex>, Link> listed;
  for (const Arrow& a : arrows) {
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n) {
      throw QuiverError(ErrorKind::VertexOutOfRange, "arrow endpoint outside 1.." +
                                                         std::to_string(n));
    }
    if (a.source == a.target) {
      throw QuiverError(ErrorKind::LoopArrow, "loop at vertex " + std::to_string(a.source));
    }
    if (a.colour < 0 || a.colour > m) {
      throw QuiverError(ErrorKind::ColourOutOfRange,
                        "colour " + std::to_string(a.colour) + " outside 0.." + std::to_string(m));
    }
    auto [it, inserted] = listed.try_emplace({a.source, a.target}, Link{a.colour, 0});
    if (it->second.colour != a.colour) {
      throw QuiverError(ErrorKind::MonochromaticityViolation,
                        "pair " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                            " listed with colours " + std::to_string(it->second.colour) +
                            " and " + std::to_string(a.colour));
    }
    ++it->second.multiplicity;
  }
  const auto width = static_cast<std::size_t>(m + 1);
  std::vector<int> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * width, 0);
  auto slot = [&](Vertex i, Vertex j, Colour c) -> int& {
    return counts[(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j - 1)) *
                      width +
                  static_cast<std::size_t>(c)];
  };
  for (const auto& [pair, link] : listed) {
    const auto [i, j] = pair;
    const auto reverse = listed.find({j, i});
    if (reverse != listed.end()) {
      if (i > j) continue;  // handled from the smaller source
      if (reverse->second.colour != m - link.colour ||
          reverse->second.multiplicity != link.multiplicity) {
        throw QuiverError(ErrorKind::SkewConflict,
                          "explicit partners for {" + std::to_string(i) + "," +
                              std::to_string(j) + "} disagree");
      }
    }
    slot(i, j, link.colour) = link.multiplicity;
    slot(j, i, m - link.colour) = link.multiplicity;
  }
  return ColouredQuiver::from_counts(n, m, counts);
}

inline ColouredQuiver new_quiver(int n, int m, std::initializer_list<Arrow> arrows) {
  return new_quiver(n, m, std::span<const Arrow>(arrows.begin(), arrows.size()));
}

/// The D_n quiver: path 1 -> 2 -> ... -> n-2 with n-2 -> n-1 and n-2 -> n, all colour 0.
inline ColouredQuiver standard_d_quiver(int n, int m) {
  if (n < 4) throw QuiverError(ErrorKind::BadSize, "D_n needs n >= 4");
  std::vector<Arrow> arrows;
  for (Vertex v = 1; v + 1 <= n - 2; ++v) arrows.push_back({v, v + 1, 0});
  arrows.push_back({n - 2, n - 1, 0});
  arrows.push_back({n - 2, n, 0});
  return new_quiver(n, m, arrows);
}

/// The A_n quiver: path 1 -> 2 -> ... -> n, all colour 0.
inline ColouredQuiver standard_a_quiver(int n, int m) {
  std::vector<Arrow> arrows;
  for (Vertex v = 1; v < n; ++v) arrows.push_back({v, v + 1, 0});
  return new_quiver(n, m, arrows);
}

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  int multiplicity = 0;

  auto operator<=>(const Edge&) const = default;
};

/// One undirected edge per skew pair of arrows.
struct UnderlyingGraph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const {
    int total = 0;
    for (const Edge& e : edges) total += e.multiplicity;
    return total;
  }
};

inline UnderlyingGraph underlying_graph(const ColouredQuiver& q) {
  UnderlyingGraph g{q.n(), {}};
  for (Vertex i = 1; i <= q.n(); ++i) {
    for (Vertex j = i + 1; j <= q.n(); ++j) {
      if (const int mult = q.multiplicity(i, j); mult > 0) g.edges.push_back({i, j, mult});
    }
  }
  return g;
}

/// Vertices reachable from `start` inside `within` through the underlying graph.
inline VertexSet component_of(const ColouredQuiver& q, Vertex start, VertexSet within) {
  VertexSet seen = vertex_bit(start) & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (Vertex v : members(frontier)) next |= q.neighbours(v) & within;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

/// Connected components of the subquiver induced on `within`, ordered by smallest label.
inline std::vector<VertexSet> components(const ColouredQuiver& q, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within & q.all_vertices();
  while (rest != 0) {
    const Vertex v = std::countr_zero(rest) + 1;
    const VertexSet comp = component_of(q, v, within);
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

inline bool is_connected(const ColouredQuiver& q) {
  return component_of(q, 1, q.all_vertices()) == q.all_vertices();
}

}  // namespace colq

#endif  // COLQ_QUIVER_HPP
