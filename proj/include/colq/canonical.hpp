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


#ifndef COLQ_CANONICAL_HPP
#define COLQ_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "colq/quiver.hpp"

namespace colq {

/// Byte string identifying a quiver up to colour-preserving relabelling.
///
/// Layout: n, m, then for every pair p < q of canonical labels three bytes:
/// colour of p -> q plus one (zero when absent), multiplicity high, multiplicity low.
struct CanonKey {
  std::string bytes;

  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
  friend bool operator==(const CanonKey&, const CanonKey&) = default;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
      out.push_back(kDigits[b >> 4]);
      out.push_back(kDigits[b & 15]);
    }
    return out;
  }

  /// 16 hex digits of FNV-1a over the bytes; used for file names.
  std::string short_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 15];
    return out;
  }
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

/// Canonical key plus the labelling that produced it: vertex v gets canonical label
/// labelling[v - 1] (1-based).
struct CanonicalForm {
  CanonKey key;
  std::vector<Vertex> labelling;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const ColouredQuiver& q) : q_(q), n_(q.n()) {
    entry_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        if (const auto l = q.link(i + 1, j + 1)) {
          entry_[idx(i, j)] = (static_cast<std::uint32_t>(l->colour + 1) << 16) |
                              static_cast<std::uint32_t>(l->multiplicity);
        }
      }
    }
  }

  CanonicalForm run() {
    std::vector<int> cells(static_cast<std::size_t>(n_), 0);
    refine(cells);
    search(cells);
    CanonicalForm out;
    out.key.bytes = std::move(best_);
    out.labelling.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      out.labelling[static_cast<std::size_t>(v)] = best_cells_[static_cast<std::size_t>(v)] + 1;
    }
    return out;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  // Equitable refinement: split cells by the multiset of (cell, arrow) pairs seen from
  // each vertex, then renumber cells by rank. Ranks only depend on the isomorphism type.
  void refine(std::vector<int>& cells) const {
    int count = distinct(cells);
    std::vector<std::vector<std::uint64_t>> sig(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    while (count < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(static_cast<std::uint64_t>(cells[static_cast<std::size_t>(v)]));
        for (int u = 0; u < n_; ++u) {
          const std::uint32_t e = entry_[idx(v, u)];
          if (e == 0) continue;
          s.push_back((static_cast<std::uint64_t>(cells[static_cast<std::size_t>(u)]) << 32) | e);
        }
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      });
      int rank = 0;
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && sig[static_cast<std::size_t>(order[k])] !=
                         sig[static_cast<std::size_t>(order[k - 1])]) {
          ++rank;
        }
        next[static_cast<std::size_t>(order[k])] = rank;
      }
      const int new_count = rank + 1;
      cells = std::move(next);
      if (new_count == count) break;
      count = new_count;
    }
  }

  static int distinct(const std::vector<int>& cells) {
    std::vector<int> c = cells;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // u and v are interchangeable by an automorphism swapping just them.
  bool twins(int u, int v) const {
    if (entry_[idx(u, v)] != entry_[idx(v, u)]) return false;
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (entry_[idx(u, w)] != entry_[idx(v, w)]) return false;
    }
    return true;
  }

  void search(const std::vector<int>& cells) {
    // target cell: the smallest cell id with more than one vertex
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : cells) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (cells[static_cast<std::size_t>(v)] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int w = 0; w < n_; ++w) {
        const int c = cells[static_cast<std::size_t>(w)];
        next[static_cast<std::size_t>(w)] = 2 * c + ((c == target && w != v) ? 1 : 0);
      }
      renumber(next);
      refine(next);
      search(next);
    }
  }

  static void renumber(std::vector<int>& cells) {
    std::vector<int> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : cells) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    }
  }

  void leaf(const std::vector<int>& cells) {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(cells[static_cast<std::size_t>(v)])] = v;
    std::string enc;
    enc.reserve(2 + 3 * static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    enc.push_back(static_cast<char>(n_));
    enc.push_back(static_cast<char>(q_.m()));
    for (int p = 0; p < n_; ++p) {
      for (int r = p + 1; r < n_; ++r) {
        const std::uint32_t e =
            entry_[idx(inv[static_cast<std::size_t>(p)], inv[static_cast<std::size_t>(r)])];
        enc.push_back(static_cast<char>(e >> 16));
        enc.push_back(static_cast<char>((e >> 8) & 0xff));
        enc.push_back(static_cast<char>(e & 0xff));
      }
    }
    if (best_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_cells_ = cells;
    }
  }

  const ColouredQuiver& q_;
  int n_;
  std::vector<std::uint32_t> entry_;  // (colour + 1) << 16 | multiplicity, 0 if absent
  std::string best_;
  std::vector<int> best_cells_;
};

}  // namespace detail

inline CanonicalForm canonical_labelling(const ColouredQuiver& q) {
  return detail::Canonizer(q).run();
}

inline CanonKey canonical_form(const ColouredQuiver& q) { return canonical_labelling(q).key; }

/// Rebuilds the canonical representative from a key.
inline ColouredQuiver quiver_from_key(const CanonKey& key) {
  const std::string& b = key.bytes;
  if (b.size() < 2) throw QuiverError(ErrorKind::Parse, "truncated canonical key");
  const int n = static_cast<unsigned char>(b[0]);
  const int m = static_cast<unsigned char>(b[1]);
  if (b.size() != 2 + 3 * static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw QuiverError(ErrorKind::Parse, "canonical key has the wrong length");
  }
  const auto width = static_cast<std::size_t>(m + 1);
  std::vector<int> counts(static_cast<std::size_t>(n * n) * width, 0);
  std::size_t pos = 2;
  for (int p = 0; p < n; ++p) {
    for (int r = p + 1; r < n; ++r, pos += 3) {
      const int colour = static_cast<unsigned char>(b[pos]);
      const int mult = (static_cast<unsigned char>(b[pos + 1]) << 8) |
                       static_cast<unsigned char>(b[pos + 2]);
      if (colour == 0) continue;
      counts[static_cast<std::size_t>(p * n + r) * width + static_cast<std::size_t>(colour - 1)] =
          mult;
      counts[static_cast<std::size_t>(r * n + p) * width +
             static_cast<std::size_t>(m - (colour - 1))] = mult;
    }
  }
  return ColouredQuiver::from_counts(n, m, counts);
}

inline bool is_isomorphic(const ColouredQuiver& a, const ColouredQuiver& b) {
  return a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b);
}

/// Vertex map with a.relabelled(image) == b, where image[v - 1] is the label of v in b.
/// Empty when not isomorphic.
inline std::optional<std::vector<Vertex>> isomorphism(const ColouredQuiver& a,
                                                      const ColouredQuiver& b) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  const CanonicalForm fa = canonical_labelling(a);
  const CanonicalForm fb = canonical_labelling(b);
  if (fa.key != fb.key) return std::nullopt;
  std::vector<Vertex> from_canon(static_cast<std::size_t>(b.n()));
  for (Vertex v = 1; v <= b.n(); ++v) {
    from_canon[static_cast<std::size_t>(fb.labelling[static_cast<std::size_t>(v - 1)] - 1)] = v;
  }
  std::vector<Vertex> image(static_cast<std::size_t>(a.n()));
  for (Vertex v = 1; v <= a.n(); ++v) {
    image[static_cast<std::size_t>(v - 1)] =
        from_canon[static_cast<std::size_t>(fa.labelling[static_cast<std::size_t>(v - 1)] - 1)];
  }
  return image;
}

}  // namespace colq

#endif  // COLQ_CANONICAL_HPP
