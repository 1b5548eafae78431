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

#include <random>
#include <vector>

#include "colq/colq.hpp"
#include "oracles.hpp"

using namespace colq;

namespace {

bool valid_table(const oracle::Table& t) {
  std::vector<int> counts;
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j)
      for (int c = 0; c <= t.m; ++c) counts.push_back(t.t[i][j][c]);
  try {
    ColouredQuiver::from_counts(t.n, t.m, counts);
    return true;
  } catch (const QuiverError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("pure colour shift", "[mutation]") {
  const ColouredQuiver q = new_quiver(2, 2, {{1, 2, 0}});
  CHECK(mutate(q, 2) == new_quiver(2, 2, {{1, 2, 1}}));
  CHECK(mutate_alt(q, 2) == new_quiver(2, 2, {{1, 2, 1}}));
  // out of the mutated vertex the colour drops: 1->2:0 becomes 1->2:2, i.e. 2->1:0
  CHECK(mutate(standard_d_quiver(4, 2), 1) == new_quiver(4, 2, {{2, 1, 0}, {2, 3, 0}, {2, 4, 0}}));
}

TEST_CASE("composition creates the third side of a triangle", "[mutation]") {
  const ColouredQuiver q = new_quiver(3, 1, {{1, 2, 0}, {2, 3, 0}});
  const ColouredQuiver expect = new_quiver(3, 1, {{2, 1, 0}, {3, 2, 0}, {1, 3, 0}});
  CHECK(mutate(q, 2) == expect);
  CHECK(mutate_alt(q, 2) == expect);
}

TEST_CASE("no arrows means no change", "[mutation]") {
  const ColouredQuiver q = new_quiver(1, 3, {});
  CHECK(mutate(q, 1) == q);
  CHECK(mutate_alt(q, 1) == q);
}

TEST_CASE("symmetric additions cancel in the 3-step algorithm", "[mutation]") {
  // 1->2:2 and 2->3:0 add 1->3:2; the partners 3->2:2 and 2->1:0 add 1->3:0; they cancel
  const ColouredQuiver q = new_quiver(3, 2, {{1, 2, 2}, {2, 3, 0}});
  const ColouredQuiver expect = new_quiver(3, 2, {{1, 2, 0}, {3, 2, 0}});
  CHECK(mutate_alt(q, 2) == expect);
  CHECK(mutate(q, 2) == expect);
  CHECK(mutate_alt(new_quiver(2, 2, {{1, 2, 2}}), 2) == new_quiver(2, 2, {{1, 2, 0}}));
}

TEST_CASE("closed formula matches an independent table implementation", "[mutation]") {
  std::mt19937 rng(101);
  int compared = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = 2 + t % 5;
    const int m = 1 + t % 3;
    const ColouredQuiver q = oracle::random_simple(rng, n, m);
    const Vertex j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const oracle::Table expect = oracle::formula_mutate(q, j);
    if (valid_table(expect)) {
      CHECK(oracle::Table(mutate(q, j)) == expect);
      ++compared;
    } else {
      CHECK_THROWS_AS(mutate(q, j), QuiverError);
    }
  }
  CHECK(compared > 2000);
}

TEST_CASE("m = 1 agrees with matrix mutation", "[mutation]") {
  std::mt19937 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 5;
    const ColouredQuiver q = oracle::random_simple(rng, n, 1);
    const Vertex j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto expect = oracle::fz_mutate(oracle::exchange_matrix(q), j - 1);
    ColouredQuiver got = q;
    try {
      got = mutate(q, j);
    } catch (const QuiverError&) {
      FAIL("mutation of a 1-coloured quiver must be defined");
    }
    CHECK(oracle::exchange_matrix(got) == expect);
  }
}

TEST_CASE("the two definitions differ off the class", "[mutation]") {
  // A triangle that is not in any D or A class with m = 2.
  const ColouredQuiver q = new_quiver(3, 2, {{1, 2, 1}, {1, 3, 0}, {2, 3, 0}});
  CHECK(mutate(q, 2) == new_quiver(3, 2, {{1, 3, 0}, {2, 1, 0}, {3, 2, 0}}));
  CHECK(mutate_alt(q, 2) == new_quiver(3, 2, {{2, 1, 0}, {3, 2, 0}}));
}

TEST_CASE("periodicity and both definitions on class members", "[mutation]") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 2}, {4, 3}}) {
    const OrbitReport orbit = mutation_class(standard_d_quiver(n, m));
    for (const CanonKey& k : orbit.members) {
      const ColouredQuiver q = quiver_from_key(k);
      for (Vertex v = 1; v <= n; ++v) {
        CHECK(mutate(q, v) == mutate_alt(q, v));
        CHECK(mutate_seq(q, MutationSequence(static_cast<std::size_t>(m + 1), v)) == q);
        CHECK(mutate_seq(q, MutationSequence(static_cast<std::size_t>(m), v)) != q);
      }
    }
  }
}

TEST_CASE("sequences", "[mutation]") {
  const ColouredQuiver q = new_quiver(2, 2, {{1, 2, 0}});
  CHECK(mutate_seq(q, {}) == q);
  CHECK(mutate_seq(q, {2, 2, 2}) == q);
  CHECK(mutate_seq(q, {2}) == new_quiver(2, 2, {{1, 2, 1}}));
  CHECK(mutate_seq(q, {2, 2}) == new_quiver(2, 2, {{1, 2, 2}}));
  CHECK(mutate_seq(standard_d_quiver(4, 2), {1}) == mutate_alt(standard_d_quiver(4, 2), 1));
  CHECK_THROWS_AS(mutate(q, 3), QuiverError);
  CHECK_THROWS_AS(mutate_seq(q, {1, 0}), QuiverError);
}

TEST_CASE("path search", "[mutation]") {
  const ColouredQuiver d4 = standard_d_quiver(4, 2);
  auto replays = [](const ColouredQuiver& from, const ColouredQuiver& to, const MutationSequence& s) {
    return is_isomorphic(mutate_seq(from, s), to);
  };
  CHECK(find_mutation_path(d4, d4) == MutationSequence{});

  // another colouring of the same tree
  const ColouredQuiver recoloured = new_quiver(4, 2, {{1, 2, 1}, {2, 3, 0}, {2, 4, 2}});
  auto p = find_mutation_path(d4, recoloured);
  REQUIRE(p.has_value());
  CHECK(replays(d4, recoloured, *p));

  // oriented 4-cycle of colouration m - 1
  const ColouredQuiver square = new_quiver(4, 2, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 1, 1}});
  p = find_mutation_path(d4, square);
  REQUIRE(p.has_value());
  CHECK(replays(d4, square, *p));
  CHECK(p->size() == 2);  // shortest: the orbit graph has no single step between them

  CHECK_FALSE(find_mutation_path(standard_d_quiver(4, 1), standard_a_quiver(4, 1)).has_value());
  CHECK_THROWS_AS(find_mutation_path(d4, standard_d_quiver(5, 2)), QuiverError);
  CHECK_THROWS_AS(find_mutation_path(standard_d_quiver(8, 3), standard_a_quiver(8, 3), 50), QuiverError);
}

TEST_CASE("shortest paths agree with orbit distances", "[mutation]") {
  const OrbitReport orbit = mutation_class(standard_d_quiver(5, 1));
  const ColouredQuiver seed = standard_d_quiver(5, 1);
  // breadth-first levels from the seed in the orbit graph
  std::vector<int> level(orbit.members.size(), -1);
  level[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const OrbitEdge& e : orbit.edges) {
      if (level[e.from] >= 0 && (level[e.to] < 0 || level[e.to] > level[e.from] + 1)) {
        level[e.to] = level[e.from] + 1;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    const ColouredQuiver target = quiver_from_key(orbit.members[i]);
    const auto p = find_mutation_path(seed, target);
    REQUIRE(p.has_value());
    CHECK(static_cast<int>(p->size()) == level[i]);
    CHECK(is_isomorphic(mutate_seq(seed, *p), target));
  }
}
