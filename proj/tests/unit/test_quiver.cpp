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

TEST_CASE("skew partner is implied", "[quiver]") {
  const ColouredQuiver q = new_quiver(2, 2, {{1, 2, 0}});
  CHECK(q.count(1, 2, 0) == 1);
  CHECK(q.count(2, 1, 2) == 1);
  CHECK(q.count(2, 1, 0) == 0);
  CHECK(q.colour(2, 1) == 2);
  CHECK(q.arrow_count() == 2);
}

TEST_CASE("axiom violations are named", "[quiver]") {
  auto kind_of = [](auto&& make) {
    try {
      make();
    } catch (const QuiverError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Parse;
  };
  CHECK(kind_of([] { new_quiver(2, 1, {{1, 2, 0}, {1, 2, 1}}); }) == ErrorKind::MonochromaticityViolation);
  CHECK(kind_of([] { new_quiver(2, 1, {{1, 1, 0}}); }) == ErrorKind::LoopArrow);
  CHECK(kind_of([] { new_quiver(2, 1, {{1, 2, 2}}); }) == ErrorKind::ColourOutOfRange);
  CHECK(kind_of([] { new_quiver(2, 1, {{1, 3, 0}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { new_quiver(2, 2, {{1, 2, 0}, {2, 1, 0}}); }) == ErrorKind::SkewConflict);
  CHECK(kind_of([] { new_quiver(0, 1, {}); }) == ErrorKind::BadSize);
  CHECK(kind_of([] { new_quiver(2, 0, {}); }) == ErrorKind::ColourOutOfRange);
  CHECK(kind_of([] { standard_d_quiver(3, 2); }) == ErrorKind::BadSize);
  CHECK(kind_of([] { new_quiver(2, 1, {{1, 2, 0}}).colour(1, 1); }) == ErrorKind::MissingArrow);
}

TEST_CASE("consistent explicit partners are accepted", "[quiver]") {
  const ColouredQuiver a = new_quiver(3, 2, {{1, 2, 0}, {2, 1, 2}, {2, 3, 1}});
  CHECK(a == new_quiver(3, 2, {{1, 2, 0}, {3, 2, 1}}));
}

TEST_CASE("from_counts rejects a broken skew table", "[quiver]") {
  std::vector<int> counts(2 * 2 * 3, 0);
  counts[((0 * 2) + 1) * 3 + 0] = 1;  // 1->2 colour 0, partner missing
  CHECK_THROWS_AS(ColouredQuiver::from_counts(2, 2, counts), QuiverError);
  counts[((1 * 2) + 0) * 3 + 2] = 1;
  CHECK_NOTHROW(ColouredQuiver::from_counts(2, 2, counts));
}

TEST_CASE("single vertex quiver", "[quiver]") {
  const ColouredQuiver q = new_quiver(1, 3, {});
  CHECK(q.n() == 1);
  CHECK(q.arrow_count() == 0);
  CHECK(is_connected(q));
}

TEST_CASE("standard quivers", "[quiver]") {
  const ColouredQuiver d4 = standard_d_quiver(4, 2);
  CHECK(d4 == new_quiver(4, 2, {{1, 2, 0}, {2, 3, 0}, {2, 4, 0}}));
  CHECK(d4.valency(2) == 3);
  CHECK(standard_d_quiver(5, 1) == new_quiver(5, 1, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {3, 5, 0}}));
  CHECK(standard_a_quiver(3, 1) == new_quiver(3, 1, {{1, 2, 0}, {2, 3, 0}}));
}

TEST_CASE("stored representative rule", "[quiver]") {
  // colour 2 with m = 2 is stored from the other side as colour 0
  CHECK(new_quiver(2, 2, {{1, 2, 2}}).stored_arrows() == std::vector<Arrow>{{2, 1, 0}});
  // c == m - c keeps the smaller source
  CHECK(new_quiver(2, 2, {{2, 1, 1}}).stored_arrows() == std::vector<Arrow>{{1, 2, 1}});
  // multiplicity repeats the line
  CHECK(new_quiver(2, 1, {{1, 2, 0}, {1, 2, 0}}).stored_arrows().size() == 2);
}

TEST_CASE("underlying graph", "[quiver]") {
  const UnderlyingGraph g = underlying_graph(new_quiver(2, 1, {{1, 2, 0}}));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].u == 1);
  CHECK(g.edges[0].v == 2);
  const UnderlyingGraph star = underlying_graph(standard_d_quiver(4, 2));
  CHECK(star.edge_count() == 3);
  for (const Edge& e : star.edges) CHECK((e.u == 2 || e.v == 2));
  const UnderlyingGraph tri = underlying_graph(new_quiver(3, 1, {{1, 2, 0}, {2, 3, 0}, {3, 1, 0}}));
  CHECK(tri.edge_count() == 3);
}

TEST_CASE("components and induced subquivers", "[quiver]") {
  const ColouredQuiver q = new_quiver(5, 1, {{1, 2, 0}, {4, 5, 0}});
  CHECK_FALSE(is_connected(q));
  const auto comps = components(q, q.all_vertices());
  REQUIRE(comps.size() == 3);
  CHECK(members(comps[0]) == std::vector<Vertex>{1, 2});
  CHECK(members(comps[1]) == std::vector<Vertex>{3});
  const ColouredQuiver sub = q.induced(make_set(std::vector<Vertex>{4, 5}));
  CHECK(sub == new_quiver(2, 1, {{1, 2, 0}}));
}

TEST_CASE("relabelling preserves validity", "[quiver]") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const ColouredQuiver q = oracle::random_simple(rng, 5, 3);
    const ColouredQuiver r = oracle::shuffled(rng, q);
    CHECK(r.arrow_count() == q.arrow_count());
    CHECK_NOTHROW(ColouredQuiver::from_counts(r.n(), r.m(), r.counts()));
  }
}
