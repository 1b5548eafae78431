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
#include <string>

#include "colq/colq.hpp"
#include "oracles.hpp"

using namespace colq;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_any(text);
  } catch (const QuiverError& e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("text format", "[io]") {
  const ColouredQuiver q = standard_d_quiver(4, 2);
  CHECK(to_text(q) == "colq v1\nn=4 m=2\n1 2 0\n2 3 0\n2 4 0\n");
  CHECK(parse_text("# comment\ncolq v1\n\nn=4 m=2  # sizes\n1 2 0\n2 3 0 # arrow\n2 4 0\n") == q);
  CHECK(parse_text("colq v1\nn=2 m=1\n1 2 0\n1 2 0\n").multiplicity(1, 2) == 2);
  CHECK(parse_text("colq v1\nn=1 m=3\n").n() == 1);
}

TEST_CASE("text parse errors", "[io]") {
  CHECK(kind_of("") == ErrorKind::Parse);
  CHECK(kind_of("colq v2\nn=1 m=1\n") == ErrorKind::Parse);
  CHECK(kind_of("colq v1\nn=x m=1\n") == ErrorKind::Parse);
  CHECK(kind_of("colq v1\nn=2 m=1\n1 2\n") == ErrorKind::Parse);
  CHECK(kind_of("colq v1\nn=2 m=1\n1 2 0 4\n") == ErrorKind::Parse);
  CHECK(kind_of("colq v1\nn=2 m=1\n1 2 9999999999\n") == ErrorKind::Parse);
  CHECK(kind_of("colq v1\nn=2 m=1\n1 2 0\n1 2 1\n") == ErrorKind::MonochromaticityViolation);
  CHECK(kind_of("colq v1\nn=2 m=1\n1 1 0\n") == ErrorKind::LoopArrow);
}

TEST_CASE("json mirror", "[io]") {
  const ColouredQuiver q = standard_d_quiver(4, 2);
  CHECK(to_json(q).dump() == R"({"n":4,"m":2,"arrows":[[1,2,0],[2,3,0],[2,4,0]]})");
  CHECK(parse_json(R"({"arrows":[[2,1,2]],"m":2,"n":2})") == new_quiver(2, 2, {{1, 2, 0}}));
  CHECK(parse_json(R"({"n":1,"m":1})").n() == 1);
  CHECK(kind_of(R"({"n":2})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"n":2,"m":1,"arrows":[[1,2]]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"n":2,"m":1,"arrows":[[1,2,"0"]]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"n":2,"m":1,"arrows":[[1,2,0],)") == ErrorKind::Parse);
  CHECK(kind_of(R"({"n":2,"m":2,"arrows":[[1,2,0],[2,1,0]]})") == ErrorKind::SkewConflict);
}

TEST_CASE("round trips", "[io]") {
  std::mt19937 rng(53);
  for (int t = 0; t < 300; ++t) {
    const ColouredQuiver q = oracle::random_simple(rng, 1 + t % 8, 1 + t % 5);
    CHECK(parse_any(to_text(q)) == q);
    CHECK(parse_any(to_json(q).dump()) == q);
    CHECK(to_text(parse_text(to_text(q))) == to_text(q));
  }
}

TEST_CASE("dot export", "[io]") {
  const std::string dot = to_dot(new_quiver(3, 2, {{1, 2, 0}, {2, 3, 1}}));
  CHECK(dot.rfind("digraph colq {\n", 0) == 0);
  CHECK(dot.find("1 -> 2 [label=\"0\", style=bold];") != std::string::npos);
  CHECK(dot.find("2 -> 3 [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("  3;\n") != std::string::npos);
}
