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


#ifndef COLQ_IO_HPP
#define COLQ_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "colq/quiver.hpp"

namespace colq {

/// Text format v1: header line, size line, then one `i j c` line per stored arrow.
inline std::string to_text(const ColouredQuiver& q) {
  std::string out = "colq v1\nn=" + std::to_string(q.n()) + " m=" + std::to_string(q.m()) + "\n";
  for (const Arrow& a : q.stored_arrows()) {
    out += std::to_string(a.source) + ' ' + std::to_string(a.target) + ' ' +
           std::to_string(a.colour) + '\n';
  }
  return out;
}

namespace detail {

inline std::string strip_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
  return line.substr(start);
}

[[noreturn]] inline void parse_error(int line_no, const std::string& what) {
  throw QuiverError(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline ColouredQuiver parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0 header, 1 size, 2 arrows
  int n = 0;
  int m = 0;
  std::vector<Arrow> arrows;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    if (stage == 0) {
      if (line != "colq v1") detail::parse_error(line_no, "expected header 'colq v1'");
      stage = 1;
    } else if (stage == 1) {
      std::istringstream ls(line);
      std::string a;
      std::string b;
      std::string extra;
      ls >> a >> b;
      if (ls >> extra || a.rfind("n=", 0) != 0 || b.rfind("m=", 0) != 0) {
        detail::parse_error(line_no, "expected 'n=<N> m=<M>'");
      }
      try {
        std::size_t used_n = 0;
        std::size_t used_m = 0;
        n = std::stoi(a.substr(2), &used_n);
        m = std::stoi(b.substr(2), &used_m);
        if (used_n != a.size() - 2 || used_m != b.size() - 2) throw std::invalid_argument("tail");
      } catch (const std::logic_error&) {
        detail::parse_error(line_no, "bad size line");
      }
      stage = 2;
    } else {
      std::istringstream ls(line);
      long i = 0;
      long j = 0;
      long c = 0;
      std::string extra;
      if (!(ls >> i >> j >> c) || (ls >> extra)) detail::parse_error(line_no, "expected 'i j c'");
      if (i < -1'000'000 || i > 1'000'000 || j < -1'000'000 || j > 1'000'000 || c < -1'000'000 ||
          c > 1'000'000) {
        detail::parse_error(line_no, "number out of range");
      }
      arrows.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(c)});
    }
  }
  if (stage < 2) throw QuiverError(ErrorKind::Parse, "missing header or size line");
  return new_quiver(n, m, arrows);
}

/// Keys keep the order n, m, arrows.
inline nlohmann::ordered_json to_json(const ColouredQuiver& q) {
  nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
  for (const Arrow& a : q.stored_arrows()) arrows.push_back({a.source, a.target, a.colour});
  return {{"n", q.n()}, {"m", q.m()}, {"arrows", arrows}};
}

template <class Json>
ColouredQuiver from_json(const Json& j) {
  auto need_int = [](const Json& v, const char* what) {
    if (!v.is_number_integer()) {
      throw QuiverError(ErrorKind::Parse, std::string(what) + " must be an integer");
    }
    const auto x = v.template get<long long>();
    if (x < -1'000'000 || x > 1'000'000) {
      throw QuiverError(ErrorKind::Parse, std::string(what) + " out of range");
    }
    return static_cast<int>(x);
  };
  if (!j.is_object() || !j.contains("n") || !j.contains("m")) {
    throw QuiverError(ErrorKind::Parse, "quiver JSON needs fields n and m");
  }
  const int n = need_int(j.at("n"), "n");
  const int m = need_int(j.at("m"), "m");
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j.at("arrows").is_array()) throw QuiverError(ErrorKind::Parse, "arrows must be a list");
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3) {
        throw QuiverError(ErrorKind::Parse, "each arrow must be [i, j, c]");
      }
      arrows.push_back({need_int(a[0], "arrow source"), need_int(a[1], "arrow target"),
                        need_int(a[2], "arrow colour")});
    }
  }
  return new_quiver(n, m, arrows);
}

inline ColouredQuiver parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw QuiverError(ErrorKind::Parse, e.what());
  }
  return from_json(j);
}

/// Reads either format, deciding by the first non-space character.
inline ColouredQuiver parse_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

/// Graphviz digraph, one edge per stored arrow labelled by its colour.
inline std::string to_dot(const ColouredQuiver& q) {
  std::string out = "digraph colq {\n";
  for (Vertex v = 1; v <= q.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Arrow& a : q.stored_arrows()) {
    out += "  " + std::to_string(a.source) + " -> " + std::to_string(a.target) + " [label=\"" +
           std::to_string(a.colour) + "\"" + (a.colour == 0 ? ", style=bold" : "") + "];\n";
  }
  return out + "}\n";
}

}  // namespace colq

#endif  // COLQ_IO_HPP
