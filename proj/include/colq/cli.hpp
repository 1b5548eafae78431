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


#ifndef COLQ_CLI_HPP
#define COLQ_CLI_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colq/http.hpp"
#include "colq/log.hpp"
#include "colq/report.hpp"
#include "colq/service.hpp"

namespace colq {

namespace cli_detail {

/// Failure that maps to exit code 1.
struct DomainFailure {
  std::string message;
};

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure{"cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline ColouredQuiver load(const std::string& path) { return parse_any(read_input(path)); }

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw DomainFailure{"cannot write '" + path.string() + "'"};
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string analyze_text(const ColouredQuiver& q) {
  const report::json j = report::analyze_json(q);
  std::ostringstream out;
  out << "euler_characteristic: ";
  if (j["euler_characteristic"].is_null()) {
    out << "undefined (disconnected)\n";
  } else {
    out << j["euler_characteristic"].get<int>() << '\n';
  }
  out << "holes: " << j["holes"].size() << '\n';
  for (const auto& h : j["holes"]) out << "  (" << join(h.get<std::vector<Vertex>>()) << ")\n";
  out << "triangles: " << j["triangles"].size() << '\n';
  for (const auto& t : j["triangles"]) {
    out << "  (" << join(t["vertices"].get<std::vector<Vertex>>()) << ") colouration "
        << t["colouration"].get<int>() << '\n';
  }
  out << "cliques: " << j["cliques"].size() << '\n';
  for (const auto& c : j["cliques"]) out << "  {" << join(c.get<std::vector<Vertex>>()) << "}\n";
  return out.str();
}

struct Instance {
  int n;
  int m;
};

inline bool verify_instance(Instance in, double budget, bool literal, std::ostream& out) {
  bool ok = true;
  const std::string tag = "n=" + std::to_string(in.n) + " m=" + std::to_string(in.m);
  const TheoremAVerdict v = theorem_a_verdict(in.n, in.m, 500'000, budget, DOptions{literal});
  out << "class-equality " << tag << ": " << (v.equal ? "Equal" : "Differ") << " (orbit "
      << v.orbit_size << ", recognized " << v.generated_size << ")\n";
  ok &= v.equal;

  const OrbitReport orbit = mutation_class(standard_d_quiver(in.n, in.m));
  const auto closure = closure_check(orbit, ClassKind::D);
  out << "closure " << tag << ": " << closure.size() << " violations\n";
  ok &= closure.empty();

  std::size_t periodic_bad = 0;
  std::size_t dual_bad = 0;
  for (const CanonKey& k : orbit.members) {
    const ColouredQuiver q = quiver_from_key(k);
    for (Vertex v = 1; v <= q.n(); ++v) {
      const ColouredQuiver once = mutate(q, v);
      if (!(mutate_seq(q, MutationSequence(static_cast<std::size_t>(in.m + 1), v)) == q)) ++periodic_bad;
      if (!(once == mutate_alt(q, v))) ++dual_bad;
    }
  }
  out << "periodicity " << tag << ": " << periodic_bad << " violations\n";
  out << "two-definitions " << tag << ": " << dual_bad << " disagreements\n";
  return ok && periodic_bad == 0 && dual_bad == 0;
}

}  // namespace cli_detail

/// Entry point behind the `colq` binary. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"colq: coloured quiver toolkit"};
  app.require_subcommand(1);
  app.name("colq");

  std::string file;
  std::string file_b;
  std::string out_path;
  std::vector<int> vertices;
  bool json = false;
  std::size_t cap = 500'000;
  bool stats = false;
  bool ndjson = false;
  bool verify = false;
  bool dot = false;
  bool as_json = false;
  std::vector<int> ns;
  std::vector<int> ms;
  double budget = 1e8;
  bool literal = false;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t serve_cap = 10'000;
  long ttl = 3600;

  auto* validate = app.add_subcommand("validate", "check the quiver axioms");
  validate->add_option("file", file, "quiver file ('-' for stdin)")->required();
  validate->add_flag("--json", json, "print the service JSON body");

  auto* mutate_cmd = app.add_subcommand("mutate", "apply mutations left to right");
  mutate_cmd->add_option("file", file)->required();
  mutate_cmd->add_option("vertices", vertices, "vertices to mutate at")->required();
  mutate_cmd->add_option("-o,--output", out_path, "write the result here");
  mutate_cmd->add_flag("--json", json);

  auto* path = app.add_subcommand("path", "shortest mutation sequence between two quivers");
  path->add_option("from", file)->required();
  path->add_option("to", file_b)->required();
  path->add_option("--cap", cap, "visited-state cap");

  auto* analyze = app.add_subcommand("analyze", "Euler characteristic, holes, triangles, cliques");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--json", json);

  auto* classify = app.add_subcommand("classify", "recognize the D-type mutation class");
  classify->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the mutation class");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--cap", cap, "member cap");
  enumerate->add_flag("--stats", stats, "print per-class statistics as JSON");
  enumerate->add_option("--out", out_path, "write members and orbit.json to this directory");
  enumerate->add_flag("--ndjson", ndjson, "stream members as newline-delimited JSON");

  auto* zero = app.add_subcommand("zero-part", "colour-0 subquiver");
  zero->add_option("file", file)->required();
  zero->add_flag("--verify", verify, "also print the shape report");
  zero->add_flag("--json", json, "print only the shape report");

  auto* theorems = app.add_subcommand("verify-theorems", "exhaustive class checks on small instances");
  theorems->add_option("--n", ns, "vertex counts (paired with --m)");
  theorems->add_option("--m", ms, "colour bounds");
  theorems->add_option("--budget", budget, "candidate budget per instance");
  theorems->add_flag("--literal", literal, "recognize with the bare definition");

  auto* export_cmd = app.add_subcommand("export", "convert between formats");
  export_cmd->add_option("file", file)->required();
  auto* fmt = export_cmd->add_option_group("format");
  fmt->add_flag("--dot", dot, "Graphviz");
  fmt->add_flag("--json", as_json, "JSON mirror");
  fmt->require_option(0, 1);

  auto* serve_cmd = app.add_subcommand("serve", "JSON-over-HTTP service");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--cap", serve_cap, "enumeration cap per request");
  serve_cmd->add_option("--session-ttl", ttl, "session lifetime in seconds")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      const ColouredQuiver q = cli_detail::load(file);
      if (json) {
        out << report::body(report::validate_json(q));
      } else {
        out << "valid n=" << q.n() << " m=" << q.m() << " arrows=" << q.stored_arrows().size()
            << (q.is_simple() ? " simple" : " non-simple") << '\n';
      }
    } else if (mutate_cmd->parsed()) {
      const ColouredQuiver r = mutate_seq(cli_detail::load(file), vertices);
      const std::string text = json ? report::body(to_json(r)) : to_text(r);
      if (out_path.empty()) {
        out << text;
      } else {
        cli_detail::write_file(out_path, text);
      }
    } else if (path->parsed()) {
      const auto seq = find_mutation_path(cli_detail::load(file), cli_detail::load(file_b), cap);
      if (!seq) throw cli_detail::DomainFailure{"not mutation equivalent"};
      out << cli_detail::join(*seq) << '\n';
    } else if (analyze->parsed()) {
      const ColouredQuiver q = cli_detail::load(file);
      out << (json ? report::body(report::analyze_json(q)) : cli_detail::analyze_text(q));
    } else if (classify->parsed()) {
      out << report::body(report::classify_json(cli_detail::load(file)));
    } else if (enumerate->parsed()) {
      const OrbitReport r = mutation_class(cli_detail::load(file), cap);
      if (!out_path.empty()) {
        const std::filesystem::path dir(out_path);
        std::filesystem::create_directories(dir);
        for (const CanonKey& k : r.members) {
          cli_detail::write_file(dir / (k.short_hash() + ".cq"), to_text(quiver_from_key(k)));
        }
        cli_detail::write_file(dir / "orbit.json", report::orbit_index_json(r).dump(2) + '\n');
      }
      if (ndjson) {
        out << report::orbit_ndjson(r);
      } else {
        out << "members=" << r.members.size() << " depth=" << r.depth << " diameter=" << r.diameter
            << (r.capped ? " capped" : "") << '\n';
      }
      if (stats) out << report::body(report::stats_json(orbit_stats(r)));
      if (r.capped) {
        throw cli_detail::DomainFailure{"CapExceeded: more than " + std::to_string(cap) + " members"};
      }
    } else if (zero->parsed()) {
      const ColouredQuiver q = cli_detail::load(file);
      if (!json) out << report::zero_part_text(q);
      if (json || verify) out << report::body(report::gabriel_json(q));
    } else if (theorems->parsed()) {
      if (ns.size() != ms.size()) {
        err << "colq: --n and --m must be given the same number of times\n";
        return 2;
      }
      std::vector<cli_detail::Instance> todo;
      for (std::size_t i = 0; i < ns.size(); ++i) todo.push_back({ns[i], ms[i]});
      if (todo.empty()) todo = {{4, 1}, {4, 2}, {5, 1}};
      bool ok = true;
      for (auto in : todo) ok &= cli_detail::verify_instance(in, budget, literal, out);
      if (!ok) throw cli_detail::DomainFailure{"some checks failed"};
    } else if (export_cmd->parsed()) {
      const ColouredQuiver q = cli_detail::load(file);
      out << (dot ? to_dot(q) : as_json ? report::body(to_json(q)) : to_text(q));
    } else if (serve_cmd->parsed()) {
      ServiceConfig cfg;
      cfg.enumerate_cap = serve_cap;
      cfg.session_ttl = std::chrono::seconds(ttl);
      Service service(cfg);
      err << "colq: serving on " << host << ':' << port << '\n';
      if (!serve(host, port, service)) throw cli_detail::DomainFailure{"cannot listen on port " + std::to_string(port)};
    }
  } catch (const QuiverError& e) {
    err << "colq: " << e.what() << '\n';
    return 1;
  } catch (const cli_detail::DomainFailure& e) {
    err << "colq: " << e.message << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "colq: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace colq

#endif  // COLQ_CLI_HPP
