// Copyright 2026 The gpforce Authors
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

#include "gpforce/commands.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "gpforce/errors.hpp"
#include "gpforce/graph.hpp"
#include "gpforce/matching.hpp"
#include "gpforce/polynomial.hpp"
#include "gpforce/verify.hpp"

namespace gpforce {
namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const EngineMismatch& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const OrbitInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

void reject_format(const RunConfig& config, Format format,
                   std::string_view command) {
  if (config.format == format) {
    throw DomainError("format not supported by " + std::string(command));
  }
}

std::string vertex_list(const Graph& g, const std::vector<int>& vertices) {
  std::string out;
  for (int v : vertices) {
    if (!out.empty()) out += ',';
    out += g.vertex_name(v);
  }
  return out;
}

// Parses the --matching text and insists on a perfect matching.
Matching require_matching(const Graph& g, const std::string& text) {
  if (text.empty()) throw DomainError("--matching is required");
  const EdgeSet m = parse_edge_set(g, text);
  const CoverDefects defects = cover_defects(g, m);
  if (!defects.ok()) {
    std::string message = "not a perfect matching";
    if (!defects.uncovered.empty()) {
      message += "; uncovered: " + vertex_list(g, defects.uncovered);
    }
    if (!defects.multiply_covered.empty()) {
      message += "; doubly covered: " + vertex_list(g, defects.multiply_covered);
    }
    throw DomainError(message);
  }
  return m;
}

std::string csv_quoted(const std::string& s) { return "\"" + s + "\""; }

void write_stats(std::ostream& out, const PolyStats& s) {
  out << "perfect matchings: " << s.pm_count << '\n';
  out << "average forcing number: " << s.average_forcing.to_string() << " = "
      << s.average_forcing.to_decimal(6) << '\n';
  out << "forcing spectrum: {";
  for (std::size_t i = 0; i < s.spectrum.size(); ++i) {
    out << (i ? "," : "") << s.spectrum[i];
  }
  out << "}\n";
  out << "minimum forcing number: " << s.min_forcing << '\n';
  out << "maximum forcing number: " << s.max_forcing << '\n';
}

struct PolyRun {
  Graph graph;
  MatchingSet matchings;
  std::vector<ForcingResult> results;
  ForcingPolynomial polynomial;
  std::vector<OrbitRow> rows;
};

PolyRun run_poly(const RunConfig& config) {
  PolyRun run{build_gp(config.n, config.k), {}, {}, {}, {}};
  run.matchings = enumerate_perfect_matchings(run.graph);
  run.results =
      forcing_results(run.graph, run.matchings, config.engine, config.threads);
  run.polynomial = polynomial_from_results(run.results);
  const auto orbits =
      matching_orbits(run.graph, run.matchings, run.results, config.group);
  run.rows = orbit_table(orbits);
  return run;
}

}  // namespace

int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = build_gp(config.n, config.k);
    switch (config.format) {
      case Format::kJson:
        out << render_json(graph_to_json(g));
        break;
      case Format::kDot:
        out << graph_to_dot(g);
        break;
      case Format::kCsv:
        out << "index,a,b,name\n";
        for (int e = 0; e < g.num_edges(); ++e) {
          out << e << ',' << g.vertex_name(g.edge(e).a) << ','
              << g.vertex_name(g.edge(e).b) << ',' << g.edge_name(e) << '\n';
        }
        break;
      case Format::kTable: {
        const auto violations = validate(g);
        out << graph_label(g) << ": " << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges, "
            << (violations.empty() ? "3-regular, valid" : "INVALID") << '\n';
        for (const auto& v : violations) out << "violation: " << v << '\n';
        for (int e = 0; e < g.num_edges(); ++e) {
          out << e << '\t' << g.edge_name(e) << '\n';
        }
        break;
      }
    }
    return kExitOk;
  });
}

int cmd_matchings(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "matchings");
    const Graph g = build_gp(config.n, config.k);
    const MatchingSet ms = enumerate_perfect_matchings(g);
    switch (config.format) {
      case Format::kJson: {
        Json j = graph_to_json(g);
        j.erase("vertices");
        j.erase("edges");
        j["count"] = ms.size();
        Json list = Json::array();
        for (const Matching& m : ms) list.push_back(edge_indices_json(m));
        j["matchings"] = std::move(list);
        out << render_json(j);
        break;
      }
      case Format::kCsv:
        out << "index,edges\n";
        for (std::size_t i = 0; i < ms.size(); ++i) {
          out << i << ',' << csv_quoted(edge_set_to_text(g, ms[i])) << '\n';
        }
        break;
      default:
        out << graph_label(g) << ": " << ms.size() << " perfect matchings\n";
        for (std::size_t i = 0; i < ms.size(); ++i) {
          out << i << '\t' << edge_set_to_text(g, ms[i]) << '\n';
        }
    }
    return kExitOk;
  });
}

int cmd_force(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "force");
    const Graph g = build_gp(config.n, config.k);
    const Matching m = require_matching(g, config.matching);
    const MatchingAnalysis record = analyze_matching(g, m, config.engine);
    switch (config.format) {
      case Format::kJson:
        out << render_json(matching_record_json(record));
        break;
      case Format::kCsv:
        out << "matching,forcing_number,witness,packing_size,n_alt_cycles\n"
            << csv_quoted(edge_set_to_text(g, m)) << ','
            << record.forcing.forcing_number << ','
            << csv_quoted(edge_set_to_text(g, record.forcing.witness)) << ','
            << record.packing_size << ',' << record.n_alt_cycles << '\n';
        break;
      default:
        out << "matching: " << edge_set_to_text(g, m) << '\n'
            << "forcing number: " << record.forcing.forcing_number << '\n'
            << "witness: {" << edge_set_to_text(g, record.forcing.witness)
            << "}\n"
            << "alternating cycles: " << record.n_alt_cycles << '\n'
            << "max disjoint alternating cycles: " << record.packing_size
            << '\n'
            << "engine: " << method_name(record.forcing.method) << '\n';
    }
    return kExitOk;
  });
}

namespace {

void write_cycles(const Graph& g, const std::vector<AltCycle>& cycles,
                  const RunConfig& config, std::string_view title,
                  std::ostream& out) {
  switch (config.format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const AltCycle& c : cycles) list.push_back(cycle_json(g, c));
      Json j;
      j[std::string(title)] = cycles.size();
      j["cycles"] = std::move(list);
      out << render_json(j);
      break;
    }
    case Format::kCsv:
      out << "index,length,vertices\n";
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        out << i << ',' << cycles[i].length() << ','
            << csv_quoted(cycle_to_text(g, cycles[i])) << '\n';
      }
      break;
    default:
      out << title << ": " << cycles.size() << '\n';
      for (const AltCycle& c : cycles) out << cycle_to_text(g, c) << '\n';
  }
}

}  // namespace

int cmd_cycles(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "cycles");
    const Graph g = build_gp(config.n, config.k);
    const Matching m = require_matching(g, config.matching);
    write_cycles(g, enumerate_alternating_cycles(g, m), config,
                 "alternating_cycles", out);
    return kExitOk;
  });
}

int cmd_packing(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "packing");
    const Graph g = build_gp(config.n, config.k);
    const Matching m = require_matching(g, config.matching);
    write_cycles(g, max_disjoint_alternating_cycles(g, m).cycles, config,
                 "packing_size", out);
    return kExitOk;
  });
}

int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "poly");
    const PolyRun run = run_poly(config);
    switch (config.format) {
      case Format::kJson:
        out << render_json(
            poly_report_json(run.graph, run.polynomial, run.rows));
        break;
      case Format::kCsv:
        out << "exponent,coefficient\n";
        for (const auto& [exponent, count] : run.polynomial.coefficients()) {
          out << exponent << ',' << count << '\n';
        }
        break;
      default:
        out << "F(" << graph_label(run.graph)
            << ",x) = " << run.polynomial.to_string() << '\n';
        if (!run.polynomial.empty()) write_stats(out, poly_stats(run.polynomial));
        out << "engine: " << method_name(config.engine) << '\n';
        if (config.show_orbits) {
          out << '\n'
              << orbit_table_text(run.graph, run.rows, run.polynomial);
        }
    }
    return kExitOk;
  });
}

int cmd_orbits(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "orbits");
    const PolyRun run = run_poly(config);
    switch (config.format) {
      case Format::kJson:
        out << render_json(
            poly_report_json(run.graph, run.polynomial, run.rows));
        break;
      case Format::kCsv:
        out << orbit_table_csv(run.graph, run.rows);
        break;
      default:
        out << graph_label(run.graph) << ", " << group_name(config.group)
            << " orbits: " << run.rows.size() << '\n'
            << orbit_table_text(run.graph, run.rows, run.polynomial);
    }
    return kExitOk;
  });
}

int cmd_verify_paper(const RunConfig& config,
                     std::span<const PaperTable> expected, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    reject_format(config, Format::kDot, "verify-paper");
    reject_format(config, Format::kCsv, "verify-paper");
    if (config.k != 2) throw DomainError("published tables cover k = 2 only");
    if (config.from < 5 || config.to > 15 || config.from > config.to) {
      throw DomainError("verify-paper range must lie within 5..15");
    }
    std::vector<VerifyOutcome> outcomes;
    for (int n = config.from; n <= config.to; ++n) {
      const auto it = std::find_if(expected.begin(), expected.end(),
                                   [n](const PaperTable& t) { return t.n == n; });
      if (it == expected.end()) {
        throw DomainError("no expected table for n = " + std::to_string(n));
      }
      outcomes.push_back(verify_table(*it, config.engine, config.threads));
    }
    const auto passed = std::count_if(outcomes.begin(), outcomes.end(),
                                      [](const auto& o) { return o.pass(); });
    if (config.format == Format::kJson) {
      Json results = Json::array();
      for (const auto& o : outcomes) results.push_back(verify_outcome_json(o));
      Json j;
      j["passed"] = passed;
      j["total"] = outcomes.size();
      j["results"] = std::move(results);
      out << render_json(j);
    } else {
      for (const auto& o : outcomes) {
        out << "FP-" << o.n << '\t' << (o.pass() ? "PASS" : "FAIL") << '\t'
            << o.observed_polynomial.to_string() << "\t"
            << o.observed_rows.size() << " rotation orbits\n";
        for (const auto& d : o.diffs) out << "  " << d << '\n';
      }
      out << passed << '/' << outcomes.size() << " PASS\n";
    }
    return passed == static_cast<long>(outcomes.size()) ? kExitOk
                                                        : kExitMismatch;
  });
}

int cmd_verify_paper(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  return cmd_verify_paper(config, paper_tables(), out, err);
}

int run_command(std::string_view name, const RunConfig& config,
                std::ostream& out, std::ostream& err) {
  if (name == "graph") return cmd_graph(config, out, err);
  if (name == "matchings") return cmd_matchings(config, out, err);
  if (name == "force") return cmd_force(config, out, err);
  if (name == "cycles") return cmd_cycles(config, out, err);
  if (name == "packing") return cmd_packing(config, out, err);
  if (name == "poly") return cmd_poly(config, out, err);
  if (name == "orbits") return cmd_orbits(config, out, err);
  if (name == "verify-paper") return cmd_verify_paper(config, out, err);
  err << "error: unknown command '" << name << "'\n";
  return kExitDomain;
}

}  // namespace gpforce
