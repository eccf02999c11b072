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

// Command-line front end: forcing numbers, forcing polynomials and
// rotation orbits of generalized Petersen graphs.
//
//   gpforce poly --n 11
//   gpforce force --n 5 --matching u0-u2,u1-u3,u4-v4,v0-v1,v2-v3
//   gpforce verify-paper --threads 8

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpforce/commands.hpp"
#include "gpforce/parallel.hpp"

int main(int argc, char** argv) {
  using gpforce::Format;
  using gpforce::Method;
  using gpforce::OrbitGroup;

  CLI::App app{"Forcing polynomials of generalized Petersen graphs GP(n,k)"};
  app.require_subcommand(1);

  gpforce::RunConfig config;
  std::optional<int> threads;

  const std::map<std::string, Method> engines{{"cycles", Method::kHittingSet},
                                              {"subsets", Method::kSubsetSearch},
                                              {"both", Method::kBoth}};
  const std::map<std::string, Format> formats{{"table", Format::kTable},
                                              {"json", Format::kJson},
                                              {"csv", Format::kCsv},
                                              {"dot", Format::kDot}};
  const std::map<std::string, OrbitGroup> groups{
      {"rotation", OrbitGroup::kRotation}, {"dihedral", OrbitGroup::kDihedral}};

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands{
      {"graph", "Print GP(n,k) with its canonical edge indexing"},
      {"matchings", "Enumerate all perfect matchings"},
      {"force", "Forcing number and minimum forcing set of one matching"},
      {"cycles", "List the alternating cycles of one matching"},
      {"packing", "Maximum set of vertex-disjoint alternating cycles"},
      {"poly", "Forcing polynomial and its statistics"},
      {"orbits", "Table of non-equivalent matchings (orbits)"},
      {"verify-paper", "Recompute the published GP(n,2) tables, n = 5..15"},
  };

  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--n", config.n, "Number of spokes (n >= 5)");
    sub->add_option("--k", config.k, "Inner-cycle step (default 2)");
    sub->add_option("--engine", config.engine, "Forcing engine")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--group", config.group, "Orbit group")
        ->transform(CLI::CheckedTransformer(groups, CLI::ignore_case));
    sub->add_option("--threads", threads,
                    "Worker threads (default: FORCE_THREADS or all cores)");
    const std::string name = c.name;
    if (name == "force" || name == "cycles" || name == "packing") {
      sub->add_option("--matching", config.matching,
                      "Matching as 'u0-u2,u1-u3,...'")
          ->required();
    }
    if (name == "poly") {
      sub->add_flag("--orbits", config.show_orbits, "Append the orbit table");
    }
    if (name == "verify-paper") {
      sub->add_option("--from", config.from, "First n (default 5)");
      sub->add_option("--to", config.to, "Last n (default 15)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gpforce::kExitDomain;
  }

  config.threads = gpforce::resolve_threads(threads);
  const CLI::App* chosen = app.get_subcommands().front();
  return gpforce::run_command(chosen->get_name(), config, std::cout, std::cerr);
}
