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

#ifndef GPFORCE_COMMANDS_HPP_
#define GPFORCE_COMMANDS_HPP_

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "gpforce/forcing.hpp"
#include "gpforce/orbits.hpp"
#include "gpforce/paper_tables.hpp"
#include "gpforce/report.hpp"

namespace gpforce {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // verification found a difference
  kExitDomain = 2,    // invalid input
  kExitInternal = 3,  // EngineMismatch / OrbitInconsistency
};

struct RunConfig {
  int n = 5;
  int k = 2;
  Method engine = Method::kHittingSet;
  Format format = Format::kTable;
  OrbitGroup group = OrbitGroup::kRotation;
  int threads = 1;
  std::string matching;  // text form, for force / cycles / packing
  bool show_orbits = false;
  int from = 5;  // verify-paper range
  int to = 15;
};

// Each command writes its report to out and diagnostics to err, and returns
// an ExitCode. Exceptions are mapped onto exit codes, never propagated.
int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_matchings(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_force(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cycles(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_packing(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_orbits(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const RunConfig& config, std::ostream& out,
                     std::ostream& err);
// Same, against caller-supplied expected tables.
int cmd_verify_paper(const RunConfig& config,
                     std::span<const PaperTable> expected, std::ostream& out,
                     std::ostream& err);

// Dispatch by subcommand name ("graph", ..., "verify-paper").
int run_command(std::string_view name, const RunConfig& config,
                std::ostream& out, std::ostream& err);

}  // namespace gpforce

#endif  // GPFORCE_COMMANDS_HPP_
