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

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gpforce/commands.hpp"
#include "gpforce/paper_tables.hpp"
#include "gpforce/polynomial.hpp"
#include "gpforce/report.hpp"
#include "gtest/gtest.h"

namespace gpforce {
namespace {

struct Output {
  int code = 0;
  std::string out;
  std::string err;
};

Output run(std::string_view command, const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(command, config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig with_n(int n) {
  RunConfig c;
  c.n = n;
  return c;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(PaperTablesTest, EmbeddedConstantsAreConsistent) {
  const auto tables = paper_tables();
  ASSERT_EQ(tables.size(), 11u);
  const std::vector<std::int64_t> pm_counts = {6, 10, 15, 17, 22, 36, 45, 54, 79, 113, 144};
  const std::vector<std::size_t> row_counts = {2, 3, 3, 4, 4, 5, 5, 8, 7, 10, 12};
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const PaperTable& t = tables[i];
    EXPECT_EQ(t.n, static_cast<int>(i) + 5);
    EXPECT_EQ(poly_stats(ForcingPolynomial(t.polynomial)).pm_count, pm_counts[i]);
    EXPECT_EQ(t.rows.size(), row_counts[i]);
    const int pmc_sum = std::accumulate(t.rows.begin(), t.rows.end(), 0,
                                        [](int s, const auto& r) { return s + r.first; });
    EXPECT_EQ(pmc_sum, pm_counts[i]) << "n=" << t.n;
  }
  EXPECT_EQ(find_paper_table(16), nullptr);
  ASSERT_NE(find_paper_table(14), nullptr);
  EXPECT_EQ(ForcingPolynomial(find_paper_table(14)->polynomial).to_string(), "57x^4+56x^3");
}

TEST(PolyCommandTest, PrintsPolynomial) {
  const Output r = run("poly", with_n(11));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "F(GP(11,2),x) = 34x^3+11x^2\n"));
  EXPECT_TRUE(contains(r.out, "perfect matchings: 45\n"));
  EXPECT_TRUE(contains(r.out, "forcing spectrum: {2,3}\n"));
}

TEST(PolyCommandTest, BothEnginesAgree) {
  RunConfig c = with_n(6);
  c.engine = Method::kBoth;
  const Output r = run("poly", c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "= 10x^2\n"));
  EXPECT_TRUE(contains(r.out, "engine: both\n"));
}

TEST(PolyCommandTest, BeyondPublishedRange) {
  RunConfig c = with_n(16);
  c.engine = Method::kBoth;
  c.threads = 2;
  const Output r = run("poly", c);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "F(GP(16,2),x) = "));
}

TEST(PolyCommandTest, OrbitTableFooter) {
  RunConfig c = with_n(5);
  c.show_orbits = true;
  const Output r = run("poly", c);
  EXPECT_TRUE(contains(r.out, "FP-5\t6x^2\n"));
}

TEST(PolyCommandTest, DomainErrorExitCode) {
  RunConfig c = with_n(6);
  c.k = 3;
  const Output r = run("poly", c);
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_TRUE(contains(r.err, "k = n/2"));
  c.k = 2;
  c.format = Format::kDot;
  EXPECT_EQ(run("poly", c).code, kExitDomain);
  EXPECT_EQ(run("no-such-command", with_n(5)).code, kExitDomain);
}

TEST(OrbitsCommandTest, RowsAndFooter) {
  const Output r = run("orbits", with_n(15));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "rotation orbits: 12\n"));
  EXPECT_TRUE(contains(r.out, "FP-15\t91x^4+53x^3\n"));
  RunConfig csv = with_n(5);
  csv.format = Format::kCsv;
  const Output rc = run("orbits", csv);
  EXPECT_EQ(rc.out,
            "no,pmc,fn,representative\n"
            "1,1,2,\"u0-v0,u1-v1,u2-v2,u3-v3,u4-v4\"\n"
            "2,5,2,\"u0-u2,u1-u3,u4-v4,v0-v1,v2-v3\"\n");
}

TEST(OrbitsCommandTest, JsonReportShape) {
  RunConfig c = with_n(8);
  c.format = Format::kJson;
  const Output r = run("orbits", c);
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["polynomial"]["2"], 9);
  EXPECT_EQ(j["polynomial"]["3"], 8);
  EXPECT_EQ(j["stats"]["pm_count"], 17);
  EXPECT_EQ(j["stats"]["average_forcing"], "42/17");
  EXPECT_EQ(j["orbits"].size(), 4u);
  EXPECT_TRUE(j["orbits"][0].contains("representative_edges"));
}

TEST(ForceCommandTest, PetersenM1) {
  RunConfig c = with_n(5);
  c.matching = "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3";
  const Output r = run("force", c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "forcing number: 2\n"));
  EXPECT_TRUE(contains(r.out, "max disjoint alternating cycles: 1\n"));
  EXPECT_TRUE(contains(r.out, "alternating cycles: 5\n"));
}

TEST(ForceCommandTest, PetersenSpokesJson) {
  RunConfig c = with_n(5);
  c.matching = "u0-v0,u1-v1,u2-v2,u3-v3,u4-v4";
  c.format = Format::kJson;
  c.engine = Method::kSubsetSearch;
  const Output r = run("force", c);
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["forcing_number"], 2);
  EXPECT_EQ(j["witness"], Json::parse("[5, 6]"));
  EXPECT_EQ(j["matching"], Json::parse("[5, 6, 7, 8, 9]"));
  EXPECT_EQ(j["packing_size"], 1);
  EXPECT_EQ(j["n_alt_cycles"], 5);
}

TEST(ForceCommandTest, RejectsNonPerfectMatching) {
  RunConfig c = with_n(5);
  c.matching = "u0-u2";
  const Output r = run("force", c);
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_TRUE(contains(r.err, "not a perfect matching"));
  EXPECT_TRUE(contains(r.err, "uncovered: u1,u3,u4,v0,v1,v2,v3,v4"));
  c.matching = "u0-u2,u2-u4,u1-v1,u3-v3,v0-v4";
  EXPECT_TRUE(contains(run("force", c).err, "doubly covered: u2"));
  c.matching = "u0-u1";
  EXPECT_EQ(run("force", c).code, kExitDomain);
  c.matching = "";
  EXPECT_EQ(run("force", c).code, kExitDomain);
}

TEST(CyclesCommandTest, ListsAndPacks) {
  RunConfig c = with_n(5);
  c.matching = "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3";
  const Output r = run("cycles", c);
  EXPECT_TRUE(contains(r.out, "alternating_cycles: 5\n"));
  EXPECT_TRUE(contains(r.out, "u1 u3 v3 v2 v1 v0 v4 u4\n"));
  const Output p = run("packing", c);
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_TRUE(contains(p.out, "packing_size: 1\n"));
}

TEST(GraphCommandTest, Formats) {
  RunConfig c = with_n(5);
  c.format = Format::kDot;
  const Output dot = run("graph", c);
  EXPECT_TRUE(contains(dot.out, "graph GP_5_2 {\n  u0 -- u2;\n"));
  EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), '\n'), 15 + 2);
  c.format = Format::kJson;
  const Json j = Json::parse(run("graph", c).out);
  EXPECT_EQ(j["edges"].size(), 15u);
  EXPECT_EQ(j["edges"][5], Json::parse("[0, 5]"));
  EXPECT_EQ(j["vertices"][5], "v0");
  c.format = Format::kTable;
  EXPECT_TRUE(contains(run("graph", c).out, "GP(5,2): 10 vertices, 15 edges, 3-regular, valid\n"));
}

TEST(MatchingsCommandTest, ListsAll) {
  RunConfig c = with_n(5);
  c.format = Format::kJson;
  const Json j = Json::parse(run("matchings", c).out);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["matchings"].size(), 6u);
  c.format = Format::kCsv;
  const std::string csv = run("matchings", c).out;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(VerifyCommandTest, Gp8Passes) {
  RunConfig c;
  c.from = 8;
  c.to = 8;
  const Output r = run("verify-paper", c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "FP-8\tPASS\t8x^3+9x^2"));
  EXPECT_TRUE(contains(r.out, "1/1 PASS\n"));
}

TEST(VerifyCommandTest, TamperedTableFailsWithDiff) {
  std::vector<PaperTable> tampered(paper_tables().begin(), paper_tables().end());
  PaperTable& t8 = tampered[3];
  ASSERT_EQ(t8.n, 8);
  t8.polynomial = {{3, 9}, {2, 8}};
  t8.rows[1] = {8, 3};
  RunConfig c;
  c.from = 7;
  c.to = 8;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_verify_paper(c, tampered, out, err), kExitMismatch);
  const std::string text = out.str();
  EXPECT_TRUE(contains(text, "FP-7\tPASS"));
  EXPECT_TRUE(contains(text, "FP-8\tFAIL"));
  EXPECT_TRUE(contains(text, "polynomial: expected 9x^3+8x^2, got 8x^3+9x^2"));
  EXPECT_TRUE(contains(text, "rotation orbits: missing row (8,3) x1"));
  EXPECT_TRUE(contains(text, "rotation orbits: unexpected row (8,2) x1"));
  EXPECT_TRUE(contains(text, "dihedral orbits: "));
  EXPECT_TRUE(contains(text, "1/2 PASS\n"));
}

TEST(VerifyCommandTest, RangeChecks) {
  RunConfig c;
  c.from = 4;
  EXPECT_EQ(run("verify-paper", c).code, kExitDomain);
  c.from = 5;
  c.to = 16;
  EXPECT_EQ(run("verify-paper", c).code, kExitDomain);
  c.to = 6;
  c.k = 3;
  EXPECT_EQ(run("verify-paper", c).code, kExitDomain);
}

TEST(VerifyCommandTest, JsonOutput) {
  RunConfig c;
  c.from = 5;
  c.to = 6;
  c.format = Format::kJson;
  const Output r = run("verify-paper", c);
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], 2);
  EXPECT_EQ(j["results"][1]["observed_polynomial"], "10x^2");
  EXPECT_TRUE(j["results"][0]["dihedral_rows"].is_null());
}

// Re-serializing any JSON report gives back the same bytes.
TEST(JsonReportTest, RoundTripIsByteIdentical) {
  const std::vector<std::pair<std::string, RunConfig>> cases = [] {
    std::vector<std::pair<std::string, RunConfig>> out;
    for (const char* cmd : {"graph", "matchings", "poly", "orbits", "verify-paper"}) {
      RunConfig c = with_n(9);
      c.format = Format::kJson;
      c.from = c.to = 9;
      out.emplace_back(cmd, c);
    }
    RunConfig f = with_n(5);
    f.format = Format::kJson;
    f.matching = "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3";
    out.emplace_back("force", f);
    out.emplace_back("cycles", f);
    out.emplace_back("packing", f);
    return out;
  }();
  for (const auto& [cmd, config] : cases) {
    const Output r = run(cmd, config);
    ASSERT_EQ(r.code, kExitOk) << cmd << ": " << r.err;
    EXPECT_EQ(render_json(Json::parse(r.out)), r.out) << cmd;
  }
}

TEST(DeterminismTest, ThreadCountDoesNotChangeReports) {
  for (const char* cmd : {"poly", "orbits"}) {
    for (Format format : {Format::kTable, Format::kJson, Format::kCsv}) {
      RunConfig c = with_n(14);
      c.format = format;
      c.show_orbits = true;
      c.threads = 1;
      const Output one = run(cmd, c);
      c.threads = 5;
      const Output five = run(cmd, c);
      EXPECT_EQ(one.out, five.out) << cmd;
    }
  }
}

}  // namespace
}  // namespace gpforce
