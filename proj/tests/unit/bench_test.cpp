// Copyright 2026 The qcpart developers
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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qcpart/bench.hpp"
#include "qcpart/dqc.hpp"
#include "qcpart/interaction_graph.hpp"
#include "qcpart/qft.hpp"

using namespace qcpart;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

TEST_CASE("rows come back circuit-major in the requested k order") {
  const CircuitSource sources[] = {CircuitSource::qft(4), CircuitSource::qft(8)};
  const int ks[] = {3, 2};
  const int reps[] = {50};
  const auto rows = run_suite(sources, ks, reps, 7, 5);

  REQUIRE(rows.size() == 4);
  CHECK(rows[0].circuit_name == "qft4");
  CHECK(rows[0].k == 3);
  CHECK(rows[1].circuit_name == "qft4");
  CHECK(rows[1].k == 2);
  CHECK(rows[2].circuit_name == "qft8");
  CHECK(rows[2].k == 3);
  CHECK(rows[3].circuit_name == "qft8");
  CHECK(rows[3].k == 2);

  const InteractionGraph g4 = build_graph(generate_qft(4));
  const InteractionGraph g8 = build_graph(generate_qft(8));
  for (const BenchRow& row : rows) {
    CAPTURE(row.circuit_name);
    CAPTURE(row.k);
    CHECK(row.error.empty());
    CHECK(row.num_qubits == (row.circuit_name == "qft4" ? 4 : 8));
    REQUIRE(row.partitioning.has_value());
    const InteractionGraph& graph = row.circuit_name == "qft4" ? g4 : g8;
    CHECK(graph.cut_weight(*row.partitioning) == row.proposed_cut);
    CHECK(row.partitioning->k() == row.k);
    REQUIRE(row.rs_means.count(50) == 1);
    CHECK(row.improvement_pct ==
          improvement_percent(row.proposed_cut, row.rs_means.at(50)));
    CHECK(row.wall_time_ms >= 0.0);
    CHECK(static_cast<double>(row.proposed_cut) <= row.rs_means.at(50));
  }
}

TEST_CASE("baseline means are seeded per row, not per repetition list") {
  const CircuitSource sources[] = {CircuitSource::qft(8)};
  const int ks[] = {2};
  const int reps_small[] = {50};
  const int reps_all[] = {50, 100, 200};
  const auto small = run_suite(sources, ks, reps_small, 11, 5);
  const auto all = run_suite(sources, ks, reps_all, 11, 5);

  REQUIRE(small.size() == 1);
  REQUIRE(all.size() == 1);
  // Same stream: the 50-rep mean is the prefix of the longer runs.
  CHECK(small[0].rs_means.at(50) == all[0].rs_means.at(50));
  CHECK(all[0].rs_means.size() == 3);
  CHECK(small[0].proposed_cut == all[0].proposed_cut);
  // Improvement tracks the largest requested repetition count.
  CHECK(all[0].improvement_pct ==
        improvement_percent(all[0].proposed_cut, all[0].rs_means.at(200)));
  // Means at different depths of the same stream stay close.
  CHECK(std::abs(all[0].rs_means.at(50) - all[0].rs_means.at(200)) <=
        0.05 * all[0].rs_means.at(200));
}

TEST_CASE("an invalid k becomes an error row instead of an abort") {
  const CircuitSource sources[] = {CircuitSource::qft(4)};
  const int ks[] = {2, 5, 1};
  const int reps[] = {50};
  const auto rows = run_suite(sources, ks, reps, 7, 5);

  REQUIRE(rows.size() == 3);
  CHECK(rows[0].error.empty());
  CHECK(rows[1].error.find("k=5") != std::string::npos);
  CHECK_FALSE(rows[1].partitioning.has_value());
  // k=1 is legal: everything is local and the baseline is zero.
  CHECK(rows[2].error.empty());
  CHECK(rows[2].proposed_cut == 0);
  CHECK(rows[2].rs_means.at(50) == 0.0);
  CHECK(rows[2].improvement_pct == 0);
}

TEST_CASE("a missing input file yields one error row per k") {
  const CircuitSource sources[] = {
      CircuitSource::file("/nonexistent/zzz.real"), CircuitSource::qft(4)};
  const int ks[] = {2, 3};
  const int reps[] = {50};
  const auto rows = run_suite(sources, ks, reps, 7, 5);

  REQUIRE(rows.size() == 4);
  CHECK(rows[0].circuit_name == "zzz");
  CHECK(rows[0].error.find("cannot open") != std::string::npos);
  CHECK(rows[1].error.find("cannot open") != std::string::npos);
  CHECK(rows[2].error.empty());
  CHECK(rows[3].error.empty());
}

TEST_CASE("an empty repetition list is refused") {
  const CircuitSource sources[] = {CircuitSource::qft(4)};
  const int ks[] = {2};
  CHECK_THROWS_AS(run_suite(sources, ks, {}, 7, 5), std::invalid_argument);
}

TEST_CASE("csv layout: fixed columns, blanks for unrequested reps") {
  const CircuitSource sources[] = {CircuitSource::qft(4)};
  const int ks[] = {2, 9};
  const int reps[] = {100};
  const auto rows = run_suite(sources, ks, reps, 7, 5);
  const std::string csv = to_csv(rows);

  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 2);  // header plus the one valid row
  CHECK(lines[0] == "circuit,qubits,k,proposed,rs50,rs100,rs200,improvement_pct");
  const auto cells = split_cells(lines[1]);
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == "qft4");
  CHECK(cells[1] == "4");
  CHECK(cells[2] == "2");
  CHECK(cells[3] == std::to_string(rows[0].proposed_cut));
  CHECK(cells[4].empty());
  CHECK_FALSE(cells[5].empty());
  CHECK(cells[6].empty());
  CHECK(cells[7] == std::to_string(rows[0].improvement_pct));
}

TEST_CASE("equal seeds give byte-identical csv") {
  const CircuitSource sources[] = {CircuitSource::qft(4), CircuitSource::qft(8)};
  const int ks[] = {2, 3, 4};
  const int reps[] = {50, 200};
  const std::string first = to_csv(run_suite(sources, ks, reps, 99, 10));
  const std::string second = to_csv(run_suite(sources, ks, reps, 99, 10));
  CHECK(first == second);
  // A different seed may legitimately differ in the baseline cells; the
  // header stays put.
  const std::string other = to_csv(run_suite(sources, ks, reps, 100, 10));
  CHECK(split_lines(other)[0] == split_lines(first)[0]);
}

TEST_CASE("plot data groups series by k") {
  const CircuitSource sources[] = {CircuitSource::qft(4), CircuitSource::qft(8)};
  const int ks[] = {2, 3};
  const int reps[] = {50, 200};
  const auto rows = run_suite(sources, ks, reps, 7, 5);
  const nlohmann::json doc = plot_data(rows);

  REQUIRE(doc.at("cut_by_k").size() == 2);
  const auto& series = doc.at("cut_by_k")[0];
  CHECK(series.at("k") == 2);
  CHECK(series.at("circuits") == nlohmann::json{"qft4", "qft8"});
  CHECK(series.at("proposed").size() == 2);
  CHECK(series.at("baseline")[0].contains("50"));
  CHECK(series.at("baseline")[0].contains("200"));
  CHECK(doc.at("improvement").size() == 4);
  CHECK(doc.at("improvement")[0].at("circuit") == "qft4");
  CHECK(doc.at("improvement")[0].at("k") == 2);
}
