// Copyright 2026 The walkdist Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "walkdist/io.hpp"
#include "walkdist/sweep.hpp"

using namespace walkdist;
using testing::code_of;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string& s) {
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  REQUIRE(*end == '\0');
  return x;
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(-2.5) == "-2.5");
}

TEST_CASE("plan and potential CSV") {
  const Graph p3 = path_graph(3);
  const Distribution xi{{0.25, 0.5, -0.75}, DistributionKind::kSigned};
  const TransportResult r = wasserstein(xi, p3, Metric(p3));
  const auto plan = csv_rows(plan_to_csv(r.plan));
  REQUIRE(plan.size() == r.plan.moves.size() + 1);
  CHECK(plan[0] == std::vector<std::string>{"source", "target", "mass"});
  TransportPlan back;
  for (size_t i = 1; i < plan.size(); ++i)
    back.add(std::stoi(plan[i][0]), std::stoi(plan[i][1]), num(plan[i][2]));
  CHECK(std::abs(cost_of_plan(back, Metric(p3)) - r.value) <= 1e-11);

  const auto pot = csv_rows(potential_to_csv(r.potential));
  REQUIRE(pot.size() == 4);
  CHECK(pot[0] == std::vector<std::string>{"vertex", "ell"});
  for (int w = 0; w < 3; ++w) {
    CHECK(std::stoi(pot[w + 1][0]) == w);
    CHECK(std::abs(num(pot[w + 1][1]) - r.potential.ell[w]) <= 1e-11);
  }

  const json tj = json::parse(transport_to_json(r));
  CHECK(std::abs(tj["value"].get<double>() - r.value) <= 1e-11);
  CHECK(tj["plan"].size() == r.plan.moves.size());
  CHECK(tj["potential"].size() == 3);
}

TEST_CASE("report and rate JSON") {
  const ClassificationReport rep = classify(make_guvab(star_graph(3), 1, 2, 0.0, 1.0));
  const json j = json::parse(report_to_json(rep));
  CHECK(j["category"] == "BETA1");
  CHECK(j["converges"] == false);
  CHECK(j["limit"].is_null());
  CHECK(j["constancy_predicted"].is_null());
  CHECK(j["divergence_sum"].get<double>() == 1.0);
  CHECK(std::abs(j["limit_even"].get<double>() - rep.limit_even) <= 1e-11);

  const ClassificationReport c = classify(make_guvab(cycle_graph(4), 0, 2, 0.0, 0.0));
  const json jc = json::parse(report_to_json(c));
  CHECK(jc["constancy_predicted"] == true);
  CHECK(jc["constancy_reason"].is_string());

  RateEstimate r;
  r.c = 0.5;
  r.lambda = 0.4;
  r.parity = Parity::kOdd;
  r.residual = 1e-12;
  r.points = 9;
  const json jr = json::parse(rate_to_json(r));
  CHECK(jr["lambda"].get<double>() == 0.4);
  CHECK(jr["c"].get<double>() == 0.5);
  CHECK(jr["parity"] == "odd");
  CHECK(jr["points"] == 9);
}

TEST_CASE("series CSV and JSON round trip") {
  const Guvab g = make_guvab(cycle_graph(4), 0, 1, 0.0, 0.3);
  const auto series = wk_series(g, 80);
  const ClassificationReport rep = classify(g);
  std::vector<RateEstimate> rates = {fit_rate(series, 0.5, Parity::kEven),
                                     fit_rate(series, 0.5, Parity::kOdd)};
  const std::string csv = series_to_csv(series, rep, rates);
  CHECK(csv == series_to_csv(series, rep, rates));
  const auto rows = csv_rows(csv);
  REQUIRE(rows.size() == series.size() + 1);
  CHECK(rows[0] == std::vector<std::string>{"k", "W_k", "deviation"});
  for (size_t k = 0; k < series.size(); ++k) {
    CHECK(std::stoi(rows[k + 1][0]) == static_cast<int>(k));
    CHECK(std::abs(num(rows[k + 1][1]) - series[k].w) <= 1e-11);
    CHECK(std::abs(num(rows[k + 1][2]) - std::abs(series[k].w - 0.5)) <= 1e-11);
  }
  const auto footer = csv.substr(csv.rfind("# ") + 2);
  const json jf = json::parse(footer);
  REQUIRE(jf["rates"].size() == 2);
  CHECK(std::abs(jf["rates"][0]["lambda"].get<double>() - 0.4) <= 1e-3);

  const json js = json::parse(series_to_json(series, rep, rates));
  REQUIRE(js["series"].size() == series.size());
  CHECK(js["series"][3]["k"] == 3);
  CHECK(std::abs(js["series"][3]["W_k"].get<double>() - series[3].w) <= 1e-11);
  CHECK(js["report"]["category"] == "W_HALF");
  CHECK(js["rates"].size() == 2);

  CHECK(series_to_csv(series, rep, {}).find('#') == std::string::npos);
}

TEST_CASE("tree transport report JSON") {
  const Guvab g = make_guvab(cycle_graph(6), 0, 1, 0.0, 0.0);
  const TreeTransportReport r = tree_transport_report(g, 120);
  CHECK(r.inequalities.holds);
  CHECK(std::abs(r.cost - 1.0) <= 1e-9);
  CHECK(std::abs(r.wasserstein - 1.0) <= 1e-9);
  const json j = json::parse(tree_transport_to_json(r));
  CHECK(j["k"] == 120);
  CHECK(j["order"].size() == 6);
  CHECK(j["states"].size() == 6);
  CHECK(j["moves"].size() == 5);
  CHECK(j["inequalities"]["holds"] == true);
  CHECK(j["inequalities"]["first_violation"].is_null());
  CHECK(std::abs(j["cost"].get<double>() - 1.0) <= 1e-9);

  const TreeTransportReport far = tree_transport_report(make_guvab(path_graph(5), 0, 4, 0.0, 0.0), 0);
  CHECK_FALSE(far.inequalities.holds);
  const json jf = json::parse(tree_transport_to_json(far));
  CHECK(jf["inequalities"]["first_violation"]["set"].is_string());

  const TreeTransportReport zero = tree_transport_report(make_guvab(path_graph(3), 1, 1, 0.2, 0.2), 7);
  CHECK(zero.cost == 0.0);
  CHECK(code_of([&] { tree_transport_report(g, -1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("sweep CSV") {
  SweepOptions opt;
  opt.n_max = 2;
  opt.grid = {0.0, 0.5, 0.25};
  opt.k_max = 60;
  const SweepSummary s = run_sweep(opt);
  const std::string csv = sweep_to_csv(s);
  CHECK(csv == sweep_to_csv(run_sweep(opt)));
  const auto rows = csv_rows(csv);
  REQUIRE(rows.size() == s.rows.size() + 1);
  CHECK(rows[0].size() == 20);
  CHECK(rows[0][0] == "graph");
  CHECK(rows[0][19] == "consistent");
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == 20);
  CHECK(csv.find("# skipped alpha>beta: (0.25;0) (0.5;0) (0.5;0.25)") != std::string::npos);
  CHECK(csv.find("# discrepancies: 0") != std::string::npos);
}

TEST_CASE("distribution CSV") {
  const Graph g = parse_graph("3 2\na b\nb c\n");
  const Distribution d = parse_distribution_csv("vertex,mass\na,0.25\nc,0.75\n", g);
  CHECK(d.values == std::vector<double>{0.25, 0.0, 0.75});
  const Distribution e = parse_distribution_csv("# comment\n1,1\n", g);
  CHECK(e.values == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(code_of([&] { parse_distribution_csv("a,0.5\na,0.5\n", g); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_distribution_csv("z,1\n", g); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_distribution_csv("a,abc\n", g); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_distribution_csv("a 1\n", g); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_distribution_csv("5,1\n", g); }) == ErrorCode::kParse);
}

TEST_CASE("run config") {
  const RunConfig c = parse_run_config(
      R"({"graph": "g.txt", "u": 0, "v": "x", "alpha": 0.25, "beta": 0.5, "k_max": 7,
          "tol_mass": 1e-8, "tol_gap": 1e-7})",
      "/data");
  CHECK(c.graph_path == "/data/g.txt");
  CHECK(c.u == "0");
  CHECK(c.v == "x");
  CHECK(c.alpha == 0.25);
  CHECK(c.beta == 0.5);
  CHECK(c.k_max == 7);
  CHECK(c.tol.mass == 1e-8);
  CHECK(c.tol.gap == 1e-7);

  const RunConfig abs = parse_run_config(
      R"({"graph": "/abs/g.txt", "u": 0, "v": 1, "alpha": 0, "beta": 0})", "/data");
  CHECK(abs.graph_path == "/abs/g.txt");
  CHECK(abs.k_max == 50);

  auto message = [](const std::string& text) {
    try {
      parse_run_config(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      return std::string(e.what());
    }
    FAIL("expected an error");
    return std::string();
  };
  CHECK(message(R"({"graph": "g", "u": 0, "v": 1, "alpha": 0, "beta": 0, "gamma": 1})")
            .find("gamma") != std::string::npos);
  CHECK(message(R"({"graph": "g", "u": 0, "v": 1, "alpha": 0})").find("beta") !=
        std::string::npos);
  CHECK(message(R"({"graph": "g", "u": 0, "v": 1, "alpha": "x", "beta": 0})").find("alpha") !=
        std::string::npos);
  CHECK(message(R"({"graph": "g", "u": 0, "v": 1, "alpha": 0, "beta": 0, "k_max": -1})")
            .find("k_max") != std::string::npos);
  CHECK(message(R"({"graph": 3, "u": 0, "v": 1, "alpha": 0, "beta": 0})").find("graph") !=
        std::string::npos);
  CHECK(message("[1, 2]").find("object") != std::string::npos);
  CHECK_FALSE(message("{not json").empty());
}

TEST_CASE("files") {
  CHECK(code_of([] { read_file("/nonexistent/walkdist/file"); }) == ErrorCode::kIo);
  CHECK(code_of([] { load_graph("/nonexistent/walkdist/file"); }) == ErrorCode::kIo);
  const auto path = std::filesystem::temp_directory_path() / "walkdist_io_test.txt";
  {
    std::ofstream out(path);
    out << format_graph(cycle_graph(5));
  }
  const Graph g = load_graph(path.string());
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(format_graph(g) == format_graph(cycle_graph(5)));
  std::filesystem::remove(path);
}
