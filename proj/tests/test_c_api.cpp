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
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <thread>

#include "walkdist/walkdist.h"

using nlohmann::json;

namespace {

struct Graph {
  wd_graph* g = nullptr;
  ~Graph() { wd_graph_destroy(g); }
};

struct Guvab {
  wd_guvab* g = nullptr;
  ~Guvab() { wd_guvab_destroy(g); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  wd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(wd_status_name(WD_OK)) == "Ok");
  CHECK(std::string(wd_status_name(WD_ERR_DISCONNECTED)) == "Disconnected");
  CHECK(std::string(wd_status_name(WD_ERR_NO_LATER_NEIGHBOR)) == "NoLaterNeighbor");
  CHECK(std::string(wd_status_name(WD_ERR_IO)) == "Io");
  CHECK(std::string(wd_status_name(WD_ERR_INTERNAL)) == "Internal");
  CHECK(std::string(wd_status_name(static_cast<wd_status>(55))) == "Unknown");
  const wd_tolerances t = wd_default_tolerances();
  CHECK(t.mass == 1e-9);
  CHECK(t.gap == 1e-9);
  CHECK(t.strict == 1e-12);
}

TEST_CASE("graph handles and errors") {
  Graph c4;
  const int edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  REQUIRE(wd_graph_create(4, edges, 4, &c4.g) == WD_OK);
  CHECK(wd_graph_vertex_count(c4.g) == 4);
  CHECK(wd_graph_edge_count(c4.g) == 4);
  CHECK(wd_graph_find_vertex(c4.g, "2") == 2);
  CHECK(wd_graph_find_vertex(c4.g, "9") == -1);

  Graph bad;
  const int loop[] = {0, 0};
  CHECK(wd_graph_create(2, loop, 1, &bad.g) == WD_ERR_SELF_LOOP);
  CHECK(bad.g == nullptr);
  CHECK(std::strlen(wd_last_error()) > 0);
  const int split[] = {0, 1, 2, 3};
  CHECK(wd_graph_create(4, split, 2, &bad.g) == WD_ERR_DISCONNECTED);
  const int twice[] = {0, 1, 1, 0};
  CHECK(wd_graph_create(2, twice, 2, &bad.g) == WD_ERR_DUPLICATE_EDGE);
  CHECK(wd_graph_create(0, nullptr, 0, &bad.g) == WD_ERR_EMPTY_VERTEX_SET);
  CHECK(wd_graph_create(2, nullptr, 1, &bad.g) == WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_graph_create(2, edges, 1, nullptr) == WD_ERR_INVALID_ARGUMENT);
  CHECK(std::string(wd_last_error()).find("NULL") != std::string::npos);

  Graph named;
  REQUIRE(wd_graph_parse("3 2\nx y\ny z\n", &named.g) == WD_OK);
  CHECK(wd_graph_find_vertex(named.g, "z") == 2);
  CHECK(wd_graph_parse("3 x\n", &bad.g) == WD_ERR_PARSE);
  CHECK(wd_graph_load("/nonexistent/walkdist", &bad.g) == WD_ERR_IO);
  CHECK(wd_graph_parse(nullptr, &bad.g) == WD_ERR_INVALID_ARGUMENT);

  wd_graph_destroy(nullptr);
  wd_guvab_destroy(nullptr);
  wd_string_free(nullptr);
}

TEST_CASE("last error is per thread") {
  Graph bad;
  const int loop[] = {0, 0};
  REQUIRE(wd_graph_create(2, loop, 1, &bad.g) == WD_ERR_SELF_LOOP);
  const std::string mine = wd_last_error();
  std::string other;
  std::thread([&] { other = wd_last_error(); }).join();
  CHECK(other.empty());
  CHECK(std::string(wd_last_error()) == mine);
}

TEST_CASE("guvab operations") {
  Graph c4;
  const int edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  REQUIRE(wd_graph_create(4, edges, 4, &c4.g) == WD_OK);

  Guvab bad;
  CHECK(wd_guvab_create(c4.g, 0, 1, 0.5, 0.2, &bad.g) == WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_guvab_create(c4.g, 0, 7, 0.0, 0.2, &bad.g) == WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_guvab_create(c4.g, 0, 1, 0.0, 2.0, &bad.g) == WD_ERR_LAZINESS_OUT_OF_RANGE);

  Guvab half;
  REQUIRE(wd_guvab_create(c4.g, 0, 1, 0.0, 0.3, &half.g) == WD_OK);
  char* text = nullptr;
  REQUIRE(wd_classify(half.g, nullptr, &text) == WD_OK);
  const json rep = json::parse(take(text));
  CHECK(rep["category"] == "W_HALF");
  CHECK(rep["limit"].get<double>() == 0.5);

  double w[31];
  REQUIRE(wd_wk_series(half.g, 30, nullptr, w) == WD_OK);
  for (int k = 20; k <= 30; ++k)
    CHECK(std::abs(std::abs(w[k] - 0.5) - 0.5 * std::pow(0.4, k)) <= 1e-9);

  REQUIRE(wd_trace(half.g, 80, nullptr, WD_FORMAT_JSON, &text) == WD_OK);
  const json tr = json::parse(take(text));
  CHECK(tr["series"].size() == 81);
  REQUIRE(tr["rates"].size() == 2);
  CHECK(std::abs(tr["rates"][0]["lambda"].get<double>() - 0.4) <= 1e-3);

  REQUIRE(wd_trace(half.g, 3, nullptr, WD_FORMAT_CSV, &text) == WD_OK);
  CHECK(take(text).rfind("k,W_k,deviation\n0,1,0.5\n", 0) == 0);

  Guvab w1;
  REQUIRE(wd_guvab_create(c4.g, 0, 1, 0.0, 0.0, &w1.g) == WD_OK);
  REQUIRE(wd_tree_transport(w1.g, 50, nullptr, &text) == WD_OK);
  const json tt = json::parse(take(text));
  CHECK(tt["inequalities"]["holds"] == true);
  CHECK(std::abs(tt["cost"].get<double>() - 1.0) <= 1e-9);

  CHECK(wd_classify(nullptr, nullptr, &text) == WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_trace(half.g, 3, nullptr, WD_FORMAT_CSV, nullptr) == WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_wk_series(half.g, -1, nullptr, w) != WD_OK);
}

TEST_CASE("wasserstein and distance") {
  Graph p3;
  const int edges[] = {0, 1, 1, 2};
  REQUIRE(wd_graph_create(3, edges, 2, &p3.g) == WD_OK);
  const double xi[] = {1.0, 0.0, -1.0};
  double value = -1.0, pot[3];
  REQUIRE(wd_wasserstein(p3.g, xi, 3, 1e-9, &value, pot) == WD_OK);
  CHECK(value == doctest::Approx(2.0));
  CHECK(pot[0] - pot[2] == doctest::Approx(2.0));
  REQUIRE(wd_wasserstein(p3.g, xi, 3, 1e-9, &value, nullptr) == WD_OK);
  CHECK(value == doctest::Approx(2.0));
  const double unbalanced[] = {1.0, 0.0, 0.0};
  CHECK(wd_wasserstein(p3.g, unbalanced, 3, 1e-9, &value, nullptr) == WD_ERR_UNBALANCED_MASS);
  CHECK(wd_wasserstein(p3.g, xi, 2, 1e-9, &value, nullptr) == WD_ERR_INVALID_ARGUMENT);

  char* out = nullptr;
  REQUIRE(wd_distance(p3.g, "0,1\n", "vertex,mass\n2,1\n", nullptr, WD_FORMAT_JSON, &out) == WD_OK);
  const json j = json::parse(take(out));
  CHECK(j["value"].get<double>() == doctest::Approx(2.0));
  REQUIRE(wd_distance(p3.g, "0,1\n", "2,1\n", nullptr, WD_FORMAT_CSV, &out) == WD_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("source,target,mass\n", 0) == 0);
  CHECK(csv.find("\nvertex,ell\n") != std::string::npos);
  CHECK(wd_distance(p3.g, "0,0.5\n", "2,1\n", nullptr, WD_FORMAT_CSV, &out) ==
        WD_ERR_INVALID_ARGUMENT);
  CHECK(wd_distance(p3.g, "0,x\n", "2,1\n", nullptr, WD_FORMAT_CSV, &out) == WD_ERR_PARSE);
}

TEST_CASE("config and sweep") {
  const auto dir = std::filesystem::temp_directory_path() / "walkdist_c_api_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "g.txt") << "2 1\n0 1\n";
    std::ofstream(dir / "run.json")
        << R"({"graph": "g.txt", "u": 0, "v": 1, "alpha": 0, "beta": 0.25, "k_max": 9})";
    std::ofstream(dir / "bad.json") << R"({"graph": "g.txt", "u": 0, "v": 1, "alpha": 0})";
  }
  wd_config c;
  REQUIRE(wd_config_load((dir / "run.json").c_str(), &c) == WD_OK);
  CHECK(std::string(c.graph_path) == (dir / "g.txt").string());
  CHECK(std::string(c.u) == "0");
  CHECK(c.beta == 0.25);
  CHECK(c.k_max == 9);
  CHECK(wd_config_load((dir / "bad.json").c_str(), &c) == WD_ERR_PARSE);
  CHECK(std::string(wd_last_error()).find("beta") != std::string::npos);
  CHECK(wd_config_load((dir / "none.json").c_str(), &c) == WD_ERR_IO);
  std::filesystem::remove_all(dir);

  const double grid[] = {0.0, 0.5, 1.0};
  char* csv = nullptr;
  int disc = -1, skipped = -1;
  REQUIRE(wd_sweep(3, grid, 3, 100, nullptr, &csv, &disc, &skipped) == WD_OK);
  CHECK(disc == 0);
  CHECK(skipped == 3);
  CHECK(take(csv).rfind("graph,n,edges,", 0) == 0);
  CHECK(wd_sweep(7, grid, 3, 100, nullptr, &csv, &disc, &skipped) == WD_ERR_LIMIT_EXCEEDED);
}
