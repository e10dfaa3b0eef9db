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

// walkdist command-line front end. Exit codes: 0 ok, 2 user error,
// 3 theorem discrepancy, 4 algorithm precondition failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkdist/walkdist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitPrecondition = 4;

struct CliError {
  int code;
  std::string message;
};

int exit_code(wd_status s) {
  switch (s) {
    case WD_OK: return kExitOk;
    case WD_ERR_NO_LATER_NEIGHBOR:
    case WD_ERR_NOT_BIPARTITE:
      return kExitPrecondition;
    case WD_ERR_NOT_LIPSCHITZ:
      return kExitDiscrepancy;
    case WD_ERR_INTERNAL:
      return 1;
    default:
      return kExitUser;
  }
}

void check(wd_status s, const std::string& context = "") {
  if (s == WD_OK) return;
  std::string message = std::string(wd_status_name(s)) + ": " + wd_last_error();
  if (!context.empty()) message = context + ": " + message;
  throw CliError{exit_code(s), message};
}

struct GraphDeleter {
  void operator()(wd_graph* g) const { wd_graph_destroy(g); }
};
struct GuvabDeleter {
  void operator()(wd_guvab* g) const { wd_guvab_destroy(g); }
};
struct StringDeleter {
  void operator()(char* s) const { wd_string_free(s); }
};
using GraphPtr = std::unique_ptr<wd_graph, GraphDeleter>;
using GuvabPtr = std::unique_ptr<wd_guvab, GuvabDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string config;
  std::string graph;
  std::string u;
  std::string v;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<int> k_max;
  std::optional<int> k;
  std::string out;
  std::string format = "csv";
  std::optional<double> tol_mass;
  std::optional<double> tol_gap;
  unsigned seed = 0;
  std::string mu;
  std::string nu;
  int n_max = 3;
  std::vector<double> grid = {0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0};
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_option("--tol-mass", o.tol_mass, "Mass tolerance");
  cmd->add_option("--tol-gap", o.tol_gap, "Duality gap / equality tolerance");
  cmd->add_option("--seed", o.seed, "Random seed (no randomized paths use it)");
}

void add_guvab(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration");
  cmd->add_option("--graph", o.graph, "Graph file");
  cmd->add_option("--u", o.u, "Start vertex of the alpha walk");
  cmd->add_option("--v", o.v, "Start vertex of the beta walk");
  cmd->add_option("--alpha", o.alpha, "Laziness of the walk from u");
  cmd->add_option("--beta", o.beta, "Laziness of the walk from v");
  cmd->add_option("--kmax", o.k_max, "Largest step index");
  add_common(cmd, o);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

struct Resolved {
  GraphPtr graph;
  GuvabPtr guvab;
  int k_max = 50;
  wd_tolerances tol = wd_default_tolerances();
};

int resolve_vertex(const wd_graph* g, const std::string& name, const char* field) {
  if (name.empty()) throw CliError{kExitUser, std::string("missing --") + field};
  const int w = wd_graph_find_vertex(g, name.c_str());
  if (w < 0) {
    throw CliError{kExitUser, std::string(field) + ": unknown vertex '" + name + "'"};
  }
  return w;
}

wd_tolerances tolerances(const Options& o, wd_tolerances base) {
  if (o.tol_mass) base.mass = *o.tol_mass;
  if (o.tol_gap) base.gap = *o.tol_gap;
  return base;
}

Resolved resolve(const Options& o) {
  Resolved r;
  std::string graph_path = o.graph, u = o.u, v = o.v;
  std::optional<double> alpha = o.alpha, beta = o.beta;
  if (!o.config.empty()) {
    wd_config c;
    check(wd_config_load(o.config.c_str(), &c), "config");
    if (graph_path.empty()) graph_path = c.graph_path;
    if (u.empty()) u = c.u;
    if (v.empty()) v = c.v;
    if (!alpha) alpha = c.alpha;
    if (!beta) beta = c.beta;
    r.k_max = c.k_max;
    r.tol = c.tol;
  }
  if (o.k_max) r.k_max = *o.k_max;
  if (r.k_max < 0) throw CliError{kExitUser, "kmax: must be >= 0"};
  r.tol = tolerances(o, r.tol);
  if (graph_path.empty()) throw CliError{kExitUser, "missing --graph"};
  if (!alpha) throw CliError{kExitUser, "missing --alpha"};
  if (!beta) throw CliError{kExitUser, "missing --beta"};
  wd_graph* g = nullptr;
  check(wd_graph_load(graph_path.c_str(), &g), "graph");
  r.graph.reset(g);
  const int iu = resolve_vertex(g, u, "u");
  const int iv = resolve_vertex(g, v, "v");
  wd_guvab* guvab = nullptr;
  check(wd_guvab_create(g, iu, iv, *alpha, *beta, &guvab), "guvab");
  r.guvab.reset(guvab);
  return r;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw CliError{kExitUser, "out: cannot write '" + o.out + "'"};
}

std::string read_text(const std::string& path, const char* field) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitUser, std::string(field) + ": cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

wd_format format_of(const Options& o) {
  return o.format == "json" ? WD_FORMAT_JSON : WD_FORMAT_CSV;
}

int cmd_classify(const Options& o) {
  auto r = resolve(o);
  char* out = nullptr;
  check(wd_classify(r.guvab.get(), &r.tol, &out));
  StringPtr text(out);
  emit(o, text.get());
  return kExitOk;
}

int cmd_trace(const Options& o) {
  auto r = resolve(o);
  char* out = nullptr;
  check(wd_trace(r.guvab.get(), r.k_max, &r.tol, format_of(o), &out));
  StringPtr text(out);
  emit(o, text.get());
  return kExitOk;
}

int cmd_tree_transport(const Options& o) {
  auto r = resolve(o);
  char* out = nullptr;
  check(wd_tree_transport(r.guvab.get(), o.k.value_or(r.k_max), &r.tol, &out));
  StringPtr text(out);
  emit(o, text.get());
  return kExitOk;
}

int cmd_distance(const Options& o) {
  if (o.graph.empty()) throw CliError{kExitUser, "missing --graph"};
  if (o.mu.empty() || o.nu.empty()) throw CliError{kExitUser, "missing --mu or --nu"};
  wd_graph* g = nullptr;
  check(wd_graph_load(o.graph.c_str(), &g), "graph");
  GraphPtr graph(g);
  const auto tol = tolerances(o, wd_default_tolerances());
  char* out = nullptr;
  check(wd_distance(g, read_text(o.mu, "mu").c_str(), read_text(o.nu, "nu").c_str(),
                    &tol, format_of(o), &out));
  StringPtr text(out);
  emit(o, text.get());
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  const auto tol = tolerances(o, wd_default_tolerances());
  char* out = nullptr;
  int discrepancies = 0, skipped = 0;
  check(wd_sweep(o.n_max, o.grid.data(), o.grid.size(), o.k_max.value_or(400),
                 &tol, &out, &discrepancies, &skipped));
  StringPtr text(out);
  emit(o, text.get());
  std::fprintf(stderr, "sweep: %d discrepancies, %d alpha>beta pairs skipped\n",
               discrepancies, skipped);
  return discrepancies == 0 ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wasserstein distance between lazy random walks on graphs"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Closed-form category and limits");
  add_guvab(classify, o);

  auto* trace = app.add_subcommand("trace", "W_k series with fitted rates");
  add_guvab(trace, o);
  add_format(trace, o);

  auto* tree = app.add_subcommand("tree-transport", "Tree-based transport of xi_k");
  add_guvab(tree, o);
  tree->add_option("--k", o.k, "Step index (default: kmax)");

  auto* distance = app.add_subcommand("distance", "Wasserstein distance of two distributions");
  distance->add_option("--graph", o.graph, "Graph file")->required();
  distance->add_option("--mu", o.mu, "CSV vertex,mass")->required();
  distance->add_option("--nu", o.nu, "CSV vertex,mass")->required();
  add_common(distance, o);
  add_format(distance, o);

  auto* sweep = app.add_subcommand("sweep", "Exhaustive consistency check");
  sweep->add_option("--nmax", o.n_max, "Largest vertex count (at most 6)");
  sweep->add_option("--grid", o.grid, "Laziness grid")->delimiter(',');
  sweep->add_option("--kmax", o.k_max, "Simulation horizon (default 400)");
  add_common(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*trace) return cmd_trace(o);
    if (*tree) return cmd_tree_transport(o);
    if (*distance) return cmd_distance(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  }
  return kExitUser;
}
