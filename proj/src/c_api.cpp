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

#include "walkdist/walkdist.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>
#include <vector>

#include "walkdist/analysis.hpp"
#include "walkdist/error.hpp"
#include "walkdist/graph.hpp"
#include "walkdist/io.hpp"
#include "walkdist/sweep.hpp"
#include "walkdist/transport.hpp"
#include "walkdist/walks.hpp"

struct wd_graph {
  walkdist::Graph graph;
};

struct wd_guvab {
  walkdist::Guvab guvab;
};

namespace {

using walkdist::ErrorCode;

thread_local std::string last_error;

wd_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return WD_ERR_INVALID_ARGUMENT;
    case ErrorCode::kSelfLoop: return WD_ERR_SELF_LOOP;
    case ErrorCode::kDuplicateEdge: return WD_ERR_DUPLICATE_EDGE;
    case ErrorCode::kDisconnected: return WD_ERR_DISCONNECTED;
    case ErrorCode::kEmptyVertexSet: return WD_ERR_EMPTY_VERTEX_SET;
    case ErrorCode::kLimitExceeded: return WD_ERR_LIMIT_EXCEEDED;
    case ErrorCode::kLazinessOutOfRange: return WD_ERR_LAZINESS_OUT_OF_RANGE;
    case ErrorCode::kNotBipartite: return WD_ERR_NOT_BIPARTITE;
    case ErrorCode::kUnbalancedMass: return WD_ERR_UNBALANCED_MASS;
    case ErrorCode::kNotLipschitz: return WD_ERR_NOT_LIPSCHITZ;
    case ErrorCode::kTooLarge: return WD_ERR_TOO_LARGE;
    case ErrorCode::kNoLaterNeighbor: return WD_ERR_NO_LATER_NEIGHBOR;
    case ErrorCode::kBetaOne: return WD_ERR_BETA_ONE;
    case ErrorCode::kWrongCategory: return WD_ERR_WRONG_CATEGORY;
    case ErrorCode::kEventuallyConstant: return WD_ERR_EVENTUALLY_CONSTANT;
    case ErrorCode::kTooFewPoints: return WD_ERR_TOO_FEW_POINTS;
    case ErrorCode::kParse: return WD_ERR_PARSE;
    case ErrorCode::kIo: return WD_ERR_IO;
  }
  return WD_ERR_INTERNAL;
}

wd_status fail(wd_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
wd_status guarded(F&& body) {
  try {
    body();
    return WD_OK;
  } catch (const walkdist::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WD_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

walkdist::Tolerances tolerances(const wd_tolerances* tol) {
  walkdist::Tolerances t;
  if (tol) {
    t.mass = tol->mass;
    t.gap = tol->gap;
    t.strict = tol->strict;
  }
  return t;
}

void copy_field(char* dst, size_t cap, const std::string& src, const char* field) {
  if (src.size() >= cap) {
    throw walkdist::Error(ErrorCode::kInvalidArgument,
                          std::string("config: field '") + field + "' is too long");
  }
  std::memcpy(dst, src.c_str(), src.size() + 1);
}

#define WD_REQUIRE(cond, what)                                   \
  do {                                                           \
    if (!(cond)) return fail(WD_ERR_INVALID_ARGUMENT, what);     \
  } while (0)

}  // namespace

extern "C" {

const char* wd_last_error(void) { return last_error.c_str(); }

const char* wd_status_name(wd_status status) {
  switch (status) {
    case WD_OK: return "Ok";
    case WD_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= WD_ERR_INVALID_ARGUMENT && status <= WD_ERR_IO) {
    return walkdist::error_code_name(static_cast<ErrorCode>(status - 1));
  }
  return "Unknown";
}

void wd_string_free(char* s) { std::free(s); }

wd_tolerances wd_default_tolerances(void) {
  const walkdist::Tolerances t;
  return {t.mass, t.gap, t.strict};
}

wd_status wd_graph_create(int n, const int* edge_pairs, size_t edge_count,
                          wd_graph** out) {
  WD_REQUIRE(out, "out is NULL");
  WD_REQUIRE(edge_pairs || edge_count == 0, "edge_pairs is NULL");
  return guarded([&] {
    std::vector<walkdist::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
    }
    *out = new wd_graph{walkdist::build_graph(n, edges)};
  });
}

wd_status wd_graph_parse(const char* text, wd_graph** out) {
  WD_REQUIRE(text && out, "NULL argument");
  return guarded([&] { *out = new wd_graph{walkdist::parse_graph(text)}; });
}

wd_status wd_graph_load(const char* path, wd_graph** out) {
  WD_REQUIRE(path && out, "NULL argument");
  return guarded([&] { *out = new wd_graph{walkdist::load_graph(path)}; });
}

void wd_graph_destroy(wd_graph* g) { delete g; }

int wd_graph_vertex_count(const wd_graph* g) {
  return g ? g->graph.vertex_count() : 0;
}

int wd_graph_edge_count(const wd_graph* g) {
  return g ? g->graph.edge_count() : 0;
}

int wd_graph_find_vertex(const wd_graph* g, const char* name) {
  if (!g || !name) return -1;
  return g->graph.find_vertex(name);
}

wd_status wd_guvab_create(const wd_graph* g, int u, int v, double alpha,
                          double beta, wd_guvab** out) {
  WD_REQUIRE(g && out, "NULL argument");
  return guarded([&] {
    *out = new wd_guvab{walkdist::make_guvab(g->graph, u, v, alpha, beta)};
  });
}

void wd_guvab_destroy(wd_guvab* g) { delete g; }

wd_status wd_config_load(const char* path, wd_config* out) {
  WD_REQUIRE(path && out, "NULL argument");
  return guarded([&] {
    const auto base = std::filesystem::path(path).parent_path().string();
    const auto c = walkdist::parse_run_config(walkdist::read_file(path), base);
    wd_config result{};
    copy_field(result.graph_path, sizeof result.graph_path, c.graph_path, "graph");
    copy_field(result.u, sizeof result.u, c.u, "u");
    copy_field(result.v, sizeof result.v, c.v, "v");
    result.alpha = c.alpha;
    result.beta = c.beta;
    result.k_max = c.k_max;
    result.tol = {c.tol.mass, c.tol.gap, c.tol.strict};
    *out = result;
  });
}

wd_status wd_wasserstein(const wd_graph* g, const double* xi, size_t n,
                         double tol_mass, double* value, double* potential) {
  WD_REQUIRE(g && xi && value, "NULL argument");
  WD_REQUIRE(n == static_cast<size_t>(g->graph.vertex_count()),
             "xi length differs from the vertex count");
  return guarded([&] {
    walkdist::Distribution d{std::vector<double>(xi, xi + n),
                             walkdist::DistributionKind::kSigned};
    if (potential) {
      auto result = walkdist::TransportSolver(g->graph).solve(d, tol_mass);
      *value = result.value;
      std::copy(result.potential.ell.begin(), result.potential.ell.end(), potential);
    } else {
      *value = walkdist::TransportSolver(g->graph).value(d, tol_mass);
    }
  });
}

wd_status wd_distance(const wd_graph* g, const char* mu_csv, const char* nu_csv,
                      const wd_tolerances* tol, wd_format format, char** out) {
  WD_REQUIRE(g && mu_csv && nu_csv && out, "NULL argument");
  return guarded([&] {
    const auto t = tolerances(tol);
    const auto mu = walkdist::parse_distribution_csv(mu_csv, g->graph);
    const auto nu = walkdist::parse_distribution_csv(nu_csv, g->graph);
    walkdist::validate(mu, t.mass);
    walkdist::validate(nu, t.mass);
    const walkdist::Metric metric(g->graph);
    const auto r = walkdist::wasserstein_between(mu, nu, g->graph, metric, t.mass);
    std::string text;
    if (format == WD_FORMAT_JSON) {
      text = walkdist::transport_to_json(r);
    } else {
      text = walkdist::plan_to_csv(r.plan) + "\n" +
             walkdist::potential_to_csv(r.potential);
    }
    *out = copy_string(text);
  });
}

wd_status wd_wk_series(const wd_guvab* g, int k_max, const wd_tolerances* tol,
                       double* out) {
  WD_REQUIRE(g && out, "NULL argument");
  return guarded([&] {
    const auto series = walkdist::wk_series(g->guvab, k_max, tolerances(tol));
    for (const auto& p : series) out[p.k] = p.w;
  });
}

wd_status wd_classify(const wd_guvab* g, const wd_tolerances* tol,
                      char** out_json) {
  WD_REQUIRE(g && out_json, "NULL argument");
  return guarded([&] {
    *out_json = copy_string(
        walkdist::report_to_json(walkdist::classify(g->guvab, tolerances(tol))));
  });
}

wd_status wd_trace(const wd_guvab* g, int k_max, const wd_tolerances* tol,
                   wd_format format, char** out) {
  WD_REQUIRE(g && out, "NULL argument");
  return guarded([&] {
    const auto t = tolerances(tol);
    const auto report = walkdist::classify(g->guvab, t);
    const auto series = walkdist::wk_series(g->guvab, k_max, t);
    std::vector<walkdist::RateEstimate> rates;
    for (auto parity : {walkdist::Parity::kEven, walkdist::Parity::kOdd}) {
      const double limit = parity == walkdist::Parity::kEven ? report.limit_even
                                                             : report.limit_odd;
      try {
        rates.push_back(walkdist::fit_rate(series, limit, parity));
      } catch (const walkdist::Error& e) {
        if (e.code() != ErrorCode::kEventuallyConstant &&
            e.code() != ErrorCode::kTooFewPoints) {
          throw;
        }
      }
    }
    *out = copy_string(format == WD_FORMAT_JSON
                           ? walkdist::series_to_json(series, report, rates)
                           : walkdist::series_to_csv(series, report, rates));
  });
}

wd_status wd_tree_transport(const wd_guvab* g, int k, const wd_tolerances* tol,
                            char** out_json) {
  WD_REQUIRE(g && out_json, "NULL argument");
  return guarded([&] {
    *out_json = copy_string(walkdist::tree_transport_to_json(
        walkdist::tree_transport_report(g->guvab, k, tolerances(tol))));
  });
}

wd_status wd_sweep(int n_max, const double* grid, size_t grid_len, int k_max,
                   const wd_tolerances* tol, char** out_csv, int* discrepancies,
                   int* skipped_pairs) {
  WD_REQUIRE(out_csv, "out_csv is NULL");
  WD_REQUIRE(grid || grid_len == 0, "grid is NULL");
  return guarded([&] {
    walkdist::SweepOptions options;
    options.n_max = n_max;
    if (grid_len > 0) options.grid.assign(grid, grid + grid_len);
    options.k_max = k_max;
    options.tol = tolerances(tol);
    const auto summary = walkdist::run_sweep(options);
    *out_csv = copy_string(walkdist::sweep_to_csv(summary));
    if (discrepancies) *discrepancies = summary.discrepancies;
    if (skipped_pairs) *skipped_pairs = static_cast<int>(summary.skipped.size());
  });
}

}  // extern "C"
