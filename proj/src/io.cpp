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

#include "walkdist/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "walkdist/error.hpp"

namespace walkdist {

using nlohmann::json;

namespace {

json real(double x) { return x; }

// nlohmann's float printer is not always shortest; numbers are written with
// format_real instead so JSON and CSV agree digit for digit.
void write_json(const json& j, int indent, int depth, std::string& out) {
  const std::string pad(indent * (depth + 1), ' ');
  const std::string close_pad(indent * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += std::string(",") + nl;
        first = false;
        out += pad + json(key).dump() + colon;
        write_json(value, indent, depth + 1, out);
      }
      out += nl + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += std::string(",") + nl;
        out += pad;
        write_json(j[i], indent, depth + 1, out);
      }
      out += nl + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string dump(const json& j, int indent = 2) {
  std::string out;
  write_json(j, indent, 0, out);
  return out;
}

json optional_real(const std::optional<double>& x) {
  return x ? real(*x) : json(nullptr);
}

json plan_json(const TransportPlan& plan) {
  json out = json::array();
  for (const auto& [edge, mass] : plan.moves) {
    out.push_back({{"source", edge.first}, {"target", edge.second}, {"mass", real(mass)}});
  }
  return out;
}

json values_json(const std::vector<double>& values) {
  json out = json::array();
  for (double x : values) out.push_back(real(x));
  return out;
}

json rate_object(const RateEstimate& rate) {
  return {{"parity", rate.parity == Parity::kEven ? "even" : "odd"},
          {"lambda", real(rate.lambda)},
          {"c", real(rate.c)},
          {"residual", real(rate.residual)},
          {"points", rate.points}};
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string plan_to_csv(const TransportPlan& plan) {
  std::string out = "source,target,mass\n";
  for (const auto& [edge, mass] : plan.moves) {
    out += std::to_string(edge.first) + "," + std::to_string(edge.second) + "," +
           format_real(mass) + "\n";
  }
  return out;
}

std::string potential_to_csv(const DualPotential& potential) {
  std::string out = "vertex,ell\n";
  for (size_t w = 0; w < potential.ell.size(); ++w) {
    out += std::to_string(w) + "," + format_real(potential.ell[w]) + "\n";
  }
  return out;
}

std::string report_to_json(const ClassificationReport& r) {
  json j;
  j["category"] = category_name(r.category);
  j["converges"] = r.converges;
  j["limit_even"] = real(r.limit_even);
  j["limit_odd"] = real(r.limit_odd);
  j["limit"] = optional_real(r.limit);
  j["constancy_predicted"] =
      r.constancy_predicted ? json(*r.constancy_predicted) : json(nullptr);
  j["constancy_reason"] =
      r.constancy_reason ? json(clause_name(*r.constancy_reason)) : json(nullptr);
  j["divergence_sum"] = optional_real(r.divergence_sum);
  j["gluvab"] = r.gluvab;
  return dump(j) + "\n";
}

std::string rate_to_json(const RateEstimate& rate) {
  return dump(rate_object(rate), 0) + "\n";
}

std::string series_to_csv(std::span<const SeriesPoint> series,
                          const ClassificationReport& report,
                          std::span<const RateEstimate> rates) {
  std::string out = "k,W_k,deviation\n";
  for (const auto& p : series) {
    const double limit = p.k % 2 == 0 ? report.limit_even : report.limit_odd;
    out += std::to_string(p.k) + "," + format_real(p.w) + "," +
           format_real(std::abs(p.w - limit)) + "\n";
  }
  if (!rates.empty()) {
    json footer = {{"rates", json::array()}};
    for (const auto& r : rates) footer["rates"].push_back(rate_object(r));
    out += "# " + dump(footer, 0) + "\n";
  }
  return out;
}

std::string series_to_json(std::span<const SeriesPoint> series,
                           const ClassificationReport& report,
                           std::span<const RateEstimate> rates) {
  json j;
  j["series"] = json::array();
  for (const auto& p : series) {
    const double limit = p.k % 2 == 0 ? report.limit_even : report.limit_odd;
    j["series"].push_back(
        {{"k", p.k}, {"W_k", real(p.w)}, {"deviation", real(std::abs(p.w - limit))}});
  }
  j["report"] = json::parse(report_to_json(report));
  j["rates"] = json::array();
  for (const auto& r : rates) j["rates"].push_back(rate_object(r));
  return dump(j) + "\n";
}

std::string transport_to_json(const TransportResult& result) {
  json j;
  j["value"] = real(result.value);
  j["plan"] = plan_json(result.plan);
  j["potential"] = values_json(result.potential.ell);
  return dump(j) + "\n";
}

std::string sweep_to_csv(const SweepSummary& summary) {
  auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
  auto opt_flag = [&](const std::optional<bool>& b) {
    return b ? flag(*b) : std::string();
  };
  auto opt_real = [](const std::optional<double>& x) {
    return x ? format_real(*x) : std::string();
  };
  std::string out =
      "graph,n,edges,u,v,alpha,beta,category,limit_even,limit_odd,"
      "simulated_even,simulated_odd,limits_ok,constancy_predicted,"
      "constancy_observed,constancy_ok,lambda_even,lambda_odd,rate_ok,"
      "consistent\n";
  for (const auto& r : summary.rows) {
    out += std::to_string(r.graph_index) + "," + std::to_string(r.n) + "," +
           r.edges + "," + std::to_string(r.u) + "," + std::to_string(r.v) +
           "," + format_real(r.alpha) + "," + format_real(r.beta) + "," +
           category_name(r.report.category) + "," +
           format_real(r.report.limit_even) + "," +
           format_real(r.report.limit_odd) + "," +
           format_real(r.simulated_even) + "," + format_real(r.simulated_odd) +
           "," + flag(r.limits_ok) + "," + opt_flag(r.constancy_predicted) +
           "," + opt_flag(r.constancy_observed) + "," + flag(r.constancy_ok) +
           "," + opt_real(r.lambda_even) + "," + opt_real(r.lambda_odd) + "," +
           flag(r.rate_ok) + "," + flag(r.consistent()) + "\n";
  }
  if (!summary.skipped.empty()) {
    out += "# skipped alpha>beta:";
    for (const auto& [a, b] : summary.skipped) {
      out += " (" + format_real(a) + ";" + format_real(b) + ")";
    }
    out += "\n";
  }
  out += "# discrepancies: " + std::to_string(summary.discrepancies) + "\n";
  return out;
}

TreeTransportReport tree_transport_report(const Guvab& g, int k,
                                          const Tolerances& tol) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  const Metric metric(g.graph);
  const auto tree = spanning_tree(g.graph, metric);
  const auto order = r_monotone_ordering(tree);
  TreeTransportReport out;
  out.k = k;
  out.xi = xi_k(g, k);
  out.trace = run_tree_transport(g.graph, tree, order, out.xi, tol.mass);
  out.inequalities =
      check_inequalities(g.graph, tree, order, out.xi, out.trace, tol.strict);
  out.cost = cost_of_plan(out.trace.plan, metric);
  out.half_l1 = half_l1(out.xi);
  out.wasserstein = TransportSolver(g.graph).value(out.xi, tol.mass);
  return out;
}

std::string tree_transport_to_json(const TreeTransportReport& r) {
  json j;
  j["k"] = r.k;
  j["xi"] = values_json(r.xi.values);
  j["order"] = r.trace.order;
  json states = json::array();
  for (const auto& s : r.trace.states) states.push_back(values_json(s.values));
  j["states"] = states;
  json moves = json::array();
  for (const auto& step : r.trace.moves) {
    json m = json::array();
    for (const auto& t : step) {
      m.push_back({{"source", t.source}, {"target", t.target}, {"mass", real(t.mass)}});
    }
    moves.push_back(m);
  }
  j["moves"] = moves;
  j["plan"] = plan_json(r.trace.plan);
  json ineq = {{"holds", r.inequalities.holds}, {"first_violation", nullptr}};
  if (r.inequalities.first_violation) {
    const auto& v = *r.inequalities.first_violation;
    ineq["first_violation"] = {{"set", v.set == InequalitySet::kI1 ? "I1" : "I2"},
                               {"step", v.step},
                               {"vertex", v.vertex},
                               {"other", v.other},
                               {"product", real(v.product)}};
  }
  j["inequalities"] = ineq;
  j["cost"] = real(r.cost);
  j["half_l1"] = real(r.half_l1);
  j["wasserstein"] = real(r.wasserstein);
  return dump(j) + "\n";
}

Distribution parse_distribution_csv(const std::string& text, const Graph& g) {
  Distribution d = Distribution::zero(g.vertex_count());
  d.kind = DistributionKind::kProbability;
  std::vector<bool> seen(g.vertex_count(), false);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected vertex,mass");
    }
    const std::string name = trim(line.substr(0, comma));
    const std::string mass_text = trim(line.substr(comma + 1));
    if (first && name == "vertex") {
      first = false;
      continue;
    }
    first = false;
    const Vertex w = g.find_vertex(name);
    if (w < 0) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": unknown vertex '" + name + "'");
    }
    if (seen[w]) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": vertex '" + name + "' listed twice");
    }
    char* end = nullptr;
    const double mass = std::strtod(mass_text.c_str(), &end);
    if (mass_text.empty() || *end != '\0' || !std::isfinite(mass)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": bad mass '" + mass_text + "'");
    }
    seen[w] = true;
    d.values[w] = mass;
  }
  return d;
}

RunConfig parse_run_config(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "config: expected an object");
  static const char* const kKeys[] = {"graph", "u",       "v",        "alpha",
                                      "beta",  "k_max",   "tol_mass", "tol_gap"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw Error(ErrorCode::kParse, "config: unknown field '" + key + "'");
    }
  }
  auto require = [&](const char* key) -> const json& {
    if (!j.contains(key)) {
      throw Error(ErrorCode::kParse, std::string("config: missing field '") + key + "'");
    }
    return j.at(key);
  };
  auto number = [&](const char* key) {
    const json& x = require(key);
    if (!x.is_number()) {
      throw Error(ErrorCode::kParse, std::string("config: field '") + key + "' must be a number");
    }
    return x.get<double>();
  };
  auto vertex = [&](const char* key) {
    const json& x = require(key);
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    if (x.is_string()) return x.get<std::string>();
    throw Error(ErrorCode::kParse,
                std::string("config: field '") + key + "' must be an integer or a label");
  };

  RunConfig c;
  const json& graph = require("graph");
  if (!graph.is_string()) throw Error(ErrorCode::kParse, "config: field 'graph' must be a path");
  std::filesystem::path path = graph.get<std::string>();
  if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
  c.graph_path = path.string();
  c.u = vertex("u");
  c.v = vertex("v");
  c.alpha = number("alpha");
  c.beta = number("beta");
  if (j.contains("k_max")) {
    if (!j["k_max"].is_number_integer() || j["k_max"].get<long long>() < 0) {
      throw Error(ErrorCode::kParse, "config: field 'k_max' must be a non-negative integer");
    }
    c.k_max = j["k_max"].get<int>();
  }
  if (j.contains("tol_mass")) c.tol.mass = number("tol_mass");
  if (j.contains("tol_gap")) c.tol.gap = number("tol_gap");
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace walkdist
