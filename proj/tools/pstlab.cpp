// pstlab: build spin-network graphs, run quantum-walk dynamics, and emit
// state-transfer reports.
//
// Exit codes: 0 success, 1 negative finding (no pairs / predicate false),
// 2 input or validation error, 3 numerical failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pstlab/evolution.hpp"
#include "pstlab/graph.hpp"
#include "pstlab/json_io.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/switching.hpp"

using nlohmann::json;
using namespace pstlab;

namespace {

struct NegativeFinding {};

// Accepts plain decimals and exact multiples of pi: "pi", "pi/2", "3pi/4",
// "0.5pi". Keeps transfer times like pi/2 free of user rounding.
double parse_time(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (s.empty()) throw std::invalid_argument("empty time expression");
  const std::size_t pos = s.find("pi");
  auto to_double = [](const std::string& part, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what);
    }
    if (used != part.size()) {
      throw std::invalid_argument(std::string("cannot parse ") + what);
    }
    return value;
  };
  if (pos == std::string::npos) {
    return to_double(s, "time value");
  }
  double coef = 1.0;
  const std::string head = s.substr(0, pos);
  if (head == "-") {
    coef = -1.0;
  } else if (!head.empty()) {
    coef = to_double(head, "pi coefficient");
  }
  double div = 1.0;
  const std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("expected '/' after pi");
    div = to_double(tail.substr(1), "pi divisor");
    if (div == 0.0) throw std::invalid_argument("division by zero in time expression");
  }
  return coef * std::numbers::pi / div;
}

std::vector<double> parse_blocks(const std::string& csv) {
  std::vector<double> blocks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double value = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("cannot parse block weight: " + item);
    }
    blocks.push_back(value);
  }
  if (blocks.empty()) throw std::invalid_argument("empty block list");
  return blocks;
}

// Length-n bitstrings over {0,1}, most significant bit first.
std::vector<std::uint32_t> parse_connection(const std::string& csv, int n) {
  std::vector<std::uint32_t> elements;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (static_cast<int>(item.size()) != n) {
      throw std::invalid_argument("connection element '" + item + "' must have exactly " +
                                  std::to_string(n) + " bits");
    }
    std::uint32_t value = 0;
    for (char c : item) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("connection element '" + item + "' must be binary");
      }
      value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    elements.push_back(value);
  }
  return elements;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << payload;
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

bool is_schedule_json(const json& j) { return j.is_object() && j.contains("segments"); }

Graph build_family(const std::string& family, int n, const std::string& blocks_csv) {
  if (family == "hypercube") return hypercube(n);
  if (family == "switched") return switched_hypercube(n);
  if (family == "partial") {
    std::vector<double> blocks = parse_blocks(blocks_csv);
    for (double b : blocks) {
      if (b != 0.0 && b != 1.0) {
        throw std::invalid_argument("partial cubes take block values 0 or 1 only");
      }
    }
    return build_block_cube(BlockSpec(n, std::move(blocks)));
  }
  if (family == "blend") {
    return build_block_cube(BlockSpec(n, parse_blocks(blocks_csv)));
  }
  throw std::invalid_argument("unknown family: " + family);
}

int log2_order(int m) {
  const int n = static_cast<int>(std::round(std::log2(static_cast<double>(m))));
  if (m < 2 || (1 << n) != m) {
    throw std::invalid_argument("vertex count must be a power of two for this command");
  }
  return n;
}

json derivative_pair_json(const Graph& g, int j, int k, double t0, int order, double h) {
  json entry{{"j", j}, {"k", k}};
  entry["analytic"] = fidelity_derivative_analytic(g, k, t0, order);
  if (order == 1 || order == 2) {
    entry["numeric"] = fidelity_derivative_numeric(g, j, k, t0, order, h);
  } else {
    entry["numeric"] = nullptr;
  }
  return entry;
}

json derivative_pair_json(const EvolutionSchedule& s, int j, int k, int order, double h) {
  json entry{{"j", j}, {"k", k}};
  entry["analytic"] = fidelity_derivative_analytic(s, k, order);
  if (order == 1 || order == 2) {
    entry["numeric"] = fidelity_derivative_numeric(s, j, k, order, h);
  } else {
    entry["numeric"] = nullptr;
  }
  return entry;
}

int run(int argc, char** argv) {
  CLI::App app{"spin-network state-transfer toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write the report to a file instead of stdout")
      ->capture_default_str();

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand("build", "Construct a graph and emit its JSON");
  std::string build_kind;
  build->add_option("kind", build_kind, "hypercube|switched|partial|blend|cubelike")
      ->required();
  int build_n = 0;
  build->add_option("--n", build_n, "Dimension")->required();
  std::string build_blocks;
  build->add_option("--blocks", build_blocks,
                    "Comma-separated block weights (partial: 0/1, blend: [0,1])");
  std::string build_connection;
  build->add_option("--connection", build_connection,
                    "Comma-separated length-n bitstrings (cubelike)");

  // ---- pst ------------------------------------------------------------
  auto* pst = app.add_subcommand("pst", "Detect perfect-state-transfer pairs");
  std::string pst_input;
  pst->add_option("input", pst_input, "Graph or schedule JSON file")->required();
  std::string pst_time;
  pst->add_option("--t", pst_time, "Evolution time (e.g. 1.2 or pi/2)");
  double pst_tol = 1e-6;
  pst->add_option("--tol", pst_tol, "Detection tolerance (pairs need p >= 1 - tol)");

  // ---- trace ----------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "Sample the fidelity curve of a vertex pair");
  std::string trace_input;
  trace->add_option("input", trace_input, "Graph JSON file")->required();
  int trace_j = 0;
  int trace_k = 0;
  trace->add_option("--j", trace_j, "Source vertex")->required();
  trace->add_option("--k", trace_k, "Target vertex")->required();
  std::string trace_time;
  trace->add_option("--t", trace_time, "End of the time grid")->required();
  std::string trace_step;
  trace->add_option("--step", trace_step, "Grid spacing (default t/64)");
  std::string trace_format = "csv";
  trace->add_option("--format", trace_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // ---- sensitivity ----------------------------------------------------
  auto* sens = app.add_subcommand(
      "sensitivity", "Readout-time derivatives on the protected pairs");
  std::string sens_family;
  sens->add_option("--family", sens_family, "hypercube|switched|partial|blend");
  int sens_n = 0;
  sens->add_option("--n", sens_n, "Dimension (family mode)");
  std::string sens_blocks;
  sens->add_option("--blocks", sens_blocks, "Block weights for partial/blend");
  std::string sens_schedule;
  sens->add_option("--schedule", sens_schedule, "Schedule JSON file instead of a family");
  int sens_order = 2;
  sens->add_option("--order", sens_order, "Derivative order");
  std::string sens_t0 = "pi/2";
  sens->add_option("--t0", sens_t0, "Transfer time (family mode)");
  double sens_step = 1e-3;
  sens->add_option("--step", sens_step, "Finite-difference step");

  // ---- spectral -------------------------------------------------------
  auto* spectral = app.add_subcommand("spectral", "Spectral predicates and reports");
  spectral->require_subcommand(1);
  double cluster_tol = 1e-8;
  spectral->add_option("--cluster-tol", cluster_tol, "Eigenvalue merge tolerance");
  double spectral_tol = 1e-8;
  spectral->add_option("--tol", spectral_tol, "Comparison tolerance");

  auto* sp_report = spectral->add_subcommand("report", "Eigenvalues and multiplicities");
  std::string sp_report_input;
  sp_report->add_option("input", sp_report_input)->required();

  auto* sp_cosp = spectral->add_subcommand("cospectral", "Compare two spectra");
  std::string sp_a;
  std::string sp_b;
  sp_cosp->add_option("a", sp_a)->required();
  sp_cosp->add_option("b", sp_b)->required();

  auto* sp_had = spectral->add_subcommand(
      "hadamard", "Standard Hadamard diagonalizability");
  std::string sp_had_input;
  sp_had->add_option("input", sp_had_input)->required();

  auto* sp_minpoly = spectral->add_subcommand("minpoly", "Minimal polynomial");
  std::string sp_minpoly_input;
  sp_minpoly->add_option("input", sp_minpoly_input)->required();

  auto* sp_support = spectral->add_subcommand("support", "Eigenvalue support of a vertex");
  std::string sp_support_input;
  sp_support->add_option("input", sp_support_input)->required();
  int sp_vertex = 0;
  sp_support->add_option("--vertex", sp_vertex)->required();
  double proj_tol = 1e-8;
  sp_support->add_option("--proj-tol", proj_tol, "Projection norm threshold");

  auto* sp_obstruction = spectral->add_subcommand(
      "obstruction", "Integer/irrational support obstruction");
  std::string sp_obstruction_input;
  sp_obstruction->add_option("input", sp_obstruction_input)->required();
  int sp_obstruction_vertex = 0;
  sp_obstruction->add_option("--vertex", sp_obstruction_vertex)->required();
  double int_tol = 1e-6;
  sp_obstruction->add_option("--int-tol", int_tol, "Integer detection tolerance");

  // ---- census ---------------------------------------------------------
  auto* census = app.add_subcommand("census", "PST pair counts across a family at pi/2");
  std::string census_family;
  census->add_option("--family", census_family, "hypercube|switched|partial-all|blend")
      ->required();
  int census_n = 0;
  census->add_option("--n", census_n, "Dimension")->required();
  std::string census_blocks;
  census->add_option("--blocks", census_blocks, "Blend weights (blend family)");
  double census_tol = 1e-6;
  census->add_option("--tol", census_tol, "Detection tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    Graph g = [&] {
      if (build_kind == "cubelike") {
        return cubelike(ConnectionSet(build_n, parse_connection(build_connection, build_n)));
      }
      return build_family(build_kind, build_n, build_blocks);
    }();
    emit_json(graph_to_json(g), out_path);
    return 0;
  }

  if (pst->parsed()) {
    const json input = load_json_file(pst_input);
    PstReport report;
    int order = 0;
    if (is_schedule_json(input)) {
      const EvolutionSchedule schedule =
          schedule_from_json(input, std::filesystem::path(pst_input).parent_path());
      if (!pst_time.empty()) {
        const double t = parse_time(pst_time);
        if (std::abs(t - schedule.total_duration()) > 1e-9) {
          throw std::invalid_argument("--t disagrees with the schedule's total duration");
        }
      }
      report = find_pst_pairs(schedule, pst_tol);
      order = schedule.order();
    } else {
      if (pst_time.empty()) {
        throw std::invalid_argument("--t is required for graph input");
      }
      const Graph g = graph_from_json(input);
      report = find_pst_pairs(g, parse_time(pst_time), pst_tol);
      order = g.order();
    }
    emit_json(pst_report_json(report, order <= 32), out_path);
    if (report.pairs.empty()) throw NegativeFinding{};
    return 0;
  }

  if (trace->parsed()) {
    const Graph g = load_graph_file(trace_input);
    const double t_end = parse_time(trace_time);
    if (!(t_end > 0.0)) throw std::invalid_argument("--t must be positive");
    const double step = trace_step.empty() ? t_end / 64.0 : parse_time(trace_step);
    if (!(step > 0.0)) throw std::invalid_argument("--step must be positive");
    std::vector<double> times;
    for (double t = 0.0; t <= t_end + 1e-12; t += step) times.push_back(t);
    const FidelityTrace ft = fidelity_trace(g, trace_j, trace_k, times);
    if (trace_format == "csv") {
      std::ostringstream csv;
      write_trace_csv(ft, csv);
      emit(csv.str(), out_path);
    } else {
      json samples = json::array();
      for (const auto& [t, p] : ft.samples) samples.push_back(json::array({t, p}));
      emit_json(json{{"source", ft.source}, {"target", ft.target}, {"samples", samples}},
                out_path);
    }
    return 0;
  }

  if (sens->parsed()) {
    json result{{"order", sens_order}, {"step", sens_step}};
    json pairs = json::array();
    if (!sens_schedule.empty()) {
      const EvolutionSchedule schedule = schedule_from_json(
          load_json_file(sens_schedule), std::filesystem::path(sens_schedule).parent_path());
      const int n = log2_order(schedule.order());
      result["t0"] = schedule.total_duration();
      result["input"] = "schedule";
      for (const auto& [j, k] : expected_s_pairs(n)) {
        pairs.push_back(derivative_pair_json(schedule, j, k, sens_order, sens_step));
      }
    } else {
      if (sens_family.empty()) {
        throw std::invalid_argument("either --family or --schedule is required");
      }
      const Graph g = build_family(sens_family, sens_n, sens_blocks);
      const double t0 = parse_time(sens_t0);
      result["t0"] = t0;
      result["family"] = sens_family;
      result["n"] = sens_n;
      for (const auto& [j, k] : expected_s_pairs(sens_n)) {
        pairs.push_back(derivative_pair_json(g, j, k, t0, sens_order, sens_step));
      }
    }
    result["pairs"] = std::move(pairs);
    emit_json(result, out_path);
    return 0;
  }

  if (spectral->parsed()) {
    if (sp_report->parsed()) {
      emit_json(spectral_report_json(eigendecompose(load_graph_file(sp_report_input),
                                                    cluster_tol)),
                out_path);
      return 0;
    }
    if (sp_cosp->parsed()) {
      const bool same =
          are_cospectral(load_graph_file(sp_a), load_graph_file(sp_b), spectral_tol);
      emit_json(json{{"cospectral", same}}, out_path);
      if (!same) throw NegativeFinding{};
      return 0;
    }
    if (sp_had->parsed()) {
      const bool diagonalizable =
          is_standard_hadamard_diagonalizable(load_graph_file(sp_had_input), spectral_tol);
      emit_json(json{{"standard_hadamard_diagonalizable", diagonalizable}}, out_path);
      if (!diagonalizable) throw NegativeFinding{};
      return 0;
    }
    if (sp_minpoly->parsed()) {
      const std::vector<double> coeff =
          minimal_polynomial(load_graph_file(sp_minpoly_input), cluster_tol);
      emit_json(json{{"coefficients_ascending", coeff},
                     {"degree", coeff.size() - 1}},
                out_path);
      return 0;
    }
    if (sp_support->parsed()) {
      const std::vector<double> support =
          eigenvalue_support(load_graph_file(sp_support_input), sp_vertex, proj_tol);
      emit_json(json{{"vertex", sp_vertex}, {"support", support}}, out_path);
      return 0;
    }
    if (sp_obstruction->parsed()) {
      const ObstructionVerdict verdict = pst_obstruction_check(
          load_graph_file(sp_obstruction_input), sp_obstruction_vertex, int_tol);
      emit_json(json{{"vertex", sp_obstruction_vertex},
                     {"verdict", verdict == ObstructionVerdict::obstructed
                                     ? "obstructed"
                                     : "no_obstruction_found"}},
                out_path);
      return 0;
    }
  }

  if (census->parsed()) {
    CensusFamily family;
    if (census_family == "hypercube") {
      family = CensusFamily::hypercube;
    } else if (census_family == "switched") {
      family = CensusFamily::switched;
    } else if (census_family == "partial-all") {
      family = CensusFamily::partial_all;
    } else if (census_family == "blend") {
      family = CensusFamily::blend;
    } else {
      throw std::invalid_argument("unknown census family: " + census_family);
    }
    std::vector<double> blocks;
    if (family == CensusFamily::blend) {
      blocks = parse_blocks(census_blocks);
    }
    emit_json(census_report_json(pst_census(family, census_n, blocks, census_tol)),
              out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NegativeFinding&) {
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
}
