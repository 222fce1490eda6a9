#include "pstlab/json_io.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace pstlab {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

double require_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  const Eigen::MatrixXd& a = g.adjacency();
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (a(i, j) != 0.0) {
        edges.push_back(json::array({i, j, a(i, j)}));
      }
    }
  }
  return json{{"m", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON must be an object with \"m\" and \"edges\"");
  }
  const int m = require_int(j.at("m"), "\"m\"");
  if (m < 1) {
    throw std::invalid_argument("\"m\" must be a positive vertex count");
  }
  if (static_cast<std::size_t>(m) > vertex_cap()) {
    throw std::invalid_argument("graph order exceeds the vertex cap");
  }
  if (!j.at("edges").is_array()) {
    throw std::invalid_argument("\"edges\" must be an array");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  std::set<std::pair<int, int>> seen;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) {
      throw std::invalid_argument("each edge must be [i, j, w]");
    }
    const int i = require_int(e.at(0), "edge endpoint");
    const int k = require_int(e.at(1), "edge endpoint");
    const double w = require_number(e.at(2), "edge weight");
    if (i < 0 || i >= m || k < 0 || k >= m) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == k) {
      throw std::invalid_argument("loops are not allowed");
    }
    if (i > k) {
      throw std::invalid_argument("edges must be listed with i < j");
    }
    if (!(w > 0.0)) {
      throw std::invalid_argument("edge weights must be positive");
    }
    if (!seen.insert({i, k}).second) {
      throw std::invalid_argument("duplicate edge");
    }
    a(i, k) = w;
    a(k, i) = w;
  }
  return Graph(std::move(a));
}

json partition_to_json(const Partition& p) {
  return json{{"cells", p.cells}, {"residual", p.residual}};
}

Partition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.contains("residual")) {
    throw std::invalid_argument(
        "partition JSON must be an object with \"cells\" and \"residual\"");
  }
  Partition p;
  for (const json& cell : j.at("cells")) {
    std::vector<int> vs;
    for (const json& v : cell) vs.push_back(require_int(v, "cell vertex"));
    p.cells.push_back(std::move(vs));
  }
  for (const json& v : j.at("residual")) {
    p.residual.push_back(require_int(v, "residual vertex"));
  }
  return p;
}

json block_spec_to_json(const BlockSpec& s) {
  return json{{"n", s.n}, {"blocks", s.blocks}};
}

BlockSpec block_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks")) {
    throw std::invalid_argument("block spec JSON must be an object with \"n\" and \"blocks\"");
  }
  std::vector<double> blocks;
  for (const json& b : j.at("blocks")) {
    blocks.push_back(require_number(b, "block weight"));
  }
  return BlockSpec(require_int(j.at("n"), "\"n\""), std::move(blocks));
}

EvolutionSchedule schedule_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("segments") || !j.at("segments").is_array()) {
    throw std::invalid_argument("schedule JSON must be an object with a \"segments\" array");
  }
  std::vector<EvolutionSchedule::Segment> segments;
  for (const json& seg : j.at("segments")) {
    if (!seg.is_object() || !seg.contains("graph") || !seg.contains("duration")) {
      throw std::invalid_argument("each segment needs \"graph\" and \"duration\"");
    }
    const json& gref = seg.at("graph");
    if (gref.is_string()) {
      const std::filesystem::path ref = gref.get<std::string>();
      segments.push_back({load_graph_file(ref.is_absolute() ? ref : base_dir / ref),
                          require_number(seg.at("duration"), "duration")});
    } else {
      segments.push_back(
          {graph_from_json(gref), require_number(seg.at("duration"), "duration")});
    }
  }
  return EvolutionSchedule(std::move(segments));
}

json spectral_report_json(const SpectralDecomposition& d) {
  return json{{"eigenvalues", d.distinct_eigenvalues()},
              {"multiplicities", d.multiplicities()},
              {"cluster_tol", d.cluster_tolerance()}};
}

json pst_report_json(const PstReport& r, bool one_based_labels) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json::array({p.j, p.k, p.fidelity}));
  }
  json out{{"t", r.time},
           {"tol", r.tolerance},
           {"pairs", std::move(pairs)},
           {"unpaired", r.unpaired}};
  if (one_based_labels) {
    json lp = json::array();
    for (const auto& p : r.pairs) {
      lp.push_back(json::array({p.j + 1, p.k + 1}));
    }
    json lu = json::array();
    for (int v : r.unpaired) lu.push_back(v + 1);
    out["paper_labels"] = json{{"pairs", std::move(lp)}, {"unpaired", std::move(lu)}};
  }
  return out;
}

json derivative_report_json(const DerivativeReport& r) {
  json values = json::object();
  for (const auto& [order, value] : r.values) {
    values[std::to_string(order)] = value;
  }
  return json{{"j", r.j}, {"k", r.k}, {"t0", r.t0}, {"values", std::move(values)}};
}

json census_report_json(const CensusReport& r) {
  static const char* family_names[] = {"hypercube", "switched", "partial-all", "blend"};
  json instances = json::array();
  for (const auto& inst : r.instances) {
    instances.push_back(json{{"blocks", inst.blocks},
                             {"pair_count", inst.pair_count},
                             {"paired_vertices", inst.paired_vertices},
                             {"proper_partial", inst.proper_partial},
                             {"matches_protected_set", inst.matches_protected_set}});
  }
  return json{{"family", family_names[static_cast<int>(r.family)]},
              {"n", r.n},
              {"t", r.time},
              {"tol", r.tolerance},
              {"instances", std::move(instances)},
              {"flagged_instances", r.flagged_instances}};
}

void write_trace_csv(const FidelityTrace& trace, std::ostream& out) {
  out << "t,fidelity\n";
  char line[80];
  for (const auto& [t, p] : trace.samples) {
    std::snprintf(line, sizeof(line), "%.15g,%.15g\n", t, p);
    out << line;
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

Graph load_graph_file(const std::filesystem::path& path) {
  return graph_from_json(load_json_file(path));
}

}  // namespace pstlab
