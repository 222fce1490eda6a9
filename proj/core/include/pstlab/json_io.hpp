#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "pstlab/evolution.hpp"
#include "pstlab/graph.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/switching.hpp"

namespace pstlab {

// Graph format: {"m": int, "edges": [[i, j, w], ...]} with 0-based i < j and
// w > 0. Loops, duplicate edges, reversed (i > j) entries, and out-of-range
// indices are rejected.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Partition format: {"cells": [[...], ...], "residual": [...]}.
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// Block spec format: {"n": int, "blocks": [1.0 | 0.0 | p, ...]}.
nlohmann::json block_spec_to_json(const BlockSpec& s);
BlockSpec block_spec_from_json(const nlohmann::json& j);

// Schedule format: {"segments": [{"graph": <inline graph or file path>,
// "duration": real}, ...]}. String graph references are resolved against
// base_dir.
EvolutionSchedule schedule_from_json(const nlohmann::json& j,
                                     const std::filesystem::path& base_dir = {});

// {"eigenvalues": [...], "multiplicities": [...], "cluster_tol": ...},
// eigenvalues descending.
nlohmann::json spectral_report_json(const SpectralDecomposition& d);

// {"t": ..., "tol": ..., "pairs": [[j, k, p], ...], "unpaired": [...]} with
// 0-based indices. With one_based_labels, a "paper_labels" object mirrors the
// pairs and unpaired vertices as 1-based labels (the convention used in the
// state-transfer literature for graphs of at most 32 vertices).
nlohmann::json pst_report_json(const PstReport& r, bool one_based_labels = false);

nlohmann::json derivative_report_json(const DerivativeReport& r);

nlohmann::json census_report_json(const CensusReport& r);

// CSV with header "t,fidelity", one row per sample, 15 significant digits.
void write_trace_csv(const FidelityTrace& trace, std::ostream& out);

Graph load_graph_file(const std::filesystem::path& path);
nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace pstlab
