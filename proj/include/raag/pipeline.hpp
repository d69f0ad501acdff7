// Copyright 2026 The raagscan Authors
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

// Search for graphs G whose Out(A_G) is not a virtual duality group.
//
// Each graph passes through, in order: no transvections, every support
// graph a forest, build Theta, and a check of the flag complex of Theta for
// maximal simplices of different dimensions (and optionally for being
// disconnected in positive dimension). The first failed gate ends the run.

#ifndef RAAG_PIPELINE_HPP_
#define RAAG_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raag/cohen_macaulay.hpp"
#include "raag/graph6.hpp"
#include "raag/pso.hpp"

namespace raag {

inline constexpr const char* kReportSchema = "raagscan.report/1";
inline constexpr const char* kSummarySchema = "raagscan.summary/1";

enum class Stage { kTransvectionGate, kForestGate, kThetaBuilt, kObstructionFound, kCleanPass };
std::string to_string(Stage s);

enum class Obstruction { kNonPure, kDisconnectedPositiveDim };
std::string to_string(Obstruction o);

struct ObstructionSet {
  bool non_pure = true;
  bool disconnected = false;
  bool empty() const { return !non_pure && !disconnected; }
};

/// Parses a comma-separated list of "nonpure" and "disconnected".
ObstructionSet parse_obstruction_set(const std::string& text);

struct SeedInfo {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
};

struct StageTiming {
  Stage stage;
  double seconds = 0;
};

struct ScanReport {
  /// The graph in canonical labelling; every witness refers to it.
  GraphCode graph_code;
  int n = 0;
  int edge_count = 0;
  Stage stage_reached = Stage::kTransvectionGate;
  /// Every stage entered, in order.
  std::vector<Stage> stages;
  std::optional<Obstruction> obstruction;
  std::optional<std::pair<VertexId, VertexId>> transvection_witness;
  std::optional<VertexId> cycle_vertex;
  std::vector<VertexSet> cycle_components;
  std::optional<GraphCode> theta_code;
  std::vector<PartialConjugation> theta_generators;
  /// Facet of the flag complex of Theta below its dimension.
  std::optional<Simplex> obstruction_facet;
  int theta_dimension = -1;
  /// Full Cohen-Macaulay verdict on the flag complex of Theta, for finds.
  std::optional<CmVerdict> theta_cm;
  std::vector<StageTiming> timing;
  std::optional<SeedInfo> seed_info;
};

/// Runs the gates on the canonical relabelling of g.
ScanReport run_pipeline(const SimpleGraph& g, const ObstructionSet& obstructions = {});

struct JsonOptions {
  bool timing = false;
};

nlohmann::json to_json(const ScanReport& r, const JsonOptions& opts = {});

struct StageCounts {
  std::map<Stage, std::uint64_t> by_stage;
  std::uint64_t total = 0;
  void add(const ScanReport& r);
};

struct SearchConfig {
  int n = 9;
  double p_min = 0.4;
  double p_max = 0.4;
  std::uint64_t sample_count = 1;
  std::uint64_t master_seed = 1;
  ObstructionSet obstructions;
  int jobs = 1;
};

/// Throws Error unless 1 <= n <= kCanonicalMaxOrder, 0 <= p_min <= p_max <= 1
/// and sample_count >= 1.
void validate(const SearchConfig& cfg);

/// Edge probability for sample i: p_min when the range is degenerate,
/// otherwise the midpoint of the i-th of sample_count equal slices.
double sample_probability(const SearchConfig& cfg, std::uint64_t index);

struct Find {
  GraphCode graph_code;
  std::optional<GraphCode> theta_code;
  Obstruction obstruction;
  std::uint64_t hits = 0;
  std::uint64_t first_index = 0;
};

struct SearchSummary {
  StageCounts counts;
  /// Distinct isomorphism classes among ObstructionFound reports.
  std::vector<Find> finds;
  nlohmann::json to_json(const SearchConfig& cfg) const;
};

using ReportSink = std::function<void(const ScanReport&)>;

/// Reports reach the sink in sample-index order whatever cfg.jobs is.
SearchSummary search_random(const SearchConfig& cfg, const ReportSink& sink = {});

struct ScanConfig {
  ObstructionSet obstructions;
  int jobs = 1;
};

struct ScanError {
  std::size_t line = 0;
  std::string message;
};

struct ScanSummary {
  std::map<int, StageCounts> by_order;
  std::vector<Find> finds;
  std::vector<ScanError> errors;
  std::uint64_t total() const;
  nlohmann::json to_json() const;
};

/// One graph6 code per line; blank lines are skipped. Malformed lines are
/// recorded and skipped.
ScanSummary scan_graph6_stream(std::istream& in, const ScanConfig& cfg,
                               const ReportSink& sink = {});

/// Every isomorphism class with min_order <= n <= max_order.
ScanSummary scan_enumeration(int min_order, int max_order, const ScanConfig& cfg,
                             const ReportSink& sink = {});

struct FixtureCheck {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  bool passed() const;
};

/// Runs the five fixture groups against the files in dir. Throws Error
/// naming every missing file.
FixtureReport verify_fixtures(const std::string& dir);

/// File names verify_fixtures expects.
std::vector<std::string> fixture_files();

/// Reads an edge-list file; throws Error or ParseError.
SimpleGraph read_edge_list_file(const std::string& path);

}  // namespace raag

#endif  // RAAG_PIPELINE_HPP_
