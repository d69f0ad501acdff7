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

#include "raag/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <istream>
#include <sstream>

#include "raag/canonical.hpp"
#include "raag/complex.hpp"
#include "raag/raag_props.hpp"
#include "raag/random.hpp"

namespace raag {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::kTransvectionGate:
      return "TransvectionGate";
    case Stage::kForestGate:
      return "ForestGate";
    case Stage::kThetaBuilt:
      return "ThetaBuilt";
    case Stage::kObstructionFound:
      return "ObstructionFound";
    case Stage::kCleanPass:
      return "CleanPass";
  }
  return "Unknown";
}

std::string to_string(Obstruction o) {
  return o == Obstruction::kNonPure ? "NonPure" : "DisconnectedPositiveDim";
}

ObstructionSet parse_obstruction_set(const std::string& text) {
  ObstructionSet s{false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "nonpure") {
      s.non_pure = true;
    } else if (item == "disconnected") {
      s.disconnected = true;
    } else if (!item.empty()) {
      throw Error("unknown obstruction '" + item + "' (expected nonpure or disconnected)");
    }
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  explicit StageTimer(ScanReport& r) : report_(r) {}
  void enter(Stage s) {
    close();
    report_.stages.push_back(s);
    current_ = s;
    start_ = Clock::now();
    open_ = true;
  }
  void close() {
    if (!open_) return;
    report_.timing.push_back(
        {current_, std::chrono::duration<double>(Clock::now() - start_).count()});
    open_ = false;
  }

 private:
  ScanReport& report_;
  Stage current_ = Stage::kTransvectionGate;
  Clock::time_point start_;
  bool open_ = false;
};

}  // namespace

ScanReport run_pipeline(const SimpleGraph& g, const ObstructionSet& obstructions) {
  if (g.order() == 0) throw Error("run_pipeline: empty graph");
  ScanReport r;
  StageTimer timer(r);
  CanonicalLabeling cl = canonical_labeling(g);
  const SimpleGraph& h = cl.graph;
  r.graph_code = std::move(cl.code);
  r.n = h.order();
  r.edge_count = h.edge_count();

  timer.enter(Stage::kTransvectionGate);
  const TransvectionReport tr = is_transvection_free(h);
  if (!tr.transvection_free) {
    r.stage_reached = Stage::kTransvectionGate;
    r.transvection_witness = tr.witness;
    timer.close();
    return r;
  }

  timer.enter(Stage::kForestGate);
  const ForestReport fr = all_supports_forests(h);
  if (!fr.all_forests) {
    r.stage_reached = Stage::kForestGate;
    r.cycle_vertex = fr.base_vertex;
    const SupportGraph s = support_graph(h, *fr.base_vertex);
    for (int c : fr.cycle) r.cycle_components.push_back(s.components[c]);
    timer.close();
    return r;
  }

  timer.enter(Stage::kThetaBuilt);
  ThetaResult theta = theta_graph(h);
  r.theta_code = encode_graph6(theta.theta);
  r.theta_generators = std::move(theta.generator_labels);
  r.stage_reached = Stage::kThetaBuilt;
  if (obstructions.empty()) {
    timer.close();
    return r;
  }

  const SimplicialComplex k = flag_complex(theta.theta);
  const PurityAndDimension pd = purity_and_dimension(k);
  r.theta_dimension = pd.dimension;
  if (obstructions.non_pure && !pd.pure) {
    r.obstruction = Obstruction::kNonPure;
    for (const Simplex& f : k.facets()) {
      if (dimension(f) < pd.dimension) {
        r.obstruction_facet = f;
        break;
      }
    }
  } else if (obstructions.disconnected && pd.dimension >= 1 && !is_connected(theta.theta)) {
    r.obstruction = Obstruction::kDisconnectedPositiveDim;
  }
  if (r.obstruction) {
    timer.enter(Stage::kObstructionFound);
    r.stage_reached = Stage::kObstructionFound;
    r.theta_cm = is_cohen_macaulay(k, CmMode::kFull);
  } else {
    timer.enter(Stage::kCleanPass);
    r.stage_reached = Stage::kCleanPass;
  }
  timer.close();
  return r;
}

nlohmann::json to_json(const ScanReport& r, const JsonOptions& opts) {
  using nlohmann::json;
  json j;
  j["schema"] = kReportSchema;
  j["graph"] = r.graph_code.text;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["stage"] = to_string(r.stage_reached);
  json stages = json::array();
  for (Stage s : r.stages) stages.push_back(to_string(s));
  j["stages"] = stages;
  if (r.seed_info) {
    j["seed"] = {{"master", r.seed_info->master_seed}, {"index", r.seed_info->sample_index}};
  }
  json witness = json::object();
  if (r.transvection_witness) {
    witness["transvection"] = {r.transvection_witness->first, r.transvection_witness->second};
  }
  if (r.cycle_vertex) {
    json comps = json::array();
    for (const VertexSet& c : r.cycle_components) comps.push_back(to_vector(c));
    witness["support_cycle"] = {{"vertex", *r.cycle_vertex}, {"components", comps}};
  }
  if (r.obstruction_facet) witness["facet"] = *r.obstruction_facet;
  if (!witness.empty()) j["witness"] = witness;
  if (r.theta_code) {
    j["theta"] = r.theta_code->text;
    j["theta_order"] = r.theta_generators.size();
  }
  if (r.theta_dimension >= 0 || r.stage_reached == Stage::kCleanPass ||
      r.stage_reached == Stage::kObstructionFound) {
    j["theta_dimension"] = r.theta_dimension;
  }
  if (r.obstruction) {
    j["obstruction"] = to_string(*r.obstruction);
    json gens = json::array();
    for (const PartialConjugation& p : r.theta_generators) {
      gens.push_back({p.actor, to_vector(p.support)});
    }
    j["theta_generators"] = gens;
  }
  if (r.theta_cm) {
    j["theta_cm"] = {{"cohen_macaulay", r.theta_cm->is_cm},
                     {"obstruction", to_string(r.theta_cm->obstruction)},
                     {"dimension", r.theta_cm->dimension}};
  }
  if (opts.timing) {
    json t = json::object();
    for (const StageTiming& st : r.timing) t[to_string(st.stage)] = st.seconds;
    j["timing"] = t;
  }
  return j;
}

void StageCounts::add(const ScanReport& r) {
  ++by_stage[r.stage_reached];
  ++total;
}

namespace {

nlohmann::json counts_json(const StageCounts& c) {
  nlohmann::json j = nlohmann::json::object();
  for (Stage s : {Stage::kTransvectionGate, Stage::kForestGate, Stage::kThetaBuilt,
                  Stage::kObstructionFound, Stage::kCleanPass}) {
    auto it = c.by_stage.find(s);
    j[to_string(s)] = it == c.by_stage.end() ? 0 : it->second;
  }
  return j;
}

nlohmann::json finds_json(const std::vector<Find>& finds) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Find& f : finds) {
    nlohmann::json j = {{"graph", f.graph_code.text},
                        {"obstruction", to_string(f.obstruction)},
                        {"hits", f.hits},
                        {"first_index", f.first_index}};
    if (f.theta_code) j["theta"] = f.theta_code->text;
    arr.push_back(j);
  }
  return arr;
}

class FindTracker {
 public:
  void add(const ScanReport& r, std::uint64_t index) {
    if (r.stage_reached != Stage::kObstructionFound) return;
    auto [it, fresh] = by_code_.try_emplace(r.graph_code, finds_.size());
    if (fresh) finds_.push_back({r.graph_code, r.theta_code, *r.obstruction, 0, index});
    ++finds_[it->second].hits;
  }
  std::vector<Find> take() { return std::move(finds_); }

 private:
  std::map<GraphCode, std::size_t> by_code_;
  std::vector<Find> finds_;
};

// out[i] = f(i) for i < m, computed on `jobs` threads over contiguous chunks.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t m, int jobs, F f) {
  std::vector<T> out(m);
  if (jobs <= 1 || m < 2) {
    for (std::size_t i = 0; i < m; ++i) out[i] = f(i);
    return out;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, m);
  const std::size_t chunk = (m + workers - 1) / workers;
  std::vector<std::future<void>> tasks;
  for (std::size_t lo = 0; lo < m; lo += chunk) {
    const std::size_t hi = std::min(m, lo + chunk);
    tasks.push_back(std::async(std::launch::async, [&out, &f, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

constexpr std::size_t kBatch = 4096;

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kCanonicalMaxOrder) {
    throw Error("search: n must lie in [1, " + std::to_string(kCanonicalMaxOrder) + "]");
  }
  if (!(cfg.p_min >= 0.0 && cfg.p_min <= cfg.p_max && cfg.p_max <= 1.0)) {
    throw Error("search: need 0 <= p_min <= p_max <= 1");
  }
  if (cfg.sample_count < 1) throw Error("search: sample count must be at least 1");
  if (cfg.jobs < 1) throw Error("search: jobs must be at least 1");
}

double sample_probability(const SearchConfig& cfg, std::uint64_t index) {
  if (cfg.p_min == cfg.p_max) return cfg.p_min;
  const double t = (static_cast<double>(index) + 0.5) / static_cast<double>(cfg.sample_count);
  return cfg.p_min + (cfg.p_max - cfg.p_min) * t;
}

nlohmann::json SearchSummary::to_json(const SearchConfig& cfg) const {
  nlohmann::json j;
  j["schema"] = kSummarySchema;
  j["mode"] = "search";
  j["n"] = cfg.n;
  j["p"] = {cfg.p_min, cfg.p_max};
  j["samples"] = cfg.sample_count;
  j["seed"] = cfg.master_seed;
  j["stages"] = counts_json(counts);
  j["distinct_finds"] = finds.size();
  j["finds"] = finds_json(finds);
  return j;
}

SearchSummary search_random(const SearchConfig& cfg, const ReportSink& sink) {
  validate(cfg);
  SearchSummary summary;
  FindTracker finds;
  for (std::uint64_t start = 0; start < cfg.sample_count; start += kBatch) {
    const std::size_t m = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, cfg.sample_count - start));
    auto reports = parallel_map<ScanReport>(m, cfg.jobs, [&](std::size_t i) {
      const std::uint64_t index = start + i;
      const SimpleGraph g =
          erdos_renyi(cfg.n, sample_probability(cfg, index), sample_seed(cfg.master_seed, index));
      ScanReport r = run_pipeline(g, cfg.obstructions);
      r.seed_info = SeedInfo{cfg.master_seed, index};
      return r;
    });
    for (std::size_t i = 0; i < m; ++i) {
      summary.counts.add(reports[i]);
      finds.add(reports[i], start + i);
      if (sink) sink(reports[i]);
    }
  }
  summary.finds = finds.take();
  return summary;
}

std::uint64_t ScanSummary::total() const {
  std::uint64_t t = 0;
  for (const auto& [n, c] : by_order) t += c.total;
  return t;
}

nlohmann::json ScanSummary::to_json() const {
  nlohmann::json j;
  j["schema"] = kSummarySchema;
  j["mode"] = "scan";
  nlohmann::json orders = nlohmann::json::object();
  StageCounts all;
  for (const auto& [n, c] : by_order) {
    orders[std::to_string(n)] = {{"graphs", c.total}, {"stages", counts_json(c)}};
    for (const auto& [s, k] : c.by_stage) all.by_stage[s] += k;
  }
  j["orders"] = orders;
  j["total"] = total();
  j["stages"] = counts_json(all);
  j["distinct_finds"] = finds.size();
  j["finds"] = finds_json(finds);
  nlohmann::json errs = nlohmann::json::array();
  for (const ScanError& e : errors) errs.push_back({{"line", e.line}, {"message", e.message}});
  j["errors"] = errs;
  return j;
}

namespace {

class ScanRunner {
 public:
  ScanRunner(const ScanConfig& cfg, const ReportSink& sink) : cfg_(cfg), sink_(sink) {}

  void push(SimpleGraph g) {
    pending_.push_back(std::move(g));
    if (pending_.size() >= kBatch) flush();
  }

  void flush() {
    auto reports = parallel_map<ScanReport>(pending_.size(), cfg_.jobs, [&](std::size_t i) {
      return run_pipeline(pending_[i], cfg_.obstructions);
    });
    for (const ScanReport& r : reports) {
      summary_.by_order[r.n].add(r);
      finds_.add(r, index_++);
      if (sink_) sink_(r);
    }
    pending_.clear();
  }

  ScanSummary finish() {
    flush();
    summary_.finds = finds_.take();
    return std::move(summary_);
  }

  ScanSummary& summary() { return summary_; }

 private:
  const ScanConfig& cfg_;
  const ReportSink& sink_;
  std::vector<SimpleGraph> pending_;
  ScanSummary summary_;
  FindTracker finds_;
  std::uint64_t index_ = 0;
};

}  // namespace

ScanSummary scan_graph6_stream(std::istream& in, const ScanConfig& cfg, const ReportSink& sink) {
  ScanRunner runner(cfg, sink);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      SimpleGraph g = decode_graph6(line);
      if (g.order() == 0) {
        runner.summary().errors.push_back({line_no, "graph of order 0 skipped"});
        continue;
      }
      runner.push(std::move(g));
    } catch (const ParseError& e) {
      runner.summary().errors.push_back({line_no, e.what()});
    }
  }
  return runner.finish();
}

ScanSummary scan_enumeration(int min_order, int max_order, const ScanConfig& cfg,
                             const ReportSink& sink) {
  if (min_order < 1 || max_order > kEnumerationMaxOrder || min_order > max_order) {
    throw Error("scan: orders must satisfy 1 <= min <= max <= " +
                std::to_string(kEnumerationMaxOrder));
  }
  ScanRunner runner(cfg, sink);
  for (int n = min_order; n <= max_order; ++n) {
    for_each_nonisomorphic(n, [&](const SimpleGraph& g) { runner.push(g); }, cfg.jobs);
  }
  return runner.finish();
}

}  // namespace raag
