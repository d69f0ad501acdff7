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

// raagscan: search for graphs whose RAAG has an outer automorphism group
// that is not a virtual duality group.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "raag/canonical.hpp"
#include "raag/complex.hpp"
#include "raag/homology.hpp"
#include "raag/pipeline.hpp"
#include "raag/raag_props.hpp"

#ifndef RAAG_FIXTURE_DIR
#define RAAG_FIXTURE_DIR "fixtures"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw raag::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') return true;
    return line.compare(start, 2, "n=") == 0 || line.find(' ') != std::string::npos;
  }
  return true;
}

raag::SimpleGraph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const bool edges = format == "edges" || (format == "auto" && looks_like_edge_list(text));
  if (edges) return raag::parse_edge_list(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return raag::decode_graph6(line);
  }
  throw raag::ParseError("no graph6 line in " + path);
}

std::string group_text(const raag::HomologyGroup& g) {
  std::string out;
  if (g.free_rank > 0) out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (const raag::BigInt& t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

nlohmann::json cm_json(const raag::CmVerdict& v) {
  nlohmann::json j = {{"cohen_macaulay", v.is_cm},
                      {"obstruction", raag::to_string(v.obstruction)},
                      {"dimension", v.dimension}};
  if (v.witness && !v.witness->simplex.empty()) j["witness_simplex"] = v.witness->simplex;
  return j;
}

// Writes one JSON line per report to a file or to stdout.
class ReportWriter {
 public:
  ReportWriter(const std::string& path, bool finds_only, bool timing)
      : finds_only_(finds_only), opts_{timing} {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw raag::Error("cannot write " + path);
    }
  }
  void operator()(const raag::ScanReport& r) {
    if (finds_only_ && r.stage_reached != raag::Stage::kObstructionFound) return;
    out() << raag::to_json(r, opts_).dump() << '\n';
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }
  bool to_file() const { return file_ != nullptr; }

 private:
  bool finds_only_;
  raag::JsonOptions opts_;
  std::unique_ptr<std::ofstream> file_;
};

void parse_p(const std::string& text, raag::SearchConfig& cfg) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      cfg.p_min = cfg.p_max = std::stod(text);
    } else {
      cfg.p_min = std::stod(text.substr(0, colon));
      cfg.p_max = std::stod(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw raag::Error("--p expects P or PMIN:PMAX, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search graphs for RAAGs whose outer automorphism group is not a virtual duality group"};
  app.require_subcommand(1);

  std::string check_file, check_format = "auto", check_obstructions = "nonpure";
  bool check_full_cm = false, check_timing = false;
  auto* check = app.add_subcommand("check", "Run the pipeline on one graph and print a JSON report");
  check->add_option("file", check_file, "Edge-list or graph6 file")->required();
  check->add_option("--format", check_format, "edges, graph6 or auto")
      ->check(CLI::IsMember({"edges", "graph6", "auto"}));
  check->add_flag("--full-cm", check_full_cm, "Also run the full Cohen-Macaulay test");
  check->add_option("--obstruction", check_obstructions, "Comma list of nonpure, disconnected");
  check->add_flag("--timing", check_timing, "Include per-stage timings");

  raag::SearchConfig search_cfg;
  std::string search_p = "0.4", search_obstructions = "nonpure", search_out, search_summary;
  bool search_finds_only = false, search_timing = false;
  auto* search = app.add_subcommand("search", "Sample Erdos-Renyi graphs and run the pipeline");
  search->add_option("--n", search_cfg.n, "Vertex count")->required();
  search->add_option("--p", search_p, "Edge probability P or sweep PMIN:PMAX");
  search->add_option("--count", search_cfg.sample_count, "Number of samples")->required();
  search->add_option("--seed", search_cfg.master_seed, "Master seed")->required();
  search->add_option("--jobs", search_cfg.jobs, "Worker threads");
  search->add_option("--obstruction", search_obstructions, "Comma list of nonpure, disconnected");
  search->add_option("--out", search_out, "JSONL report file (default stdout)");
  search->add_option("--summary", search_summary, "Write the summary JSON here as well");
  search->add_flag("--finds-only", search_finds_only, "Only write reports with an obstruction");
  search->add_flag("--timing", search_timing, "Include per-stage timings");

  raag::ScanConfig scan_cfg;
  std::string scan_input, scan_obstructions = "nonpure", scan_out, scan_summary;
  int scan_enumerate = 0, scan_min_order = 1;
  bool scan_finds_only = false, scan_timing = false;
  auto* scan = app.add_subcommand("scan", "Run the pipeline over a graph6 file or all small graphs");
  auto* input_opt = scan->add_option("--input", scan_input, "graph6 file, one graph per line");
  auto* enum_opt = scan->add_option("--enumerate", scan_enumerate, "Every graph with up to N vertices");
  input_opt->excludes(enum_opt);
  scan->add_option("--min-order", scan_min_order, "Smallest order to enumerate");
  scan->add_option("--jobs", scan_cfg.jobs, "Worker threads");
  scan->add_option("--obstruction", scan_obstructions, "Comma list of nonpure, disconnected");
  scan->add_option("--out", scan_out, "JSONL report file (default stdout)");
  scan->add_option("--summary", scan_summary, "Write the summary JSON here as well");
  scan->add_flag("--finds-only", scan_finds_only, "Only write reports with an obstruction");
  scan->add_flag("--timing", scan_timing, "Include per-stage timings");

  std::string fixture_dir = RAAG_FIXTURE_DIR;
  auto* fixtures = app.add_subcommand("fixtures", "Check the bundled example graphs");
  fixtures->add_option("--dir", fixture_dir, "Fixture directory");

  std::string homology_file, homology_format = "auto";
  auto* homology = app.add_subcommand("homology", "Reduced homology of the flag complex");
  homology->add_option("file", homology_file, "Edge-list or graph6 file")->required();
  homology->add_option("--format", homology_format, "edges, graph6 or auto")
      ->check(CLI::IsMember({"edges", "graph6", "auto"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) {
      const raag::SimpleGraph g = load_graph(check_file, check_format);
      const raag::ScanReport r = raag::run_pipeline(g, raag::parse_obstruction_set(check_obstructions));
      nlohmann::json j = raag::to_json(r, {check_timing});
      j["canonical_order"] = raag::canonical_labeling(g).order;
      const raag::VirtualDualityEvidence ev = raag::out_virtual_duality_verdict(g);
      j["out_virtual_duality"] = {{"verdict", raag::to_string(ev.verdict)}, {"reason", ev.reason}};
      if (check_full_cm) {
        j["graph_cm"] = cm_json(raag::raag_duality_verdict(g).cm);
        if (r.theta_code) {
          j["theta_cm"] = cm_json(raag::is_cohen_macaulay(
              raag::flag_complex(raag::decode_graph6(*r.theta_code)), raag::CmMode::kFull));
        }
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*search) {
      parse_p(search_p, search_cfg);
      search_cfg.obstructions = raag::parse_obstruction_set(search_obstructions);
      raag::validate(search_cfg);
      ReportWriter writer(search_out, search_finds_only, search_timing);
      const raag::SearchSummary s = raag::search_random(search_cfg, std::ref(writer));
      const std::string summary = s.to_json(search_cfg).dump(2);
      std::cerr << summary << '\n';
      if (!search_summary.empty()) std::ofstream(search_summary) << summary << '\n';
      return kExitOk;
    }
    if (*scan) {
      if (scan_input.empty() && scan_enumerate == 0) {
        std::cerr << "scan: give --input FILE or --enumerate N\n";
        return kExitUsage;
      }
      scan_cfg.obstructions = raag::parse_obstruction_set(scan_obstructions);
      ReportWriter writer(scan_out, scan_finds_only, scan_timing);
      raag::ScanSummary s;
      nlohmann::json extra;
      if (!scan_input.empty()) {
        std::ifstream in(scan_input);
        if (!in) throw raag::Error("cannot open " + scan_input);
        s = raag::scan_graph6_stream(in, scan_cfg, std::ref(writer));
      } else {
        s = raag::scan_enumeration(scan_min_order, scan_enumerate, scan_cfg, std::ref(writer));
        if (scan_min_order <= 1) extra["total_including_order_0"] = s.total() + 1;
      }
      nlohmann::json j = s.to_json();
      j.update(extra);
      const std::string summary = j.dump(2);
      std::cerr << summary << '\n';
      if (!scan_summary.empty()) std::ofstream(scan_summary) << summary << '\n';
      return s.errors.empty() ? kExitOk : kExitFailure;
    }
    if (*fixtures) {
      raag::FixtureReport rep;
      try {
        rep = raag::verify_fixtures(fixture_dir);
      } catch (const raag::Error& e) {
        std::cerr << "fixtures: " << e.what() << '\n';
        return kExitFailure;
      }
      for (const raag::FixtureCheck& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
      }
      std::cout << (rep.passed() ? "all fixture checks passed" : "fixture checks FAILED") << '\n';
      return rep.passed() ? kExitOk : kExitFailure;
    }
    if (*homology) {
      const raag::SimpleGraph g = load_graph(homology_file, homology_format);
      const raag::SimplicialComplex k = raag::flag_complex(g);
      const raag::HomologyProfile h = raag::reduced_homology(k);
      std::cout << "dimension " << k.dimension() << '\n';
      for (int d = -1; d <= h.top_degree(); ++d) {
        std::cout << "H~_" << d << " = " << group_text(h.degree(d)) << '\n';
      }
      return kExitOk;
    }
  } catch (const raag::Error& e) {
    std::cerr << "raagscan: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
