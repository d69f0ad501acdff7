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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "raag/canonical.hpp"
#include "raag/complex.hpp"
#include "raag/pipeline.hpp"
#include "raag/raag_props.hpp"

namespace raag {

SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::vector<std::string> fixture_files() {
  return {"pentagon.edges", "twelve_vertex.edges", "nine_vertex_15.edges",
          "nine_vertex_17.edges", "nine_vertex_15_theta.edges", "nine_vertex_17_theta.edges"};
}

bool FixtureReport::passed() const {
  for (const FixtureCheck& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

namespace {

class Recorder {
 public:
  explicit Recorder(FixtureReport& r) : report_(r) {}
  void group(std::string g) { group_ = std::move(g); }
  void check(const std::string& name, bool ok, std::string detail = {}) {
    report_.checks.push_back({group_, name, ok, std::move(detail)});
  }

 private:
  FixtureReport& report_;
  std::string group_;
};

bool flag_pure(const SimpleGraph& g) { return purity_and_dimension(flag_complex(g)).pure; }

std::size_t max_support_edges(const SimpleGraph& g) {
  std::size_t most = 0;
  for (VertexId a = 0; a < g.order(); ++a) most = std::max(most, support_graph(g, a).graph.edge_count());
  return most;
}

}  // namespace

FixtureReport verify_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::string missing;
  for (const std::string& f : fixture_files()) {
    if (!fs::is_regular_file(fs::path(dir) / f)) missing += (missing.empty() ? "" : ", ") + f;
  }
  if (!missing.empty()) throw Error("fixture directory " + dir + " lacks: " + missing);
  auto load = [&](const std::string& f) { return read_edge_list_file((fs::path(dir) / f).string()); };
  const SimpleGraph g1 = load("pentagon.edges");
  const SimpleGraph g2 = load("twelve_vertex.edges");

  FixtureReport report;
  Recorder rec(report);

  rec.group("finite-out");
  for (const auto& [name, g] : {std::pair{"pentagon", &g1}, std::pair{"twelve-vertex graph", &g2}}) {
    const OutFinitenessReport o = out_is_finite(*g);
    std::string detail;
    if (o.separating_star_witness) detail = "star of " + std::to_string(*o.separating_star_witness) + " separates";
    if (o.domination_witness) {
      detail = "lk(" + std::to_string(o.domination_witness->first) + ") in st(" +
               std::to_string(o.domination_witness->second) + ")";
    }
    rec.check(std::string(name) + " has finite Out", o.finite, detail);
  }
  const JoinLemmaCertificate cert = join_lemma_certificate(g1, g2);
  rec.check("join lemma applies", cert.applicable);

  rec.group("twelve-vertex-nonpure");
  rec.check("flag complex of the twelve-vertex graph is not pure", !flag_pure(g2));
  rec.check("its RAAG is not a duality group", !raag_duality_verdict(g2).duality_group);

  rec.group("join-nonpure");
  const SimpleGraph delta = join(g1, g2);
  const DualityVerdict dv = raag_duality_verdict(delta);
  rec.check("flag complex of the join is not pure", !flag_pure(delta));
  rec.check("join fails Cohen-Macaulay by purity",
            !dv.cm.is_cm && dv.cm.obstruction == CmObstruction::kNonPure,
            to_string(dv.cm.obstruction));
  const VirtualDualityEvidence ev = out_virtual_duality_verdict(disjoint_union(g1, g2));
  rec.check("Out of the disjoint union is not a virtual duality group",
            ev.verdict == VirtualDuality::kNotVirtualDuality, to_string(ev.verdict));
  const ThetaResult union_theta = theta_graph(disjoint_union(g1, g2));
  rec.check("theta of the disjoint union is the join", isomorphic(union_theta.theta, delta),
            std::to_string(union_theta.theta.order()) + " generators");

  rec.group("free-product-identity");
  const SimpleGraph k234 =
      disjoint_union(disjoint_union(complete_graph(2), complete_graph(3)), complete_graph(4));
  const ThetaResult comb = theta_graph(k234, ThetaBackend::kCombinatorial);
  const ThetaResult oracle = theta_graph(k234, ThetaBackend::kWordOracle);
  rec.check("combinatorial theta of K2+K3+K4 is K2+K3+K4", isomorphic(comb.theta, k234));
  rec.check("word-oracle theta of K2+K3+K4 is K2+K3+K4", isomorphic(oracle.theta, k234));
  rec.check("backends agree on K2+K3+K4",
            comb.theta == oracle.theta && comb.generator_labels == oracle.generator_labels);

  rec.group("nine-vertex");
  for (const int edges : {15, 17}) {
    const std::string base = "nine_vertex_" + std::to_string(edges);
    const std::string tag = "nine-vertex graph with " + std::to_string(edges) + " edges";
    const SimpleGraph g = load(base + ".edges");
    const SimpleGraph expected_theta = load(base + "_theta.edges");
    rec.check(tag + " has 9 vertices", g.order() == 9, std::to_string(g.order()));
    rec.check(tag + " has that many edges", g.edge_count() == static_cast<std::size_t>(edges),
              std::to_string(g.edge_count()));
    rec.check(tag + " is connected", is_connected(g));
    rec.check(tag + " has no transvections", is_transvection_free(g).transvection_free);
    rec.check(tag + " support graphs are forests", all_supports_forests(g).all_forests);
    const std::size_t most = max_support_edges(g);
    rec.check(tag + " support graphs have at most one edge", most <= 1, std::to_string(most));
    if (!all_supports_forests(g).all_forests) continue;
    const ThetaResult t = theta_graph(g);
    rec.check(tag + " theta matches the fixture", isomorphic(t.theta, expected_theta),
              encode_graph6(t.theta).text);
    rec.check(tag + " flag complex of theta is not pure", !flag_pure(t.theta));
    const ScanReport r = run_pipeline(g);
    rec.check(tag + " pipeline finds the purity obstruction",
              r.stage_reached == Stage::kObstructionFound && r.obstruction == Obstruction::kNonPure,
              to_string(r.stage_reached));
  }
  return report;
}

}  // namespace raag
