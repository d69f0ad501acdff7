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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raag/canonical.hpp"
#include "raag/pipeline.hpp"
#include "raag/raag_props.hpp"

namespace raag {
namespace {

bool dominated_somewhere(const SimpleGraph& g) {
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      bool inside = true;
      for (VertexId w = 0; w < g.order() && inside; ++w) {
        if (g.adjacent(u, w) && w != v && !g.adjacent(v, w)) inside = false;
      }
      if (inside) return true;
    }
  }
  return false;
}

bool some_star_separates(const SimpleGraph& g) {
  for (VertexId u = 0; u < g.order(); ++u) {
    VertexSet rest = star(g, u);
    rest.flip();
    if (oracle::dfs_component_count(induced_subgraph(g, rest).graph) > 1) return true;
  }
  return false;
}

// Two pentagons sharing vertex 0.
SimpleGraph pentagon_wedge() {
  return parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6\n6 7\n7 8\n8 0\n");
}

TEST(Transvections, Examples) {
  EXPECT_TRUE(is_transvection_free(cycle_graph(5)).transvection_free);
  EXPECT_TRUE(is_transvection_free(SimpleGraph(1)).transvection_free);
  const TransvectionReport p3 = is_transvection_free(path_graph(3));
  EXPECT_FALSE(p3.transvection_free);
  ASSERT_TRUE(p3.witness.has_value());
  EXPECT_EQ(*p3.witness, (std::pair<VertexId, VertexId>{0, 1}));
  EXPECT_FALSE(is_transvection_free(cycle_graph(4)).transvection_free);
}

TEST(OutFiniteness, Examples) {
  EXPECT_TRUE(out_is_finite(cycle_graph(5)).finite);
  EXPECT_TRUE(out_is_finite(SimpleGraph(1)).finite);
  EXPECT_FALSE(out_is_finite(edgeless_graph(2)).finite);
  EXPECT_TRUE(out_is_finite(cycle_graph(6)).finite);
  const OutFinitenessReport wedge = out_is_finite(pentagon_wedge());
  EXPECT_FALSE(wedge.finite);
  EXPECT_EQ(wedge.domination_witness, std::nullopt);
  ASSERT_TRUE(wedge.separating_star_witness.has_value());
  EXPECT_EQ(*wedge.separating_star_witness, 0);
  EXPECT_THROW(out_is_finite(SimpleGraph(0)), Error);
}

TEST(OutFiniteness, MatchesIndependentCheckUpToSevenVertices) {
  int finite = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const SimpleGraph& g : enumerate_nonisomorphic(n)) {
      const bool dom = dominated_somewhere(g);
      const bool sep = some_star_separates(g);
      const OutFinitenessReport r = out_is_finite(g);
      ASSERT_EQ(r.finite, !dom && !sep) << to_edge_list(g);
      EXPECT_EQ(r.domination_witness.has_value(), dom);
      EXPECT_EQ(r.separating_star_witness.has_value(), sep);
      EXPECT_EQ(is_transvection_free(g).transvection_free, !dom);
      if (r.finite) ++finite;
    }
  }
  EXPECT_GT(finite, 1);
}

TEST(OutFiniteness, WitnessesAreGenuine) {
  for (const SimpleGraph& g : enumerate_nonisomorphic(6)) {
    const OutFinitenessReport r = out_is_finite(g);
    if (r.domination_witness) {
      const auto [u, v] = *r.domination_witness;
      EXPECT_NE(u, v);
      EXPECT_TRUE(link(g, u).is_subset_of(star(g, v)));
    }
    if (r.separating_star_witness) {
      EXPECT_GT(components_avoiding(g, star(g, *r.separating_star_witness)).size(), 1u);
    }
  }
}

TEST(Center, ConeVertexIsCentral) {
  EXPECT_EQ(to_vector(center_vertices(cone(cycle_graph(5)))), (std::vector<VertexId>{5}));
  EXPECT_TRUE(center_vertices(cycle_graph(5)).none());
  EXPECT_EQ(center_vertices(complete_graph(3)).count(), 3u);
}

TEST(OneEnded, ConnectedWithAtLeastTwoVertices) {
  EXPECT_TRUE(is_one_ended(path_graph(2)));
  EXPECT_FALSE(is_one_ended(SimpleGraph(1)));
  EXPECT_FALSE(is_one_ended(edgeless_graph(2)));
}

TEST(JoinLemma, PentagonWithItself) {
  const JoinLemmaCertificate c = join_lemma_certificate(cycle_graph(5), cycle_graph(5));
  EXPECT_TRUE(c.applicable);
  EXPECT_TRUE(c.first.connected);
  EXPECT_TRUE(c.first.trivial_center);
  EXPECT_TRUE(c.first.one_ended);
  EXPECT_EQ(c.gamma.order(), 10);
  EXPECT_EQ(c.delta.edge_count(), 10u + 25u);
  EXPECT_FALSE(join_lemma_certificate(cycle_graph(5), SimpleGraph(1)).applicable);
  EXPECT_FALSE(join_lemma_certificate(cycle_graph(5), pentagon_wedge()).applicable);
}

TEST(VirtualDuality, Verdicts) {
  const VirtualDualityEvidence two_pentagons =
      out_virtual_duality_verdict(disjoint_union(cycle_graph(5), cycle_graph(5)));
  EXPECT_EQ(two_pentagons.verdict, VirtualDuality::kVirtualDuality);
  ASSERT_TRUE(two_pentagons.sides.has_value());
  EXPECT_EQ(two_pentagons.sides->first, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(out_virtual_duality_verdict(cycle_graph(5)).verdict, VirtualDuality::kVirtualDuality);
  EXPECT_EQ(out_virtual_duality_verdict(SimpleGraph(0)).verdict, VirtualDuality::kVirtualDuality);
  EXPECT_EQ(out_virtual_duality_verdict(pentagon_wedge()).verdict, VirtualDuality::kUnknown);

  const SimpleGraph g1 = read_edge_list_file(oracle::fixture_path("pentagon.edges"));
  const SimpleGraph g2 = read_edge_list_file(oracle::fixture_path("twelve_vertex.edges"));
  const VirtualDualityEvidence ev = out_virtual_duality_verdict(disjoint_union(g1, g2));
  EXPECT_EQ(ev.verdict, VirtualDuality::kNotVirtualDuality);
  ASSERT_TRUE(ev.delta_duality.has_value());
  EXPECT_EQ(ev.delta_duality->cm.obstruction, CmObstruction::kNonPure);
}

}  // namespace
}  // namespace raag
