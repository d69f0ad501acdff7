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

#include <random>

#include "oracles.hpp"
#include "raag/canonical.hpp"
#include "raag/pipeline.hpp"
#include "raag/pso.hpp"
#include "raag/raag_props.hpp"

namespace raag {
namespace {

SimpleGraph k2_k3_k4() {
  return disjoint_union(disjoint_union(complete_graph(2), complete_graph(3)), complete_graph(4));
}

int expected_theta_order(const SimpleGraph& g) {
  int total = 0;
  for (VertexId a = 0; a < g.order(); ++a) {
    total += std::max(0, static_cast<int>(components_avoiding(g, star(g, a)).size()) - 1);
  }
  return total;
}

TEST(Catalog, FreeProductOfCliques) {
  const auto cat = partial_conjugation_catalog(k2_k3_k4());
  EXPECT_EQ(cat.size(), 18u);
  EXPECT_EQ(std::count_if(cat.begin(), cat.end(), [](const CatalogEntry& e) { return e.droppable; }), 9);
  EXPECT_EQ(std::count_if(cat.begin(), cat.end(), [](const CatalogEntry& e) { return e.redundant; }), 0);
}

TEST(Catalog, RedundantWhenComplementIsConnected) {
  const auto cat = partial_conjugation_catalog(cycle_graph(5));
  EXPECT_EQ(cat.size(), 5u);
  for (const CatalogEntry& e : cat) {
    EXPECT_TRUE(e.redundant);
    EXPECT_TRUE(e.droppable);
    EXPECT_EQ(e.conjugation.support.count(), 2u);
  }
}

TEST(SupportGraph, ComponentsOfTheComplementOfAStar) {
  const SupportGraph s = support_graph(k2_k3_k4(), 0);
  EXPECT_EQ(s.base_vertex, 0);
  ASSERT_EQ(s.components.size(), 2u);
  EXPECT_EQ(to_vector(s.components[0]), (std::vector<VertexId>{2, 3, 4}));
  EXPECT_EQ(s.graph.order(), 2);
}

TEST(SupportGraph, CyclesAreReportedWithAValidWitness) {
  int cyclic = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const SimpleGraph& g : enumerate_nonisomorphic(n)) {
      const ForestReport r = all_supports_forests(g);
      bool expected = true;
      for (VertexId a = 0; a < g.order(); ++a) {
        const SupportGraph s = support_graph(g, a);
        if (s.graph.edge_count() + connected_components(s.graph).size() !=
            static_cast<std::size_t>(s.graph.order())) {
          expected = false;
        }
      }
      ASSERT_EQ(r.all_forests, expected) << to_edge_list(g);
      EXPECT_EQ(pso_is_raag(g).all_forests, r.all_forests);
      if (r.all_forests) continue;
      ++cyclic;
      ASSERT_TRUE(r.base_vertex.has_value());
      const SupportGraph s = support_graph(g, *r.base_vertex);
      ASSERT_GE(r.cycle.size(), 3u);
      for (std::size_t i = 0; i < r.cycle.size(); ++i) {
        EXPECT_TRUE(s.graph.adjacent(r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]));
      }
      EXPECT_THROW(theta_graph(g), Error);
    }
  }
  EXPECT_GT(cyclic, 0);
}

TEST(Theta, FreeProductOfCliquesIsItself) {
  const SimpleGraph g = k2_k3_k4();
  const ThetaResult comb = theta_graph(g, ThetaBackend::kCombinatorial);
  const ThetaResult word = theta_graph(g, ThetaBackend::kWordOracle);
  EXPECT_TRUE(isomorphic(comb.theta, g));
  EXPECT_EQ(comb.theta, word.theta);
  EXPECT_EQ(comb.generator_labels, word.generator_labels);
  EXPECT_EQ(to_string(word.backend), "word_oracle");
}

TEST(Theta, TwoPentagonsGiveTheirJoin) {
  const SimpleGraph g = disjoint_union(cycle_graph(5), cycle_graph(5));
  EXPECT_TRUE(isomorphic(theta_graph(g).theta, join(cycle_graph(5), cycle_graph(5))));
}

TEST(Theta, BackendsAgreeUpToSixVertices) {
  int compared = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const SimpleGraph& g : enumerate_nonisomorphic(n)) {
      if (!all_supports_forests(g).all_forests) continue;
      const ThetaResult comb = theta_graph(g, ThetaBackend::kCombinatorial);
      const ThetaResult word = theta_graph(g, ThetaBackend::kWordOracle);
      ASSERT_EQ(comb.theta, word.theta) << to_edge_list(g);
      EXPECT_EQ(comb.generator_labels, word.generator_labels);
      EXPECT_EQ(comb.theta.order(), expected_theta_order(g));
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Theta, RootChoiceDoesNotChangeTheIsomorphismType) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 8, 0.25);
    if (!all_supports_forests(g).all_forests) continue;
    const ThetaResult a = theta_graph(g, ThetaBackend::kCombinatorial, RootChoice::kSmallest);
    const ThetaResult b = theta_graph(g, ThetaBackend::kCombinatorial, RootChoice::kLargest);
    EXPECT_TRUE(isomorphic(a.theta, b.theta)) << to_edge_list(g);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Theta, CommutationRuleMatchesWordOracleOnGenerators) {
  std::mt19937_64 rng(29);
  int pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 3 + t % 5, 0.3);
    if (!all_supports_forests(g).all_forests) continue;
    const std::vector<PartialConjugation> gens = theta_generators(g);
    const ArtinGroup group(g);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        ASSERT_EQ(generators_commute(g, gens[i], gens[j]), commute_in_out(group, gens[i], gens[j]))
            << to_edge_list(g) << to_string(gens[i]) << " " << to_string(gens[j]);
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 100);
}

TEST(Theta, TransvectionFreeGraphsStillNeedForests) {
  const SimpleGraph g = read_edge_list_file(oracle::fixture_path("nine_vertex_15.edges"));
  EXPECT_TRUE(is_transvection_free(g).transvection_free);
  const ThetaResult t = theta_graph(g);
  EXPECT_EQ(t.theta.order(), expected_theta_order(g));
  EXPECT_EQ(static_cast<int>(t.generator_labels.size()), t.theta.order());
}

}  // namespace
}  // namespace raag
