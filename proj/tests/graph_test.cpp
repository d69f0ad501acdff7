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
#include "raag/graph.hpp"

namespace raag {
namespace {

TEST(EdgeList, ParsesHeaderCommentsAndEdges) {
  const SimpleGraph g = parse_edge_list("# a path\nn=4\n0 1\n1 2  # middle\n\n2 3\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(EdgeList, InfersOrderAndKeepsIsolatedTail) {
  EXPECT_EQ(parse_edge_list("0 3\n").order(), 4);
  EXPECT_EQ(parse_edge_list("n=7\n0 1\n").order(), 7);
  EXPECT_EQ(parse_edge_list("").order(), 0);
}

TEST(EdgeList, DuplicateEdgesCollapse) {
  EXPECT_EQ(parse_edge_list("0 1\n1 0\n0 1\n").edge_count(), 1u);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n=3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\nn=3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n=-2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("7\n"), ParseError);
}

TEST(EdgeList, RoundTrips) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 1 + t % 9, 0.4);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(SimpleGraph, AddEdgeChecksEndpoints) {
  SimpleGraph g(3);
  EXPECT_THROW(g.add_edge(0, 0), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  EXPECT_THROW(g.add_edge(-1, 1), Error);
  g.add_edge(2, 0);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(SimpleGraph, StarAndLinkOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 8, 0.5);
    for (VertexId u = 0; u < g.order(); ++u) {
      const VertexSet lk = link(g, u), st = star(g, u);
      EXPECT_FALSE(lk.test(u));
      EXPECT_TRUE(st.test(u));
      EXPECT_TRUE(lk.is_subset_of(st));
      EXPECT_EQ(st.count(), lk.count() + 1);
      for (VertexId v = 0; v < g.order(); ++v) {
        if (v != u) {
          EXPECT_EQ(lk.test(v), g.adjacent(u, v));
        }
      }
    }
  }
}

TEST(SimpleGraph, InducedSubgraphKeepsAdjacency) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 9, 0.5);
    VertexSet keep = g.empty_set();
    for (int v = 0; v < 9; ++v) {
      if (rng() % 2) keep.set(v);
    }
    const InducedSubgraph sub = induced_subgraph(g, keep);
    ASSERT_EQ(sub.graph.order(), static_cast<int>(keep.count()));
    EXPECT_TRUE(std::is_sorted(sub.to_parent.begin(), sub.to_parent.end()));
    for (int i = 0; i < sub.graph.order(); ++i) {
      for (int j = 0; j < sub.graph.order(); ++j) {
        if (i != j) {
          EXPECT_EQ(sub.graph.adjacent(i, j), g.adjacent(sub.to_parent[i], sub.to_parent[j]));
        }
      }
    }
  }
}

TEST(SimpleGraph, ComponentsMatchDepthFirstSearch) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const SimpleGraph g = oracle::random_graph(rng, 1 + t % 10, 0.2);
    const auto comps = connected_components(g);
    EXPECT_EQ(static_cast<int>(comps.size()), oracle::dfs_component_count(g));
    EXPECT_EQ(is_connected(g), comps.size() == 1);
    std::vector<int> owner(g.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(c);
      }
    }
    for (const Edge& e : g.edges()) EXPECT_EQ(owner[e.first], owner[e.second]);
  }
}

TEST(SimpleGraph, ComponentsAvoidingSkipRemovedVertices) {
  const SimpleGraph c6 = cycle_graph(6);
  const auto parts = components_avoiding(c6, star(c6, 0));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(to_vector(parts[0]), (std::vector<VertexId>{2, 3, 4}));
  const auto split = components_avoiding(c6, make_set(6, {0, 3}));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(to_vector(split[0]), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(to_vector(split[1]), (std::vector<VertexId>{4, 5}));
}

TEST(SimpleGraph, Constructions) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(edgeless_graph(5).edge_count(), 0u);
  const SimpleGraph u = disjoint_union(cycle_graph(4), path_graph(3));
  EXPECT_EQ(u.order(), 7);
  EXPECT_EQ(u.edge_count(), 6u);
  EXPECT_EQ(connected_components(u).size(), 2u);
  const SimpleGraph j = join(cycle_graph(4), path_graph(3));
  EXPECT_EQ(j.edge_count(), 4u + 2u + 12u);
  EXPECT_TRUE(j.adjacent(0, 6));
  const SimpleGraph c = cone(cycle_graph(5));
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.degree(5), 5);
  const SimpleGraph s = suspension(cycle_graph(4));
  EXPECT_EQ(s.order(), 6);
  EXPECT_EQ(s.edge_count(), 12u);
  EXPECT_FALSE(s.adjacent(4, 5));
}

TEST(SimpleGraph, PermutePreservesEdgeCountAndDegrees) {
  std::mt19937_64 rng(21);
  const SimpleGraph g = oracle::random_graph(rng, 8, 0.5);
  const std::vector<int> p = oracle::random_permutation(rng, 8);
  const SimpleGraph h = permute(g, p);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      if (u != v) {
        EXPECT_EQ(h.adjacent(p[u], p[v]), g.adjacent(u, v));
      }
    }
  }
}

}  // namespace
}  // namespace raag
