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

// Finite simple graphs and the handful of graph operations everything else
// is built from: stars, links, full subgraphs, components, unions and joins.

#ifndef RAAG_GRAPH_HPP_
#define RAAG_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raag {

/// Dense vertex index in [0, n).
using VertexId = int;

/// Vertex subsets are bitsets over the ground set [0, n).
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

using Edge = std::pair<VertexId, VertexId>;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A finite simple graph on the vertex set [0, n).
///
/// No loops and no multi-edges; adding an existing edge is a no-op. Graphs
/// are plain values: the operations below never mutate their arguments.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws Error on a loop or an endpoint outside [0, n).
  void add_edge(VertexId u, VertexId v);

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(VertexId u) const { return adj_[u]; }
  int degree(VertexId u) const { return static_cast<int>(adj_[u].count()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(adj_.size()); }
  VertexSet full_set() const { return VertexSet(adj_.size()).set(); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(VertexId u) const;

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

std::vector<VertexId> to_vector(const VertexSet& s);
VertexSet make_set(int n, const std::vector<VertexId>& members);

/// Parses the line-oriented edge list format: one "u v" pair per line, an
/// optional leading "n=<count>" header, '#' comments and blank lines ignored.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

/// {u} together with its neighbours.
VertexSet star(const SimpleGraph& g, VertexId u);
/// The neighbours of u.
VertexSet link(const SimpleGraph& g, VertexId u);

struct InducedSubgraph {
  SimpleGraph graph;
  /// to_parent[i] is the original label of vertex i, ascending.
  std::vector<VertexId> to_parent;
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep);

/// Connected components of the full subgraph on V \ removed, in original
/// labels, ordered by smallest member.
std::vector<VertexSet> components_avoiding(const SimpleGraph& g,
                                           const VertexSet& removed);

/// Partition of [0, n) into connected components, each ascending, blocks
/// ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// G1 on [0, n1) followed by G2 shifted to [n1, n1 + n2).
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);
/// Disjoint union plus every edge between the two sides.
SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph edgeless_graph(int n);
/// join(g, K1): the apex is the last vertex.
SimpleGraph cone(const SimpleGraph& g);
/// join(g, two isolated vertices).
SimpleGraph suspension(const SimpleGraph& g);

/// Relabels vertex v to perm[v].
SimpleGraph permute(const SimpleGraph& g, const std::vector<VertexId>& perm);

}  // namespace raag

#endif  // RAAG_GRAPH_HPP_
