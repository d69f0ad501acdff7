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

#include "raag/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace raag {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw Error("negative vertex count");
  adj_.assign(n, VertexSet(n));
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges)
    : SimpleGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(VertexId u) const {
  if (u < 0 || u >= order()) {
    throw Error("vertex " + std::to_string(u) + " outside [0, " +
                std::to_string(order()) + ")");
  }
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<VertexId>(v));
    }
  }
  return out;
}

std::vector<VertexId> to_vector(const VertexSet& s) {
  std::vector<VertexId> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

VertexSet make_set(int n, const std::vector<VertexId>& members) {
  VertexSet s(n);
  for (VertexId v : members) {
    if (v < 0 || v >= n) throw Error("vertex outside ground set");
    s.set(v);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  long long declared = -1;
  std::vector<Edge> edges;
  long long max_vertex = -1;
  int line_no = 0;
  bool seen_edge = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.rfind("n=", 0) == 0) {
      if (seen_edge || declared >= 0) {
        throw ParseError(where + "header must precede all edges");
      }
      if (!parse_int(trim(line.substr(2)), declared) || declared < 0) {
        throw ParseError(where + "malformed vertex-count header");
      }
      continue;
    }
    const auto sep = line.find_first_of(" \t");
    long long u = 0, v = 0;
    if (sep == std::string_view::npos || !parse_int(line.substr(0, sep), u) ||
        !parse_int(trim(line.substr(sep)), v) || u < 0 || v < 0) {
      throw ParseError(where + "expected two non-negative integers");
    }
    if (u == v) throw ParseError(where + "self-loop");
    if (declared >= 0 && (u >= declared || v >= declared)) {
      throw ParseError(where + "vertex index exceeds declared n");
    }
    seen_edge = true;
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  const auto n = declared >= 0 ? declared : max_vertex + 1;
  return SimpleGraph(static_cast<int>(n), edges);
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

VertexSet star(const SimpleGraph& g, VertexId u) {
  if (u < 0 || u >= g.order()) throw Error("star: vertex out of range");
  VertexSet s = g.neighbors(u);
  s.set(u);
  return s;
}

VertexSet link(const SimpleGraph& g, VertexId u) {
  if (u < 0 || u >= g.order()) throw Error("link: vertex out of range");
  return g.neighbors(u);
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep) {
  if (static_cast<int>(keep.size()) != g.order()) {
    throw Error("induced_subgraph: vertex set over the wrong ground set");
  }
  InducedSubgraph out;
  out.to_parent = to_vector(keep);
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    index[out.to_parent[i]] = static_cast<int>(i);
  }
  out.graph = SimpleGraph(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const VertexSet nb = g.neighbors(out.to_parent[i]) & keep;
    for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
      if (index[v] > static_cast<int>(i)) {
        out.graph.add_edge(static_cast<VertexId>(i), index[v]);
      }
    }
  }
  return out;
}

std::vector<VertexSet> components_avoiding(const SimpleGraph& g,
                                           const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet unseen = ~removed;
  for (auto s = unseen.find_first(); s != VertexSet::npos;
       s = unseen.find_first()) {
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next = g.empty_set();
      for (auto v = frontier.find_first(); v != VertexSet::npos;
           v = frontier.find_next(v)) {
        next |= g.neighbors(static_cast<VertexId>(v));
      }
      frontier = next & unseen & ~comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& c : components_avoiding(g, g.empty_set())) {
    out.push_back(to_vector(c));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  return components_avoiding(g, g.empty_set()).size() <= 1;
}

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n1 = g1.order();
  SimpleGraph out(n1 + g2.order());
  for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
  return out;
}

SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) {
  SimpleGraph out = disjoint_union(g1, g2);
  for (VertexId u = 0; u < g1.order(); ++u) {
    for (VertexId v = 0; v < g2.order(); ++v) out.add_edge(u, g1.order() + v);
  }
  return out;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least three vertices");
  SimpleGraph g(n);
  for (VertexId u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

SimpleGraph edgeless_graph(int n) { return SimpleGraph(n); }

SimpleGraph cone(const SimpleGraph& g) { return join(g, SimpleGraph(1)); }

SimpleGraph suspension(const SimpleGraph& g) {
  return join(g, SimpleGraph(2));
}

SimpleGraph permute(const SimpleGraph& g, const std::vector<VertexId>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error("permute: permutation has the wrong length");
  }
  SimpleGraph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace raag
