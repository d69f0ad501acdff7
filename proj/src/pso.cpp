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

#include "raag/pso.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace raag {

std::vector<CatalogEntry> partial_conjugation_catalog(const SimpleGraph& g) {
  std::vector<CatalogEntry> out;
  for (VertexId x = 0; x < g.order(); ++x) {
    const auto comps = components_avoiding(g, star(g, x));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CatalogEntry e;
      e.conjugation = {x, comps[i]};
      e.redundant = comps.size() == 1;
      e.droppable = i == 0;
      out.push_back(std::move(e));
    }
  }
  return out;
}

SupportGraph support_graph(const SimpleGraph& g, VertexId a) {
  if (a < 0 || a >= g.order()) throw Error("support_graph: vertex out of range");
  SupportGraph s;
  s.base_vertex = a;
  s.components = components_avoiding(g, star(g, a));
  const int m = static_cast<int>(s.components.size());
  s.graph = SimpleGraph(m);
  std::vector<int> owner(g.order(), -1);
  for (int i = 0; i < m; ++i) {
    for (VertexId v : to_vector(s.components[i])) owner[v] = i;
  }
  for (VertexId b = 0; b < g.order(); ++b) {
    if (owner[b] < 0) continue;
    for (const VertexSet& c : components_avoiding(g, star(g, b))) {
      const int i = owner[c.find_first()];
      if (i >= 0 && i != owner[b] && s.components[i] == c) s.graph.add_edge(i, owner[b]);
    }
  }
  return s;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<int> tree_path(const SimpleGraph& forest, int from, int to) {
  std::vector<int> prev(forest.order(), -1);
  std::queue<int> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (VertexId v : to_vector(forest.neighbors(u))) {
      if (prev[v] < 0) {
        prev[v] = u;
        q.push(v);
      }
    }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ForestReport all_supports_forests(const SimpleGraph& g) {
  ForestReport report;
  for (VertexId a = 0; a < g.order(); ++a) {
    const SupportGraph s = support_graph(g, a);
    const int m = s.graph.order();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    SimpleGraph forest(m);
    for (const Edge& e : s.graph.edges()) {
      const int ru = find_root(parent, e.first);
      const int rv = find_root(parent, e.second);
      if (ru == rv) {
        report.all_forests = false;
        report.base_vertex = a;
        report.cycle = tree_path(forest, e.first, e.second);
        return report;
      }
      parent[ru] = rv;
      forest.add_edge(e.first, e.second);
    }
  }
  return report;
}

std::vector<PartialConjugation> theta_generators(const SimpleGraph& g, RootChoice root) {
  std::vector<PartialConjugation> gens;
  for (VertexId a = 0; a < g.order(); ++a) {
    const SupportGraph s = support_graph(g, a);
    const int m = s.graph.order();
    if (m <= 1) continue;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (root == RootChoice::kLargest) std::reverse(order.begin(), order.end());

    std::vector<int> parent(m, -2);
    std::vector<int> bfs;
    std::vector<int> roots;
    for (int r : order) {
      if (parent[r] != -2) continue;
      roots.push_back(r);
      parent[r] = -1;
      std::size_t head = bfs.size();
      bfs.push_back(r);
      while (head < bfs.size()) {
        const int u = bfs[head++];
        for (VertexId v : to_vector(s.graph.neighbors(u))) {
          if (parent[v] != -2) continue;
          parent[v] = u;
          bfs.push_back(v);
        }
      }
    }
    if (bfs.size() != static_cast<std::size_t>(m)) {
      throw Error("theta_generators: support graph of x" + std::to_string(a) + " has a cycle");
    }
    std::vector<VertexSet> below(s.components);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
      if (parent[*it] >= 0) below[parent[*it]] |= below[*it];
    }
    std::vector<PartialConjugation> mine;
    for (int c = 0; c < m; ++c) {
      if (parent[c] >= 0) mine.push_back({a, below[c]});
    }
    for (std::size_t t = 1; t < roots.size(); ++t) mine.push_back({a, below[roots[t]]});
    std::sort(mine.begin(), mine.end(), [](const PartialConjugation& p, const PartialConjugation& q) {
      return to_vector(p.support) < to_vector(q.support);
    });
    gens.insert(gens.end(), mine.begin(), mine.end());
  }
  return gens;
}

std::string to_string(ThetaBackend b) {
  return b == ThetaBackend::kCombinatorial ? "combinatorial" : "word_oracle";
}

bool generators_commute(const SimpleGraph& g, const PartialConjugation& p,
                        const PartialConjugation& q) {
  const VertexId a = p.actor;
  const VertexId b = q.actor;
  if (a == b || g.adjacent(a, b)) return true;
  const VertexSet off_a = ~star(g, a);
  const VertexSet off_b = ~star(g, b);
  const VertexSet u = p.support.test(b) ? off_a - p.support : p.support;
  const VertexSet w = q.support.test(a) ? off_b - q.support : q.support;
  const VertexSet both = u & w;
  if (both.none()) return true;
  const auto comps_b = components_avoiding(g, star(g, b));
  for (const VertexSet& c : components_avoiding(g, star(g, a))) {
    if (!c.intersects(both)) continue;
    if (std::find(comps_b.begin(), comps_b.end(), c) != comps_b.end()) return false;
  }
  return true;
}

ThetaResult theta_graph(const SimpleGraph& g, ThetaBackend backend, RootChoice root,
                        WordLimits limits) {
  const ForestReport forests = all_supports_forests(g);
  if (!forests.all_forests) {
    throw Error("theta_graph: support graph of x" + std::to_string(*forests.base_vertex) +
                " has a cycle");
  }
  ThetaResult out;
  out.backend = backend;
  out.generator_labels = theta_generators(g, root);
  const int k = static_cast<int>(out.generator_labels.size());
  if (backend == ThetaBackend::kWordOracle) {
    const ArtinGroup group(g, limits);
    out.theta = commutation_graph(group, out.generator_labels);
    return out;
  }
  out.theta = SimpleGraph(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (generators_commute(g, out.generator_labels[i], out.generator_labels[j])) {
        out.theta.add_edge(i, j);
      }
    }
  }
  return out;
}

}  // namespace raag
