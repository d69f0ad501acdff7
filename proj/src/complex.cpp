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

#include "raag/complex.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>

namespace raag {

struct SimplicialComplex::FaceCache {
  std::mutex mutex;
  std::vector<std::optional<std::vector<Simplex>>> by_dim;
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<Simplex> facets)
    : ground_size_(ground_size), cache_(std::make_shared<FaceCache>()) {
  for (Simplex& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (VertexId v : f) {
      if (v < 0 || v >= ground_size) throw Error("simplex vertex outside ground set");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const Simplex& f : facets) {
    if (f.empty()) continue;
    const bool dominated = std::any_of(facets.begin(), facets.end(), [&](const Simplex& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!dominated) facets_.push_back(f);
  }
  for (const Simplex& f : facets_) dimension_ = std::max(dimension_, raag::dimension(f));
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
  if (s.empty()) return facets_.empty();
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  if (k < -1 || k > dimension_) throw Error("faces: dimension out of range");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slots = cache_->by_dim;
  if (slots.size() < static_cast<std::size_t>(dimension_ + 2)) slots.resize(dimension_ + 2);
  auto& slot = slots[k + 1];
  if (!slot) {
    std::set<Simplex> found;
    const std::size_t size = static_cast<std::size_t>(k + 1);
    for (const Simplex& f : facets_) {
      if (f.size() < size) continue;
      // Enumerate size-element subsets of f via a selection mask.
      std::vector<bool> pick(f.size(), false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        Simplex s;
        s.reserve(size);
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (pick[i]) s.push_back(f[i]);
        }
        found.insert(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (k == -1) found.insert(Simplex{});
    slot.emplace(found.begin(), found.end());
  }
  return *slot;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (int k = -1; k <= dimension_; ++k) total += faces(k).size();
  return total;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<Simplex>& out) {
  if (p.none() && x.none()) {
    out.push_back(to_vector(r));
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbours in P.
  const VertexSet px = p | x;
  std::size_t pivot = VertexSet::npos;
  std::size_t best = 0;
  for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
    const std::size_t c = (p & g.neighbors(static_cast<VertexId>(u))).count();
    if (pivot == VertexSet::npos || c > best) {
      best = c;
      pivot = u;
    }
  }
  const VertexSet candidates = p - g.neighbors(static_cast<VertexId>(pivot));
  for (auto v = candidates.find_first(); v != VertexSet::npos;
       v = candidates.find_next(v)) {
    const VertexSet& nb = g.neighbors(static_cast<VertexId>(v));
    VertexSet r2 = r;
    r2.set(v);
    bron_kerbosch(g, r2, p & nb, x & nb, out);
    p.reset(v);
    x.set(v);
  }
}

// Repeatedly removes a vertex of minimum remaining degree.
std::vector<VertexId> degeneracy_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<VertexId> order;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    }
    removed[best] = true;
    order.push_back(best);
    const VertexSet& nb = g.neighbors(best);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      --deg[u];
    }
  }
  return order;
}

}  // namespace

std::vector<Simplex> maximal_cliques(const SimpleGraph& g) {
  std::vector<Simplex> out;
  VertexSet p = g.full_set();
  VertexSet x = g.empty_set();
  for (VertexId v : degeneracy_order(g)) {
    const VertexSet& nb = g.neighbors(v);
    VertexSet r = g.empty_set();
    r.set(v);
    bron_kerbosch(g, r, p & nb, x & nb, out);
    p.reset(v);
    x.set(v);
  }
  for (Simplex& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex flag_complex(const SimpleGraph& g) {
  return SimplicialComplex(g.order(), maximal_cliques(g));
}

PurityAndDimension purity_and_dimension(const SimplicialComplex& k) {
  PurityAndDimension out;
  out.dimension = k.dimension();
  out.pure = std::all_of(k.facets().begin(), k.facets().end(), [&](const Simplex& f) {
    return raag::dimension(f) == out.dimension;
  });
  return out;
}

const std::vector<Simplex>& simplices_of_dim(const SimplicialComplex& complex, int k) {
  return complex.faces(k);
}

LinkComplex link_of_simplex(const SimplicialComplex& complex, const Simplex& sigma) {
  Simplex s = sigma;
  std::sort(s.begin(), s.end());
  if (!complex.contains(s)) throw Error("link_of_simplex: simplex is not a face");
  std::vector<Simplex> parts;
  std::vector<bool> used(complex.ground_size(), false);
  for (const Simplex& f : complex.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    for (VertexId v : rest) used[v] = true;
    parts.push_back(std::move(rest));
  }
  LinkComplex out;
  std::vector<int> index(complex.ground_size(), -1);
  for (int v = 0; v < complex.ground_size(); ++v) {
    if (used[v]) {
      index[v] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  for (Simplex& p : parts) {
    for (VertexId& v : p) v = index[v];
  }
  out.complex = SimplicialComplex(static_cast<int>(out.to_parent.size()), std::move(parts));
  return out;
}

int component_count(const SimplicialComplex& complex) {
  const int n = complex.ground_size();
  std::vector<int> parent(n);
  std::vector<bool> present(n, false);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Simplex& f : complex.facets()) {
    for (VertexId v : f) {
      present[v] = true;
      parent[find(v)] = find(f.front());
    }
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (present[v] && find(v) == v) ++count;
  }
  return count;
}

}  // namespace raag
