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

#include "raag/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <future>
#include <numeric>
#include <unordered_set>

namespace raag {
namespace {

using Mask = std::uint64_t;
constexpr int kMaxN = kCanonicalMaxOrder;
constexpr int kMaxCodeWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;
constexpr int kMaxStoredAutomorphisms = 64;

struct Code {
  std::array<std::uint64_t, kMaxCodeWords> words{};
  int used = 0;

  friend bool operator==(const Code& a, const Code& b) {
    return std::equal(a.words.begin(), a.words.begin() + a.used, b.words.begin());
  }
  friend bool operator<(const Code& a, const Code& b) {
    return std::lexicographical_compare(a.words.begin(), a.words.begin() + a.used,
                                        b.words.begin(), b.words.begin() + b.used);
  }
};

using Labels = std::array<int, kMaxN>;

// Ordered partition: lab lists vertices by position, begins[i] marks the
// first position of a cell.
struct Partition {
  Labels lab;
  std::array<bool, kMaxN + 1> begins;
};

class Canonizer {
 public:
  Canonizer(int n, const Mask* adj, const int* colors) : n_(n), adj_(adj) {
    Partition p;
    std::iota(p.lab.begin(), p.lab.begin() + n_, 0);
    p.begins.fill(false);
    p.begins[0] = true;
    p.begins[n_] = true;
    if (colors != nullptr) {
      std::stable_sort(p.lab.begin(), p.lab.begin() + n_,
                       [&](int a, int b) { return colors[a] < colors[b]; });
      for (int i = 1; i < n_; ++i) {
        if (colors[p.lab[i]] != colors[p.lab[i - 1]]) p.begins[i] = true;
      }
    }
    code_words_ = (n_ * (n_ - 1) / 2 + 63) / 64;
    if (n_ == 0) {
      have_leaf_ = true;
      best_.used = 0;
      return;
    }
    search(p, 0);
  }

  const Labels& best_labels() const { return best_lab_; }
  const Code& best_code() const { return best_; }

 private:
  int cell_end(const Partition& p, int start) const {
    int e = start + 1;
    while (!p.begins[e]) ++e;
    return e;  // one past the last position
  }

  void refine(Partition& p) const {
    std::array<std::pair<int, int>, kMaxN> keyed;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_ && !changed; ws = cell_end(p, ws)) {
        const int we = cell_end(p, ws);
        Mask splitter = 0;
        for (int k = ws; k < we; ++k) splitter |= Mask{1} << p.lab[k];
        for (int xs = 0; xs < n_; xs = cell_end(p, xs)) {
          const int xe = cell_end(p, xs);
          if (xe - xs == 1) continue;
          bool uniform = true;
          for (int k = xs; k < xe; ++k) {
            keyed[k] = {std::popcount(adj_[p.lab[k]] & splitter), p.lab[k]};
            if (keyed[k].first != keyed[xs].first) uniform = false;
          }
          if (uniform) continue;
          std::stable_sort(keyed.begin() + xs, keyed.begin() + xe,
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          for (int k = xs; k < xe; ++k) {
            p.lab[k] = keyed[k].second;
            if (k > xs && keyed[k].first != keyed[k - 1].first) p.begins[k] = true;
          }
          changed = true;
          break;
        }
      }
    }
  }

  Code leaf_code(const Labels& lab) const {
    Code c;
    c.used = code_words_;
    int bit = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = adj_[lab[j]];
      for (int i = 0; i < j; ++i, ++bit) {
        if ((row >> lab[i]) & 1) c.words[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
      }
    }
    return c;
  }

  void record_automorphism(const Labels& from, const Labels& to) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    Labels gamma;
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) automorphisms_.push_back(gamma);
  }

  void leaf(const Labels& lab) {
    const Code c = leaf_code(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = c;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (c < best_) {
      best_ = c;
      best_lab_ = lab;
    } else if (c == best_) {
      record_automorphism(lab, best_lab_);
    }
    if (c == first_) record_automorphism(lab, first_lab_);
  }

  int find(std::array<int, kMaxN>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // first `depth` branch vertices.
  void stabilizer_orbits(int depth, std::array<int, kMaxN>& parent) const {
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (const Labels& g : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = g[prefix_[d]] == prefix_[d];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v), b = find(parent, g[v]);
        if (a != b) parent[a] = b;
      }
    }
  }

  void search(Partition p, int depth) {
    refine(p);
    int ts = 0;
    while (ts < n_ && cell_end(p, ts) - ts == 1) ++ts;
    if (ts == n_) {
      leaf(p.lab);
      return;
    }
    const int te = cell_end(p, ts);
    const std::vector<int> cell(p.lab.begin() + ts, p.lab.begin() + te);
    std::vector<int> explored;
    std::array<int, kMaxN> parent;
    std::size_t orbit_generators = static_cast<std::size_t>(-1);
    for (int v : cell) {
      if (!explored.empty()) {
        if (orbit_generators != automorphisms_.size()) {
          stabilizer_orbits(depth, parent);
          orbit_generators = automorphisms_.size();
        }
        const int root = find(parent, v);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int e) { return find(parent, e) == root; })) {
          continue;
        }
      }
      Partition child = p;
      const auto it = std::find(child.lab.begin() + ts, child.lab.begin() + te, v);
      std::iter_swap(child.lab.begin() + ts, it);
      child.begins[ts + 1] = true;
      prefix_[depth] = v;
      search(child, depth + 1);
      explored.push_back(v);
    }
  }

  int n_;
  const Mask* adj_;
  int code_words_ = 0;
  bool have_leaf_ = false;
  Code first_, best_;
  Labels first_lab_{}, best_lab_{};
  std::vector<Labels> automorphisms_;
  std::array<int, kMaxN> prefix_{};
};

std::vector<Mask> to_masks(const SimpleGraph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

SimpleGraph from_masks(int n, const Mask* adj) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((adj[u] >> v) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

// Relabels adj so that position i holds vertex lab[i].
void relabel(int n, const Mask* adj, const Labels& lab, Mask* out) {
  Labels pos;
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  for (int i = 0; i < n; ++i) {
    Mask row = 0;
    const Mask src = adj[lab[i]];
    for (int j = 0; j < n; ++j) {
      if ((src >> lab[j]) & 1) row |= Mask{1} << j;
    }
    out[i] = row;
  }
}

// Children of one canonical parent on k vertices, accepted by the
// canonical-deletion rule and deduplicated among siblings.
std::vector<std::array<Mask, kEnumerationMaxOrder>> augment(
    int k, const std::array<Mask, kEnumerationMaxOrder>& parent) {
  std::vector<std::array<Mask, kEnumerationMaxOrder>> out;
  std::vector<Code> seen;
  const int n = k + 1;
  std::array<Mask, kEnumerationMaxOrder> child{};
  std::array<int, kEnumerationMaxOrder> colors{};
  for (Mask subset = 0; subset < (Mask{1} << k); ++subset) {
    for (int u = 0; u < k; ++u) {
      child[u] = parent[u] | (((subset >> u) & 1) << k);
    }
    child[k] = subset;
    const Canonizer canon(n, child.data(), nullptr);
    const int last = canon.best_labels()[n - 1];
    if (last != k) {
      if (std::popcount(child[last]) != std::popcount(child[k])) continue;
      colors.fill(1);
      colors[k] = 0;
      const Canonizer added(n, child.data(), colors.data());
      colors[k] = 1;
      colors[last] = 0;
      const Canonizer deleted(n, child.data(), colors.data());
      if (!(added.best_code() == deleted.best_code())) continue;
    }
    if (std::find(seen.begin(), seen.end(), canon.best_code()) != seen.end()) continue;
    seen.push_back(canon.best_code());
    std::array<Mask, kEnumerationMaxOrder> relabeled{};
    relabel(n, child.data(), canon.best_labels(), relabeled.data());
    out.push_back(relabeled);
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g, const std::vector<int>& colors) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) {
    throw Error("canonical_labeling: order " + std::to_string(n) + " exceeds limit " +
                std::to_string(kCanonicalMaxOrder));
  }
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw Error("canonical_labeling: one colour per vertex required");
  }
  const std::vector<Mask> adj = to_masks(g);
  const Canonizer canon(n, adj.data(), colors.empty() ? nullptr : colors.data());
  CanonicalLabeling out;
  out.order.assign(canon.best_labels().begin(), canon.best_labels().begin() + n);
  std::vector<VertexId> perm(n);
  for (int i = 0; i < n; ++i) perm[out.order[i]] = i;
  out.graph = permute(g, perm);
  out.code = encode_graph6(out.graph);
  return out;
}

GraphCode canonical_form(const SimpleGraph& g) { return canonical_labeling(g).code; }

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

void for_each_nonisomorphic(int n, const std::function<void(const SimpleGraph&)>& fn,
                            int jobs) {
  if (n < 0 || n > kEnumerationMaxOrder) {
    throw Error("enumerate_nonisomorphic: order must lie in [0, " +
                std::to_string(kEnumerationMaxOrder) + "]");
  }
  using Rows = std::array<Mask, kEnumerationMaxOrder>;
  if (n == 0) {
    fn(SimpleGraph(0));
    return;
  }
  std::vector<Rows> level(1, Rows{});
  jobs = std::max(jobs, 1);
  for (int k = 1; k < n; ++k) {
    const bool last_level = k + 1 == n;
    std::vector<Rows> next;
    // Parents are processed in blocks; each block is split across workers
    // and reassembled in parent order.
    constexpr std::size_t kBlock = 512;
    for (std::size_t begin = 0; begin < level.size(); begin += kBlock) {
      const std::size_t end = std::min(level.size(), begin + kBlock);
      std::vector<std::vector<Rows>> produced(end - begin);
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) produced[i - begin] = augment(k, level[i]);
      };
      if (jobs == 1) {
        work(begin, end);
      } else {
        std::vector<std::future<void>> tasks;
        const std::size_t chunk = (end - begin + jobs - 1) / jobs;
        for (std::size_t lo = begin; lo < end; lo += chunk) {
          tasks.push_back(std::async(std::launch::async, work, lo, std::min(end, lo + chunk)));
        }
        for (auto& t : tasks) t.get();
      }
      for (auto& block : produced) {
        for (auto& rows : block) {
          if (last_level) {
            fn(from_masks(n, rows.data()));
          } else {
            next.push_back(rows);
          }
        }
      }
    }
    if (!last_level) level = std::move(next);
  }
  if (n == 1) fn(SimpleGraph(1));
}

std::vector<SimpleGraph> enumerate_nonisomorphic(int n, int jobs) {
  std::vector<SimpleGraph> out;
  for_each_nonisomorphic(n, [&](const SimpleGraph& g) { out.push_back(g); }, jobs);
  return out;
}

}  // namespace raag
