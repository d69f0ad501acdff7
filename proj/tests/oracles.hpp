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

// Slow, independent reference computations used to check the library.

#ifndef RAAG_TESTS_ORACLES_HPP_
#define RAAG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "raag/complex.hpp"
#include "raag/graph.hpp"
#include "raag/homology.hpp"
#include "raag/words.hpp"

namespace raag::oracle {

inline std::string fixture_path(const std::string& name) {
  return std::string(RAAG_FIXTURE_DIR) + "/" + name;
}

// Number of isomorphism classes of graphs on n vertices by Burnside's
// lemma: the average over permutations of 2^(cycles on unordered pairs).
inline std::uint64_t burnside_graph_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long double total = 0;
  std::uint64_t perms = 0;
  do {
    ++perms;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (seen[i][j]) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen[std::min(a, b)][std::max(a, b)]) {
          seen[std::min(a, b)][std::max(a, b)] = true;
          a = perm[a];
          b = perm[b];
        }
      }
    }
    total += std::pow(2.0L, cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(std::llround(total / perms));
}

// Upper-triangle adjacency bits under a permutation, as a string.
inline std::string permuted_bits(const SimpleGraph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::string s;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) s.push_back(g.adjacent(inv[i], inv[j]) ? '1' : '0');
  }
  return s;
}

// Lexicographically least adjacency string over all n! relabellings.
inline std::string brute_force_canonical(const SimpleGraph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string s = permuted_bits(g, perm);
    if (first || s < best) best = std::move(s);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

// Every labelled graph on n vertices, by edge mask.
inline SimpleGraph labelled_graph(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Connected components by plain depth-first search.
inline int dfs_component_count(const SimpleGraph& g) {
  std::vector<bool> seen(g.order(), false);
  int count = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < g.order(); ++v) {
        if (g.adjacent(u, v) && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

inline bool is_clique(const SimpleGraph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

// Determinant by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(IntegerMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) return 0;
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Plain triple-loop product.
inline IntegerMatrix product(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix c = IntegerMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

// Rank over Q by fraction-free elimination.
inline Eigen::Index rational_rank(IntegerMatrix m) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(rank).swap(m.row(p));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const BigInt a = m(rank, c), b = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * a - m(rank, j) * b;
    }
    ++rank;
  }
  return rank;
}

// Six-vertex triangulation of the real projective plane.
inline SimplicialComplex projective_plane() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

// Random complex: a few random facets of random sizes on n vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets, int max_size) {
  std::vector<Simplex> fs;
  std::uniform_int_distribution<int> size(1, max_size);
  for (int i = 0; i < facets; ++i) {
    std::vector<int> p = random_permutation(rng, n);
    Simplex s(p.begin(), p.begin() + std::min(n, size(rng)));
    std::sort(s.begin(), s.end());
    fs.push_back(s);
  }
  return SimplicialComplex(n, fs);
}

// Checks the chain-complex identities behind reduced_homology on one
// complex. Returns an empty string when every identity holds.
inline std::string homology_identity_failure(const SimplicialComplex& k) {
  const int top = k.dimension();
  std::vector<IntegerMatrix> d(top + 2);
  std::vector<Eigen::Index> rank(top + 3, 0);
  for (int i = 0; i <= top; ++i) {
    d[i] = boundary_matrix(k, i);
    rank[i] = rational_rank(d[i]);
  }
  for (int i = 1; i <= top; ++i) {
    const IntegerMatrix zero = product(d[i - 1], d[i]);
    for (Eigen::Index r = 0; r < zero.rows(); ++r) {
      for (Eigen::Index c = 0; c < zero.cols(); ++c) {
        if (zero(r, c) != 0) return "boundary squared is nonzero in degree " + std::to_string(i);
      }
    }
  }
  const HomologyProfile h = reduced_homology(k);
  BigInt faces_alt = 0, betti_alt = 0;
  for (int i = -1; i <= top; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;
    const long long f = static_cast<long long>(k.faces(i).size());
    faces_alt += sign * f;
    betti_alt += sign * h.degree(i).free_rank;
    const long long expected = f - (i >= 0 ? rank[i] : 0) - rank[i + 1];
    if (h.degree(i).free_rank != expected) {
      return "free rank in degree " + std::to_string(i) + " disagrees with rational ranks";
    }
  }
  if (faces_alt != betti_alt) return "Euler characteristic mismatch";
  for (int i = 0; i <= top; ++i) {
    const SmithForm<BigInt> s = smith_normal_form(d[i]);
    if (s.rank != rank[i]) return "Smith rank differs from rational rank in degree " + std::to_string(i);
    const IntegerMatrix prod = product(product(s.U, d[i]), s.V);
    for (Eigen::Index r = 0; r < prod.rows(); ++r) {
      for (Eigen::Index c = 0; c < prod.cols(); ++c) {
        const BigInt want = (r == c && r < s.rank) ? s.diagonal[r] : BigInt(0);
        if (prod(r, c) != want) return "U*M*V is not the Smith diagonal in degree " + std::to_string(i);
      }
    }
    const BigInt du = bareiss_determinant(s.U), dv = bareiss_determinant(s.V);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return "non-unimodular transform";
    for (std::size_t j = 0; j < s.diagonal.size(); ++j) {
      if (s.diagonal[j] <= 0) return "non-positive Smith entry";
      if (j + 1 < s.diagonal.size() && s.diagonal[j + 1] % s.diagonal[j] != 0) {
        return "Smith divisibility chain broken";
      }
    }
    std::vector<BigInt> torsion;
    for (const BigInt& x : s.diagonal) {
      if (x > 1) torsion.push_back(x);
    }
    if (h.degree(i - 1).torsion != torsion) return "torsion disagrees in degree " + std::to_string(i - 1);
  }
  return {};
}

// All words obtained from w by swapping neighbouring commuting letters.
inline std::set<Word> orbit_by_swaps(const SimpleGraph& g, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!g.adjacent(cur[i].vertex, cur[i + 1].vertex)) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

// h lies in <left><right> iff some shuffle of reduced h is a left-block
// followed by a right-block.
inline bool orbit_double_coset_member(const ArtinGroup& group, const Word& h,
                                      const VertexSet& left, const VertexSet& right) {
  for (const Word& w : orbit_by_swaps(group.graph(), group.reduce(h))) {
    std::size_t k = 0;
    while (k < w.size() && left.test(w[k].vertex)) ++k;
    // Any split point up to the maximal left prefix may work.
    for (std::size_t split = 0; split <= k; ++split) {
      bool ok = true;
      for (std::size_t i = split; i < w.size() && ok; ++i) ok = right.test(w[i].vertex);
      if (ok) return true;
    }
  }
  return false;
}

// Searches reduced words of length <= max_len over `letters` for g with
// g v g^-1 = phi(v) for every generator v.
inline bool brute_force_inner(const Automorphism& phi, const std::vector<Letter>& letters,
                              int max_len) {
  const ArtinGroup& group = phi.group();
  auto works = [&](const Word& g) {
    const Word gi = inverse(g);
    for (VertexId v = 0; v < group.rank(); ++v) {
      if (!group.equal(concat(concat(g, group.generator(v)), gi), phi.image(v))) return false;
    }
    return true;
  };
  std::function<bool(Word&)> extend = [&](Word& w) {
    if (works(w)) return true;
    if (static_cast<int>(w.size()) == max_len) return false;
    for (const Letter& l : letters) {
      if (!w.empty() && w.back() == inverse(l)) continue;
      w.push_back(l);
      if (extend(w)) return true;
      w.pop_back();
    }
    return false;
  };
  Word w;
  return extend(w);
}

}  // namespace raag::oracle

#endif  // RAAG_TESTS_ORACLES_HPP_
