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

// Finite abstract simplicial complexes stored by facets, and the flag
// complex of a graph.
//
// Every complex contains the empty simplex. A complex with no facets is
// therefore {∅}: dimension -1, pure, reduced homology Z in degree -1.

#ifndef RAAG_COMPLEX_HPP_
#define RAAG_COMPLEX_HPP_

#include <memory>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Strictly increasing vertex list. Dimension is size() - 1; the empty
/// list is the empty simplex.
using Simplex = std::vector<VertexId>;

inline int dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

class SimplicialComplex {
 public:
  SimplicialComplex();
  /// Facets are sorted and deduplicated; faces of other facets are dropped.
  /// Throws Error for vertices outside [0, ground_size).
  SimplicialComplex(int ground_size, std::vector<Simplex> facets);

  int ground_size() const { return ground_size_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  int dimension() const { return dimension_; }

  bool contains(const Simplex& s) const;
  bool is_facet(const Simplex& s) const;

  /// All k-faces in lexicographic order; k = -1 gives the empty simplex.
  /// Memoized; safe to call from several threads.
  const std::vector<Simplex>& faces(int k) const;
  std::size_t face_count() const;

 private:
  struct FaceCache;

  int ground_size_ = 0;
  int dimension_ = -1;
  std::vector<Simplex> facets_;
  std::shared_ptr<FaceCache> cache_;
};

/// Inclusion-maximal cliques, each ascending, list in lexicographic order.
/// Isolated vertices give singleton cliques.
std::vector<Simplex> maximal_cliques(const SimpleGraph& g);

SimplicialComplex flag_complex(const SimpleGraph& g);

struct PurityAndDimension {
  int dimension = -1;
  bool pure = true;
};

PurityAndDimension purity_and_dimension(const SimplicialComplex& k);

/// Throws Error unless -1 <= k <= dim(K).
const std::vector<Simplex>& simplices_of_dim(const SimplicialComplex& complex, int k);

struct LinkComplex {
  SimplicialComplex complex;
  /// to_parent[i] is the vertex of the ambient complex relabelled to i.
  std::vector<VertexId> to_parent;
};

/// Throws Error if sigma is not a face.
LinkComplex link_of_simplex(const SimplicialComplex& complex, const Simplex& sigma);

/// Number of connected components of the 1-skeleton (0 for {∅}).
int component_count(const SimplicialComplex& complex);

}  // namespace raag

#endif  // RAAG_COMPLEX_HPP_
