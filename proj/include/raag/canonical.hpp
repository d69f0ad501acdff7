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

// Canonical labelling by individualization-refinement and isomorph-free
// generation of small graphs by canonical augmentation.
//
// The search refines an ordered partition to an equitable one, branches on
// the first non-singleton cell, and keeps the leaf whose graph6 bit string
// is lexicographically least. Automorphisms discovered at equal leaves
// prune sibling branches lying in one orbit of the pointwise stabilizer of
// the current branch prefix.

#ifndef RAAG_CANONICAL_HPP_
#define RAAG_CANONICAL_HPP_

#include <functional>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph6.hpp"

namespace raag {

inline constexpr int kCanonicalMaxOrder = 64;
inline constexpr int kEnumerationMaxOrder = 9;

struct CanonicalLabeling {
  /// order[i] is the input vertex placed at canonical position i.
  std::vector<VertexId> order;
  SimpleGraph graph;
  GraphCode code;
};

/// Vertices of different colour are never mapped onto each other, and the
/// colour classes appear in ascending colour order. Throws Error above
/// kCanonicalMaxOrder.
CanonicalLabeling canonical_labeling(const SimpleGraph& g,
                                     const std::vector<int>& colors = {});

GraphCode canonical_form(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// One canonical representative per isomorphism class of graphs on exactly
/// n vertices, in a deterministic order. jobs > 1 spreads the last level
/// over worker threads without changing the output order. Throws Error for
/// n outside [0, kEnumerationMaxOrder].
void for_each_nonisomorphic(int n, const std::function<void(const SimpleGraph&)>& fn,
                            int jobs = 1);

std::vector<SimpleGraph> enumerate_nonisomorphic(int n, int jobs = 1);

}  // namespace raag

#endif  // RAAG_CANONICAL_HPP_
