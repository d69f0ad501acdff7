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

// Partial conjugations, support graphs and the graph Theta with
// PSO(A_G) = A_Theta.
//
// For a vertex a let C_1, ..., C_m be the components of G - st(a), ordered
// by smallest member. Components C_i and C_j of G - st(a) are joined in the
// support graph of a when some b in C_j has C_i as a component of G - st(b)
// too, or the same holds with i and j exchanged.
//
// When every support graph is a forest, PSO(A_G) is a RAAG. Generators:
// root every tree of the support graph of a at its smallest component. Each
// non-root component C contributes the conjugation of the union of the
// subtree below C, and each tree other than the one holding the smallest
// vertex of G - st(a) contributes the conjugation of the whole tree. That is
// m - 1 generators for a.
//
// Two generators (a, U) and (b, W) commute in Out(A_G) iff a = b, a ~ b, or
// the following holds. Replace U by its complement in G - st(a) when U holds
// b, and W by its complement in G - st(b) when W holds a. Then no component
// shared by G - st(a) and G - st(b) lies in both.

#ifndef RAAG_PSO_HPP_
#define RAAG_PSO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace raag {

struct CatalogEntry {
  PartialConjugation conjugation;
  /// G - st(actor) is connected, so the conjugation is inner.
  bool redundant = false;
  /// The component holding the smallest vertex of G - st(actor); the product
  /// of all conjugations by the actor is inner.
  bool droppable = false;
};

/// One entry per (vertex, component of G - st(vertex)), by vertex then by
/// smallest component member.
std::vector<CatalogEntry> partial_conjugation_catalog(const SimpleGraph& g);

struct SupportGraph {
  VertexId base_vertex = 0;
  std::vector<VertexSet> components;
  SimpleGraph graph;
};

SupportGraph support_graph(const SimpleGraph& g, VertexId a);

struct ForestReport {
  bool all_forests = true;
  std::optional<VertexId> base_vertex;
  /// Component indices around the first cycle found, in cycle order.
  std::vector<int> cycle;
};

ForestReport all_supports_forests(const SimpleGraph& g);
/// PSO(A_G) is a RAAG iff every support graph is a forest.
inline ForestReport pso_is_raag(const SimpleGraph& g) { return all_supports_forests(g); }

/// Which end of each vertex's component list anchors the generating set.
enum class RootChoice { kSmallest, kLargest };

/// Generators of PSO(A_G) as a RAAG. Requires every support graph to be a
/// forest; throws Error otherwise.
std::vector<PartialConjugation> theta_generators(const SimpleGraph& g,
                                                 RootChoice root = RootChoice::kSmallest);

enum class ThetaBackend { kCombinatorial, kWordOracle };

std::string to_string(ThetaBackend b);

struct ThetaResult {
  SimpleGraph theta;
  std::vector<PartialConjugation> generator_labels;
  ThetaBackend backend = ThetaBackend::kCombinatorial;
};

/// Throws Error when a support graph has a cycle, and ResourceLimitError
/// when the word oracle outgrows its caps.
ThetaResult theta_graph(const SimpleGraph& g, ThetaBackend backend = ThetaBackend::kCombinatorial,
                        RootChoice root = RootChoice::kSmallest, WordLimits limits = {});

/// The commutation rule for two generators, as used by the combinatorial
/// backend.
bool generators_commute(const SimpleGraph& g, const PartialConjugation& p,
                        const PartialConjugation& q);

}  // namespace raag

#endif  // RAAG_PSO_HPP_
