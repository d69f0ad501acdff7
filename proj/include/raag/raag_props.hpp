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

// Graph conditions for properties of A_Γ and Out(A_Γ).

#ifndef RAAG_RAAG_PROPS_HPP_
#define RAAG_RAAG_PROPS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/cohen_macaulay.hpp"
#include "raag/graph.hpp"

namespace raag {

struct OutFinitenessReport {
  bool finite = true;
  /// First u (in vertex order) whose star disconnects the rest of the graph.
  std::optional<VertexId> separating_star_witness;
  /// First ordered pair (u, v), u != v, with lk(u) ⊆ st(v).
  std::optional<std::pair<VertexId, VertexId>> domination_witness;
};

/// Out(A_G) is finite iff no star separates and no vertex dominates
/// another. "Γ − st(u) connected" means at most one component. Throws Error
/// for the empty graph.
OutFinitenessReport out_is_finite(const SimpleGraph& g);

/// No ordered pair u != v with lk(u) ⊆ st(v). The witness is the first such
/// pair. Throws Error for the empty graph.
struct TransvectionReport {
  bool transvection_free = true;
  std::optional<std::pair<VertexId, VertexId>> witness;
};

TransvectionReport is_transvection_free(const SimpleGraph& g);

/// Vertices adjacent to every other vertex; they generate Z(A_G).
VertexSet center_vertices(const SimpleGraph& g);

bool is_one_ended(const SimpleGraph& g);

struct FactorCheck {
  OutFinitenessReport out;
  bool noncyclic = false;
  bool connected = false;
  bool trivial_center = false;
  bool one_ended = false;
};

/// Γ = G1 ⊔ G2 and Δ = G1 ⋆ G2. When applicable, Out(A_Γ) has a
/// finite-index subgroup isomorphic to A_Δ.
struct JoinLemmaCertificate {
  SimpleGraph gamma;
  SimpleGraph delta;
  FactorCheck first;
  FactorCheck second;
  bool applicable = false;
};

JoinLemmaCertificate join_lemma_certificate(const SimpleGraph& g1, const SimpleGraph& g2);

enum class VirtualDuality { kNotVirtualDuality, kVirtualDuality, kUnknown };

std::string to_string(VirtualDuality v);

struct VirtualDualityEvidence {
  VirtualDuality verdict = VirtualDuality::kUnknown;
  std::string reason;
  /// Set when the verdict comes from a join-lemma splitting.
  std::optional<JoinLemmaCertificate> certificate;
  /// Vertex sides of the splitting, in the labels of the input graph.
  std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> sides;
  std::optional<DualityVerdict> delta_duality;
  std::optional<OutFinitenessReport> out_finiteness;
};

/// Decides whether Out(A_G) is a virtual duality group when the join
/// lemma or finiteness of Out settles it, and answers kUnknown otherwise.
VirtualDualityEvidence out_virtual_duality_verdict(const SimpleGraph& g);

}  // namespace raag

#endif  // RAAG_RAAG_PROPS_HPP_
