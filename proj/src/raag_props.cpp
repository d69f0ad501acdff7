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

#include "raag/raag_props.hpp"

#include <algorithm>
#include <cstdint>

namespace raag {

TransvectionReport is_transvection_free(const SimpleGraph& g) {
  if (g.order() == 0) throw Error("is_transvection_free: empty graph");
  TransvectionReport out;
  for (VertexId u = 0; u < g.order(); ++u) {
    const VertexSet& lk = g.neighbors(u);
    for (VertexId v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      if (lk.is_subset_of(star(g, v))) {
        out.transvection_free = false;
        out.witness = {u, v};
        return out;
      }
    }
  }
  return out;
}

OutFinitenessReport out_is_finite(const SimpleGraph& g) {
  if (g.order() == 0) throw Error("out_is_finite: empty graph");
  OutFinitenessReport out;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (components_avoiding(g, star(g, u)).size() > 1) {
      out.separating_star_witness = u;
      break;
    }
  }
  out.domination_witness = is_transvection_free(g).witness;
  out.finite = !out.separating_star_witness && !out.domination_witness;
  return out;
}

VertexSet center_vertices(const SimpleGraph& g) {
  VertexSet c = g.empty_set();
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) c.set(v);
  }
  return c;
}

bool is_one_ended(const SimpleGraph& g) { return g.order() >= 2 && is_connected(g); }

std::string to_string(VirtualDuality v) {
  switch (v) {
    case VirtualDuality::kNotVirtualDuality:
      return "NotVirtualDuality";
    case VirtualDuality::kVirtualDuality:
      return "VirtualDuality";
    case VirtualDuality::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

FactorCheck check_factor(const SimpleGraph& g) {
  FactorCheck f;
  f.noncyclic = g.order() >= 2;
  if (g.order() == 0) {
    f.out.finite = false;
    return f;
  }
  f.out = out_is_finite(g);
  f.connected = is_connected(g);
  f.trivial_center = center_vertices(g).none();
  f.one_ended = is_one_ended(g);
  return f;
}

}  // namespace

JoinLemmaCertificate join_lemma_certificate(const SimpleGraph& g1, const SimpleGraph& g2) {
  JoinLemmaCertificate c;
  c.gamma = disjoint_union(g1, g2);
  c.delta = join(g1, g2);
  c.first = check_factor(g1);
  c.second = check_factor(g2);
  c.applicable = c.first.noncyclic && c.first.out.finite && c.second.noncyclic &&
                 c.second.out.finite;
  return c;
}

VirtualDualityEvidence out_virtual_duality_verdict(const SimpleGraph& g) {
  VirtualDualityEvidence ev;
  if (g.order() == 0) {
    ev.verdict = VirtualDuality::kVirtualDuality;
    ev.reason = "trivial group";
    return ev;
  }
  const auto comps = connected_components(g);
  const std::size_t c = comps.size();
  if (c >= 2 && c <= 20) {
    // Component 0 always sits on the first side; every other assignment is
    // one bipartition.
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (c - 1)); ++mask) {
      std::vector<VertexId> side_a = comps[0], side_b;
      for (std::size_t i = 1; i < c; ++i) {
        auto& side = ((mask >> (i - 1)) & 1) ? side_a : side_b;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
      }
      std::sort(side_a.begin(), side_a.end());
      std::sort(side_b.begin(), side_b.end());
      const SimpleGraph g1 = induced_subgraph(g, make_set(g.order(), side_a)).graph;
      const SimpleGraph g2 = induced_subgraph(g, make_set(g.order(), side_b)).graph;
      JoinLemmaCertificate cert = join_lemma_certificate(g1, g2);
      if (!cert.applicable) continue;
      DualityVerdict dv = raag_duality_verdict(cert.delta);
      ev.verdict = dv.duality_group ? VirtualDuality::kVirtualDuality
                                    : VirtualDuality::kNotVirtualDuality;
      ev.reason = dv.duality_group
                      ? "Out is virtually the RAAG of the join of the sides, a duality group"
                      : "Out is virtually the RAAG of the join of the sides, whose flag complex "
                        "is not Cohen-Macaulay (" +
                            to_string(dv.cm.obstruction) + ")";
      ev.certificate = std::move(cert);
      ev.sides = {side_a, side_b};
      ev.delta_duality = std::move(dv);
      return ev;
    }
  }
  ev.out_finiteness = out_is_finite(g);
  if (ev.out_finiteness->finite) {
    ev.verdict = VirtualDuality::kVirtualDuality;
    ev.reason = "Out is finite";
  } else {
    ev.verdict = VirtualDuality::kUnknown;
    ev.reason = "no certificate applies";
  }
  return ev;
}

}  // namespace raag
