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

#include "raag/cohen_macaulay.hpp"

#include <algorithm>

namespace raag {

std::string to_string(CmObstruction o) {
  switch (o) {
    case CmObstruction::kNone:
      return "None";
    case CmObstruction::kNonPure:
      return "NonPure";
    case CmObstruction::kGlobalHomology:
      return "GlobalHomology";
    case CmObstruction::kLinkHomology:
      return "LinkHomology";
    case CmObstruction::kDisconnectedPositiveDim:
      return "DisconnectedPositiveDim";
  }
  return "Unknown";
}

namespace {

CmVerdict fail(int dim, CmObstruction o, CmWitness w) {
  CmVerdict v;
  v.is_cm = false;
  v.dimension = dim;
  v.obstruction = o;
  v.witness = std::move(w);
  return v;
}

}  // namespace

CmVerdict is_cohen_macaulay(const SimplicialComplex& complex, CmMode mode) {
  const int dim = complex.dimension();
  CmVerdict ok;
  ok.dimension = dim;

  for (const Simplex& f : complex.facets()) {
    if (dimension(f) != dim) {
      return fail(dim, CmObstruction::kNonPure, CmWitness{f, dim, std::nullopt});
    }
  }
  if (mode == CmMode::kPurityOnly) return ok;

  if (mode == CmMode::kPurityAndConnectivity) {
    if (dim >= 1 && component_count(complex) > 1) {
      return fail(dim, CmObstruction::kDisconnectedPositiveDim, CmWitness{{}, dim, std::nullopt});
    }
    return ok;
  }

  HomologyProfile global = reduced_homology(complex);
  if (!concentrated_free_in_degree(global, dim)) {
    return fail(dim, CmObstruction::kGlobalHomology, CmWitness{{}, dim, std::move(global)});
  }

  std::vector<Simplex> faces;
  for (int k = 0; k < dim; ++k) {
    for (const Simplex& s : complex.faces(k)) {
      if (!complex.is_facet(s)) faces.push_back(s);
    }
  }
  std::sort(faces.begin(), faces.end());
  for (const Simplex& s : faces) {
    const int expected = dim - dimension(s) - 1;
    HomologyProfile h = reduced_homology(link_of_simplex(complex, s).complex);
    if (!concentrated_free_in_degree(h, expected)) {
      return fail(dim, CmObstruction::kLinkHomology, CmWitness{s, expected, std::move(h)});
    }
  }
  return ok;
}

DualityVerdict raag_duality_verdict(const SimpleGraph& g) {
  DualityVerdict out;
  out.cm = is_cohen_macaulay(flag_complex(g), CmMode::kFull);
  out.duality_group = out.cm.is_cm;
  return out;
}

}  // namespace raag
