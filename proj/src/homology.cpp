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

#include "raag/homology.hpp"

namespace raag {

HomologyGroup HomologyProfile::degree(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(groups.size())) return {};
  return groups[k + 1];
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
  const int dim = complex.dimension();
  // ranks[k] = rank of the boundary map out of degree k, for k = 0 .. dim;
  // the map out of degree -1 and the one into degree dim are zero.
  std::vector<Eigen::Index> ranks(dim + 2, 0);
  std::vector<std::vector<BigInt>> diagonals(dim + 2);
  for (int k = 0; k <= dim; ++k) {
    auto snf = smith_normal_form<BigInt>(boundary_matrix<BigInt>(complex, k), false);
    ranks[k] = snf.rank;
    diagonals[k] = std::move(snf.diagonal);
  }
  HomologyProfile h;
  h.groups.resize(dim + 2);
  for (int k = -1; k <= dim; ++k) {
    const auto faces = static_cast<Eigen::Index>(complex.faces(k).size());
    const Eigen::Index out_rank = k >= 0 ? ranks[k] : 0;
    const Eigen::Index in_rank = k + 1 <= dim ? ranks[k + 1] : 0;
    HomologyGroup& g = h.groups[k + 1];
    g.free_rank = static_cast<int>(faces - out_rank - in_rank);
    if (k + 1 <= dim) {
      for (const BigInt& d : diagonals[k + 1]) {
        if (d > 1) g.torsion.push_back(d);
      }
    }
  }
  return h;
}

bool concentrated_free_in_degree(const HomologyProfile& h, int n) {
  for (int k = -1; k <= h.top_degree(); ++k) {
    const HomologyGroup g = h.degree(k);
    if (!g.torsion.empty()) return false;
    if (k != n && g.free_rank != 0) return false;
  }
  return true;
}

}  // namespace raag
