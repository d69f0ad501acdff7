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

// Cohen–Macaulay test for finite simplicial complexes.
//
// A complex of dimension n is Cohen–Macaulay when every facet has
// dimension n, its reduced integral homology is free and concentrated in
// degree n, and for every nonempty non-maximal k-face the same holds for
// its link in degree n - k - 1. The empty simplex is not visited among the
// links: its link is the whole complex, already covered by the global test.

#ifndef RAAG_COHEN_MACAULAY_HPP_
#define RAAG_COHEN_MACAULAY_HPP_

#include <optional>
#include <string>

#include "raag/complex.hpp"
#include "raag/homology.hpp"

namespace raag {

enum class CmMode {
  kFull,
  kPurityOnly,
  kPurityAndConnectivity,
};

enum class CmObstruction {
  kNone,
  kNonPure,
  kGlobalHomology,
  kLinkHomology,
  kDisconnectedPositiveDim,
};

std::string to_string(CmObstruction o);

struct CmWitness {
  /// Offending simplex: a facet of lower dimension for kNonPure, the face
  /// whose link fails for kLinkHomology, empty otherwise.
  Simplex simplex;
  /// Degree in which the homology should have been concentrated.
  int expected_degree = 0;
  std::optional<HomologyProfile> homology;
};

struct CmVerdict {
  bool is_cm = true;
  int dimension = -1;
  CmObstruction obstruction = CmObstruction::kNone;
  std::optional<CmWitness> witness;
};

/// Checks run cheapest first and stop at the first failure. Witness
/// simplices are the lexicographically first offenders.
CmVerdict is_cohen_macaulay(const SimplicialComplex& complex, CmMode mode = CmMode::kFull);

/// A_G is a duality group iff the flag complex of G is Cohen–Macaulay.
struct DualityVerdict {
  bool duality_group = false;
  CmVerdict cm;
};

DualityVerdict raag_duality_verdict(const SimpleGraph& g);

}  // namespace raag

#endif  // RAAG_COHEN_MACAULAY_HPP_
