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

// Seeded G(n, p) sampling.
//
// Every sample is driven by std::mt19937_64 seeded with
// sample_seed(master, index), a SplitMix64 mix of the master seed and the
// sample index. Samples are therefore independent of which worker draws
// them. Bit-for-bit reproducibility holds within one release.

#ifndef RAAG_RANDOM_HPP_
#define RAAG_RANDOM_HPP_

#include <cstdint>

#include "raag/graph.hpp"

namespace raag {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Stream-split rule for per-sample seeds.
std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t sample_index);

/// Each of the n(n-1)/2 pairs becomes an edge independently with
/// probability p. Throws Error unless 0 <= p <= 1.
SimpleGraph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace raag

#endif  // RAAG_RANDOM_HPP_
