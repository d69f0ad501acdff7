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

#include "raag/random.hpp"

#include <random>

namespace raag {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t sample_index) {
  return splitmix64(splitmix64(master_seed) ^ (sample_index * 0xd1342543de82ef95ULL));
}

SimpleGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("erdos_renyi: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  SimpleGraph g(n);
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      // 53 random bits mapped to [0, 1); p == 1 always succeeds, p == 0 never.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace raag
