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

// graph6 codec (the printable 6-bit format used by nauty and the standard
// graph corpora). Encoding never emits the ">>graph6<<" header; decoding
// accepts it.

#ifndef RAAG_GRAPH6_HPP_
#define RAAG_GRAPH6_HPP_

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "raag/graph.hpp"

namespace raag {

/// Serialized graph. Equal codes mean equal labelled graphs; when produced
/// by canonical_form, equal codes mean isomorphic graphs.
struct GraphCode {
  std::string text;

  friend auto operator<=>(const GraphCode&, const GraphCode&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GraphCode& c) {
    return os << c.text;
  }
};

GraphCode encode_graph6(const SimpleGraph& g);
/// Throws ParseError on characters outside '?'..'~' or a truncated stream.
SimpleGraph decode_graph6(std::string_view code);
inline SimpleGraph decode_graph6(const GraphCode& code) {
  return decode_graph6(std::string_view(code.text));
}

}  // namespace raag

template <>
struct std::hash<raag::GraphCode> {
  std::size_t operator()(const raag::GraphCode& c) const noexcept {
    return std::hash<std::string>{}(c.text);
  }
};

#endif  // RAAG_GRAPH6_HPP_
