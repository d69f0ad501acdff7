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

#include "raag/graph6.hpp"

#include <cstdint>

namespace raag {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw ParseError(std::string("graph6: character outside printable range: '") +
                     c + "'");
  }
  return c - 63;
}

}  // namespace

GraphCode encode_graph6(const SimpleGraph& g) {
  GraphCode code;
  const int n = g.order();
  put_order(code.text, static_cast<std::uint64_t>(n));
  int acc = 0;
  int bits = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        code.text.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) code.text.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return code;
}

SimpleGraph decode_graph6(std::string_view code) {
  if (code.substr(0, kHeader.size()) == kHeader) code.remove_prefix(kHeader.size());
  while (!code.empty() && (code.back() == '\n' || code.back() == '\r')) {
    code.remove_suffix(1);
  }
  if (code.empty()) throw ParseError("graph6: empty code");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    if (pos + count > code.size()) throw ParseError("graph6: truncated order");
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | sextet(code[pos++]);
    return v;
  };
  if (code[0] != '~') {
    n = take(1);
  } else if (code.size() > 1 && code[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > (1u << 20)) throw ParseError("graph6: order too large");
  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nchars = (nbits + 5) / 6;
  if (code.size() - pos < nchars) throw ParseError("graph6: truncated bit stream");
  if (code.size() - pos > nchars) throw ParseError("graph6: trailing characters");
  SimpleGraph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (VertexId j = 1; j < static_cast<VertexId>(n); ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const int s = sextet(code[pos + bit / 6]);
      if ((s >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::uint64_t k = pos; k < code.size(); ++k) sextet(code[k]);
  return g;
}

}  // namespace raag
