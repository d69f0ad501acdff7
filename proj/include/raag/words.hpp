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

// Words in A_G and pure symmetric automorphisms acting on them.
//
// Elements are reduced by shuffle-and-cancel: a letter cancels against an
// inverse letter when every letter between them commutes with it. The
// reduced representative is the lexicographically least shuffle under the
// (vertex, sign) order, so two words are equal in A_G iff their reductions
// are identical sequences.

#ifndef RAAG_WORDS_HPP_
#define RAAG_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Letter {
  VertexId vertex = 0;
  int sign = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.vertex, -l.sign}; }

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
/// "x0 x3^-1 x1", or "1" for the empty word.
std::string to_string(const Word& w);

/// Thrown when a word or an orbit outgrows its configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

struct WordLimits {
  std::size_t max_length = 512;
  std::size_t max_orbit = 100000;
};

/// Automorphism of A_G given by a partial conjugation: every generator in
/// `support` is conjugated by `actor`. The support is one component of
/// G - st(actor) or a union of such components.
struct PartialConjugation {
  VertexId actor = 0;
  VertexSet support;
  friend bool operator==(const PartialConjugation&, const PartialConjugation&) = default;
};

std::string to_string(const PartialConjugation& p);

class ArtinGroup {
 public:
  explicit ArtinGroup(SimpleGraph graph, WordLimits limits = {});

  const SimpleGraph& graph() const { return graph_; }
  const WordLimits& limits() const { return limits_; }
  int rank() const { return graph_.order(); }

  /// Distinct adjacent generators commute; a generator does not commute
  /// with itself for shuffling purposes.
  bool commute(VertexId u, VertexId v) const { return graph_.adjacent(u, v); }

  Word generator(VertexId v, int sign = 1) const;

  /// Geodesic, canonical representative. Throws ResourceLimitError when the
  /// input exceeds the word cap.
  Word reduce(const Word& w) const;
  Word multiply(const Word& u, const Word& v) const { return reduce(concat(u, v)); }
  bool equal(const Word& u, const Word& v) const;

  /// All words reachable from w by swapping neighbouring commuting letters.
  /// Sorted. Throws ResourceLimitError past the orbit cap.
  std::vector<Word> shuffle_orbit(const Word& w) const;

  /// Splits h = a * b with a over `left` and b over `right`, if possible.
  /// Greedy: strip front-movable `left` letters and back-movable `right`
  /// letters until nothing moves. h is reduced first.
  std::optional<std::pair<Word, Word>> double_coset_factor(const Word& h, const VertexSet& left,
                                                           const VertexSet& right) const;

  /// For a reduced conjugate w * v * w^-1 of v, returns a reduced w.
  std::optional<Word> conjugating_word(const Word& image, VertexId v) const;

 private:
  friend class Automorphism;

  void check(const Word& w) const;
  /// Appends w to the reduced word r, cancelling as it goes.
  void append_cancelling(Word& r, const Word& w) const;
  Word canonical(const Word& r) const;

  SimpleGraph graph_;
  WordLimits limits_;
};

/// Endomorphism of A_G given by generator images; the group must outlive it.
class Automorphism {
 public:
  /// Checks that images of adjacent generators commute.
  Automorphism(const ArtinGroup& group, std::vector<Word> images);

  static Automorphism identity(const ArtinGroup& group);
  /// sign = -1 gives the inverse partial conjugation.
  static Automorphism partial_conjugation(const ArtinGroup& group, const PartialConjugation& p,
                                          int sign = 1);

  const ArtinGroup& group() const { return *group_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(VertexId v) const { return images_.at(v); }

  Word apply(const Word& w) const;

 private:
  const ArtinGroup* group_;
  std::vector<Word> images_;
};

/// (phi o psi)(v) = phi(psi(v)). Throws Error for different groups.
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
bool same_map(const Automorphism& phi, const Automorphism& psi);

/// Conjugator g with phi(v) = g v g^-1 for all v, if one exists. phi must
/// send every generator to a conjugate of itself. With a nontrivial center
/// the conjugator is only defined up to central elements; that needs
/// allow_center. Throws Error on either violated precondition.
std::optional<Word> is_inner(const Automorphism& phi, bool allow_center = false);

/// Whether the two partial conjugations commute in Out(A_G). Central
/// vertices are allowed; they never change the answer.
bool commute_in_out(const ArtinGroup& group, const PartialConjugation& p,
                    const PartialConjugation& q);

/// Vertex i is gens[i]; edges join pairs that commute in Out(A_G).
SimpleGraph commutation_graph(const ArtinGroup& group, const std::vector<PartialConjugation>& gens);

}  // namespace raag

#endif  // RAAG_WORDS_HPP_
