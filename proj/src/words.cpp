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

#include "raag/words.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "raag/raag_props.hpp"

namespace raag {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << w[i].vertex;
    if (w[i].sign < 0) os << "^-1";
  }
  return os.str();
}

std::string to_string(const PartialConjugation& p) {
  std::ostringstream os;
  os << 'x' << p.actor << ":{";
  bool first = true;
  for (VertexId v : to_vector(p.support)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

ArtinGroup::ArtinGroup(SimpleGraph graph, WordLimits limits)
    : graph_(std::move(graph)), limits_(limits) {}

Word ArtinGroup::generator(VertexId v, int sign) const {
  if (v < 0 || v >= rank()) throw Error("generator out of range");
  return {Letter{v, sign < 0 ? -1 : 1}};
}

void ArtinGroup::check(const Word& w) const {
  if (w.size() > limits_.max_length) {
    throw ResourceLimitError("word length " + std::to_string(w.size()) + " exceeds cap " +
                             std::to_string(limits_.max_length));
  }
  for (const Letter& l : w) {
    if (l.vertex < 0 || l.vertex >= rank() || (l.sign != 1 && l.sign != -1)) {
      throw Error("letter outside the generating set");
    }
  }
}

void ArtinGroup::append_cancelling(Word& r, const Word& w) const {
  for (const Letter& l : w) {
    bool cancelled = false;
    for (std::size_t j = r.size(); j-- > 0;) {
      if (r[j].vertex == l.vertex) {
        if (r[j].sign != l.sign) {
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!commute(r[j].vertex, l.vertex)) break;
    }
    if (!cancelled) {
      r.push_back(l);
      if (r.size() > limits_.max_length) check(r);
    }
  }
}

Word ArtinGroup::canonical(const Word& r) const {
  Word out;
  out.reserve(r.size());
  std::vector<bool> used(r.size(), false);
  while (out.size() < r.size()) {
    VertexSet seen = graph_.empty_set();
    std::size_t best = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (used[i]) continue;
      const VertexId v = r[i].vertex;
      if (seen.is_subset_of(graph_.neighbors(v)) && (best == r.size() || r[i] < r[best])) {
        best = i;
      }
      seen.set(v);
    }
    used[best] = true;
    out.push_back(r[best]);
  }
  return out;
}

Word ArtinGroup::reduce(const Word& w) const {
  check(w);
  Word r;
  r.reserve(w.size());
  append_cancelling(r, w);
  return canonical(r);
}

bool ArtinGroup::equal(const Word& u, const Word& v) const { return reduce(u) == reduce(v); }

std::vector<Word> ArtinGroup::shuffle_orbit(const Word& w) const {
  check(w);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!commute(cur[i].vertex, cur[i + 1].vertex)) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > limits_.max_orbit) {
          throw ResourceLimitError("shuffle orbit exceeds cap " +
                                   std::to_string(limits_.max_orbit));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Index of the first letter that commutes past everything before it and
// satisfies pred, or w.size().
template <typename Pred>
std::size_t find_front(const ArtinGroup& g, const Word& w, Pred pred) {
  VertexSet seen = g.graph().empty_set();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const VertexId v = w[i].vertex;
    if (seen.is_subset_of(g.graph().neighbors(v)) && pred(i)) return i;
    seen.set(v);
  }
  return w.size();
}

template <typename Pred>
std::size_t find_back(const ArtinGroup& g, const Word& w, Pred pred) {
  VertexSet seen = g.graph().empty_set();
  for (std::size_t i = w.size(); i-- > 0;) {
    const VertexId v = w[i].vertex;
    if (seen.is_subset_of(g.graph().neighbors(v)) && pred(i)) return i;
    seen.set(v);
  }
  return w.size();
}

void erase_at(Word& w, std::size_t i) { w.erase(w.begin() + static_cast<std::ptrdiff_t>(i)); }

}  // namespace

std::optional<std::pair<Word, Word>> ArtinGroup::double_coset_factor(const Word& h,
                                                                     const VertexSet& left,
                                                                     const VertexSet& right) const {
  Word r = reduce(h);
  Word a, b_reversed;
  bool moved = true;
  while (moved && !r.empty()) {
    moved = false;
    for (;;) {
      const std::size_t i = find_front(*this, r, [&](std::size_t k) { return left.test(r[k].vertex); });
      if (i == r.size()) break;
      a.push_back(r[i]);
      erase_at(r, i);
      moved = true;
    }
    for (;;) {
      const std::size_t i = find_back(*this, r, [&](std::size_t k) { return right.test(r[k].vertex); });
      if (i == r.size()) break;
      b_reversed.push_back(r[i]);
      erase_at(r, i);
      moved = true;
    }
  }
  if (!r.empty()) return std::nullopt;
  return std::make_pair(reduce(a), reduce(Word(b_reversed.rbegin(), b_reversed.rend())));
}

std::optional<Word> ArtinGroup::conjugating_word(const Word& image, VertexId v) const {
  Word r = reduce(image);
  Word w;
  while (r.size() > 1) {
    std::size_t front = r.size(), back = r.size();
    for (std::size_t i = 0; i < r.size() && front == r.size(); ++i) {
      const Letter want = inverse(r[i]);
      if (find_front(*this, r, [&](std::size_t k) { return k == i; }) != i) continue;
      const std::size_t j = find_back(*this, r, [&](std::size_t k) { return r[k] == want; });
      if (j != r.size()) {
        front = i;
        back = j;
      }
    }
    if (front == r.size()) return std::nullopt;
    w.push_back(r[front]);
    erase_at(r, std::max(front, back));
    erase_at(r, std::min(front, back));
  }
  if (r != Word{Letter{v, 1}}) return std::nullopt;
  return reduce(w);
}

Automorphism::Automorphism(const ArtinGroup& group, std::vector<Word> images)
    : group_(&group), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != group.rank()) {
    throw Error("automorphism needs one image per generator");
  }
  for (Word& w : images_) w = group.reduce(w);
  for (const Edge& e : group.graph().edges()) {
    const Word& u = images_[e.first];
    const Word& v = images_[e.second];
    if (!group.equal(concat(u, v), concat(v, u))) {
      throw Error("images of adjacent generators x" + std::to_string(e.first) + ", x" +
                  std::to_string(e.second) + " do not commute");
    }
  }
}

Automorphism Automorphism::identity(const ArtinGroup& group) {
  std::vector<Word> images;
  for (VertexId v = 0; v < group.rank(); ++v) images.push_back(group.generator(v));
  return Automorphism(group, std::move(images));
}

Automorphism Automorphism::partial_conjugation(const ArtinGroup& group,
                                               const PartialConjugation& p, int sign) {
  if (p.actor < 0 || p.actor >= group.rank()) throw Error("partial conjugation actor out of range");
  if (static_cast<int>(p.support.size()) != group.rank()) {
    throw Error("partial conjugation support has the wrong size");
  }
  if (p.support.intersects(star(group.graph(), p.actor))) {
    throw Error("partial conjugation support meets the star of its actor");
  }
  const Word x = group.generator(p.actor, sign);
  std::vector<Word> images;
  for (VertexId v = 0; v < group.rank(); ++v) {
    Word g = group.generator(v);
    images.push_back(p.support.test(v) ? concat(concat(x, g), inverse(x)) : g);
  }
  return Automorphism(group, std::move(images));
}

Word Automorphism::apply(const Word& w) const {
  group_->check(w);
  Word r;
  for (const Letter& l : w) {
    const Word& img = images_[l.vertex];
    group_->append_cancelling(r, l.sign > 0 ? img : inverse(img));
  }
  return group_->canonical(r);
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (&phi.group() != &psi.group()) throw Error("compose: automorphisms of different groups");
  std::vector<Word> images;
  for (const Word& w : psi.images()) images.push_back(phi.apply(w));
  return Automorphism(phi.group(), std::move(images));
}

bool same_map(const Automorphism& phi, const Automorphism& psi) {
  if (&phi.group() != &psi.group()) throw Error("same_map: automorphisms of different groups");
  return phi.images() == psi.images();
}

std::optional<Word> is_inner(const Automorphism& phi, bool allow_center) {
  const ArtinGroup& group = phi.group();
  const SimpleGraph& g = group.graph();
  const int n = group.rank();
  if (n == 0) return Word{};
  if (!allow_center && center_vertices(g).any()) {
    throw Error("is_inner: the graph has central vertices");
  }
  std::vector<Word> conj(n);
  for (VertexId v = 0; v < n; ++v) {
    auto w = group.conjugating_word(phi.image(v), v);
    if (!w) throw Error("is_inner: image of x" + std::to_string(v) + " is not a conjugate of it");
    conj[v] = std::move(*w);
  }
  // Candidates form the coset c * <allowed>; each generator v cuts it down
  // to its intersection with conj[v] * <st(v)>.
  Word c = conj[0];
  VertexSet allowed = star(g, 0);
  for (VertexId v = 1; v < n; ++v) {
    const VertexSet st = star(g, v);
    auto f = group.double_coset_factor(group.multiply(inverse(conj[v]), c), st, allowed);
    if (!f) return std::nullopt;
    c = group.multiply(conj[v], f->first);
    allowed &= st;
  }
  const Word c_inv = inverse(c);
  for (VertexId v = 0; v < n; ++v) {
    if (!group.equal(concat(concat(c, group.generator(v)), c_inv), phi.image(v))) {
      throw Error("is_inner: conjugator " + to_string(c) + " fails on x" + std::to_string(v));
    }
  }
  return c;
}

bool commute_in_out(const ArtinGroup& group, const PartialConjugation& p,
                    const PartialConjugation& q) {
  const Automorphism a = Automorphism::partial_conjugation(group, p);
  const Automorphism b = Automorphism::partial_conjugation(group, q);
  const Automorphism a_inv = Automorphism::partial_conjugation(group, p, -1);
  const Automorphism b_inv = Automorphism::partial_conjugation(group, q, -1);
  const Automorphism commutator = compose(compose(a, b), compose(a_inv, b_inv));
  return is_inner(commutator, true).has_value();
}

SimpleGraph commutation_graph(const ArtinGroup& group,
                              const std::vector<PartialConjugation>& gens) {
  const int k = static_cast<int>(gens.size());
  SimpleGraph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (commute_in_out(group, gens[i], gens[j])) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace raag
