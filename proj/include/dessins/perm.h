// Copyright 2026 The Authors.
//
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

#ifndef DESSINS_PERM_H_
#define DESSINS_PERM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dessins {

// A cycle is a sequence of distinct dart labels, rotated so that its minimal
// label comes first.
using Cycle = std::vector<int>;

// Canonical cycle decomposition: every dart appears exactly once (fixed points
// included as 1-cycles) and cycles are sorted by their first element.
using CycleDecomposition = std::vector<Cycle>;

// A bijection of {1..n}. Products are read left to right: Compose(p, q) first
// applies p, then q, so x^(pq) = (x^p)^q.
class Permutation {
 public:
  // The identity on a single point.
  Permutation() : images_{1} {}

  static Permutation Identity(int degree);

  // images[i] is the image of dart i + 1. Throws kInvalidArgument unless the
  // sequence is a bijection of {1..images.size()}.
  static Permutation FromImages(std::vector<int> images);

  // Cycles must be disjoint with labels in [1, degree]; omitted darts are
  // fixed.
  static Permutation FromCycles(int degree, std::span<const Cycle> cycles);

  // Parses cycle notation, e.g. "(1 4)(2,3)". The degree is always explicit.
  static Permutation Parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of a 1-indexed dart.
  int operator()(int dart) const { return images_[dart - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool IsIdentity() const;

  CycleDecomposition Cycles() const;

  // Number of cycles, fixed points included.
  int CycleCount() const;

  // Cycle lengths in decreasing order; a partition of the degree.
  std::vector<int> CycleType() const;

  // Cycle notation with fixed points omitted. The identity formats as "".
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// x -> q(p(x)). Throws kDegreeMismatch.
Permutation Compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return Compose(p, q);
}

Permutation Inverse(const Permutation& p);

// g^-1 p g: the permutation obtained from p by renaming every dart x as g(x).
Permutation Conjugate(const Permutation& p, const Permutation& g);

// True iff the orbit of dart 1 under <gens> is all of {1..n}.
// Throws kInvalidArgument for an empty generator list when n > 1.
bool IsTransitive(std::span<const Permutation> gens, int n);

// Largest degree for which GroupOrder is computed.
inline constexpr int kMaxGroupOrderDegree = 16;
inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000'000;

// Exact order of <gens> from a Schreier-Sims stabilizer chain, or nullopt if
// it exceeds `cap`. Throws kBoundExceeded above kMaxGroupOrderDegree.
std::optional<std::uint64_t> GroupOrder(std::span<const Permutation> gens,
                                        std::uint64_t cap = kDefaultOrderCap);

bool IsAbelian(std::span<const Permutation> gens);

using PermutationPair = std::pair<Permutation, Permutation>;

// Attempts to build g with g(1) = seed_image and g(x^a) = g(x)^c,
// g(x^b) = g(x)^d, where (a, b) = from and (c, d) = to. Returns g if the
// propagation covers every dart, is consistent and is a bijection that
// conjugates both slots. Throws kNotTransitive if <from> is not transitive.
std::optional<Permutation> PropagateConjugator(const PermutationPair& from,
                                               const PermutationPair& to,
                                               int seed_image);

// Some g with Conjugate(from.first, g) == to.first and
// Conjugate(from.second, g) == to.second, or nullopt.
std::optional<Permutation> FindSimultaneousConjugator(
    const PermutationPair& from, const PermutationPair& to);

}  // namespace dessins

#endif  // DESSINS_PERM_H_
