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

#include "dessins/perm.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

#include "dessins/error.h"

namespace dessins {
namespace {

void RequireSameDegree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DessinError(ErrorCode::kDegreeMismatch,
                      "degree mismatch: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  }
}

// Zero-based working representation for the stabilizer chain.
using Images = std::vector<int>;

Images Mul(const Images& p, const Images& q) {
  Images r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Images Inv(const Images& p) {
  Images r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// Incremental Schreier-Sims. Level k holds generators of G_k (the pointwise
// stabilizer of 0..k-1) and a transversal: transversal[k][x] maps k to x.
class StabilizerChain {
 public:
  explicit StabilizerChain(int n)
      : n_(n), gens_(n), transversal_(n, std::vector<Images>(n)) {
    Images id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    for (int k = 0; k < n; ++k) transversal_[k][k] = id;
  }

  void Add(int level, const Images& g) {
    if (level >= n_ || Contains(level, g)) return;
    gens_[level].push_back(g);
    for (int x = 0; x < n_; ++x) {
      if (!transversal_[level][x].empty()) {
        Update(level, Mul(transversal_[level][x], g));
      }
    }
  }

  // Product of orbit sizes, or nullopt once the running product passes cap.
  std::optional<std::uint64_t> Order(std::uint64_t cap) const {
    std::uint64_t order = 1;
    for (int k = 0; k < n_; ++k) {
      std::uint64_t orbit = 0;
      for (int x = 0; x < n_; ++x) orbit += !transversal_[k][x].empty();
      order *= orbit;
      if (order > cap) return std::nullopt;
    }
    return order;
  }

 private:
  bool Contains(int level, Images g) const {
    for (int k = level; k < n_; ++k) {
      const Images& t = transversal_[k][g[k]];
      if (t.empty()) return false;
      g = Mul(g, Inv(t));
    }
    return true;
  }

  void Update(int level, const Images& p) {
    const int x = p[level];
    if (!transversal_[level][x].empty()) {
      Add(level + 1, Mul(p, Inv(transversal_[level][x])));
      return;
    }
    transversal_[level][x] = p;
    for (size_t i = 0; i < gens_[level].size(); ++i) {
      Update(level, Mul(p, gens_[level][i]));
    }
  }

  int n_;
  std::vector<std::vector<Images>> gens_;
  std::vector<std::vector<Images>> transversal_;
};

class CycleParser {
 public:
  CycleParser(std::string_view text, int degree)
      : text_(text), degree_(degree) {}

  std::vector<int> Run() {
    std::vector<int> images(degree_);
    for (int i = 0; i < degree_; ++i) images[i] = i + 1;
    std::vector<bool> seen(degree_ + 1, false);
    SkipSpace();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') Fail("expected '('");
      ++pos_;
      Cycle cycle;
      SkipSpace();
      cycle.push_back(ReadLabel(seen));
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) Fail("unterminated cycle");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (text_[pos_] == ',') {
          ++pos_;
          SkipSpace();
        }
        cycle.push_back(ReadLabel(seen));
      }
      for (size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      }
      SkipSpace();
    }
    return images;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError(0, static_cast<int>(pos_) + 1, message);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  int ReadLabel(std::vector<bool>& seen) {
    const size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) Fail("label too large");
      ++pos_;
    }
    if (pos_ == start) Fail("expected a dart label");
    if (value < 1 || value > degree_) {
      pos_ = start;
      Fail("dart " + std::to_string(value) + " outside 1.." +
           std::to_string(degree_));
    }
    if (seen[value]) {
      pos_ = start;
      Fail("dart " + std::to_string(value) + " repeated");
    }
    seen[value] = true;
    return static_cast<int>(value);
  }

  std::string_view text_;
  int degree_;
  size_t pos_ = 0;
};

}  // namespace

Permutation Permutation::Identity(int degree) {
  if (degree < 1) {
    throw DessinError(ErrorCode::kInvalidArgument, "degree must be positive");
  }
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) {
    throw DessinError(ErrorCode::kInvalidArgument, "degree must be positive");
  }
  std::vector<bool> hit(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || hit[v]) {
      throw DessinError(ErrorCode::kInvalidArgument,
                        "image sequence is not a bijection of 1.." +
                            std::to_string(n));
    }
    hit[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::FromCycles(int degree,
                                    std::span<const Cycle> cycles) {
  Permutation p = Identity(degree);
  std::vector<bool> seen(degree + 1, false);
  for (const Cycle& cycle : cycles) {
    for (int x : cycle) {
      if (x < 1 || x > degree || seen[x]) {
        throw DessinError(ErrorCode::kInvalidArgument,
                          "cycles are not disjoint labels in 1.." +
                              std::to_string(degree));
      }
      seen[x] = true;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::Parse(std::string_view text, int degree) {
  if (degree < 1) {
    throw DessinError(ErrorCode::kInvalidArgument, "degree must be positive");
  }
  return Permutation(CycleParser(text, degree).Run());
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

CycleDecomposition Permutation::Cycles() const {
  CycleDecomposition cycles;
  std::vector<bool> seen(degree() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    for (int x = start; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int Permutation::CycleCount() const {
  int count = 0;
  std::vector<bool> seen(degree() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (int x = start; !seen[x]; x = (*this)(x)) seen[x] = true;
  }
  return count;
}

std::vector<int> Permutation::CycleType() const {
  std::vector<int> lengths;
  for (const Cycle& c : Cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::ToString() const {
  std::string out;
  for (const Cycle& c : Cycles()) {
    if (c.size() == 1) continue;
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation Compose(const Permutation& p, const Permutation& q) {
  RequireSameDegree(p, q);
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[x - 1] = q(p(x));
  return Permutation::FromImages(std::move(images));
}

Permutation Inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[p(x) - 1] = x;
  return Permutation::FromImages(std::move(images));
}

Permutation Conjugate(const Permutation& p, const Permutation& g) {
  RequireSameDegree(p, g);
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[g(x) - 1] = g(p(x));
  return Permutation::FromImages(std::move(images));
}

bool IsTransitive(std::span<const Permutation> gens, int n) {
  if (n < 1) throw DessinError(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (gens.empty()) {
    if (n == 1) return true;
    throw DessinError(ErrorCode::kInvalidArgument,
                      "empty generator set on more than one point");
  }
  for (const Permutation& g : gens) {
    if (g.degree() != n) {
      throw DessinError(ErrorCode::kDegreeMismatch,
                        "generator degree differs from n");
    }
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const Permutation& g : gens) {
      const int y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::optional<std::uint64_t> GroupOrder(std::span<const Permutation> gens,
                                        std::uint64_t cap) {
  if (cap == 0) {
    throw DessinError(ErrorCode::kInvalidArgument, "cap must be positive");
  }
  if (gens.empty()) return 1;
  const int n = gens.front().degree();
  if (n > kMaxGroupOrderDegree) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "group order is computed only up to degree " +
                          std::to_string(kMaxGroupOrderDegree));
  }
  StabilizerChain chain(n);
  for (const Permutation& g : gens) {
    if (g.degree() != n) {
      throw DessinError(ErrorCode::kDegreeMismatch,
                        "generators have different degrees");
    }
    Images images(n);
    for (int x = 1; x <= n; ++x) images[x - 1] = g(x) - 1;
    chain.Add(0, images);
  }
  return chain.Order(cap);
}

bool IsAbelian(std::span<const Permutation> gens) {
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

std::optional<Permutation> PropagateConjugator(const PermutationPair& from,
                                               const PermutationPair& to,
                                               int seed_image) {
  const int n = from.first.degree();
  RequireSameDegree(from.first, from.second);
  RequireSameDegree(from.first, to.first);
  RequireSameDegree(from.first, to.second);
  if (seed_image < 1 || seed_image > n) {
    throw DessinError(ErrorCode::kOutOfRange, "seed image out of range");
  }
  std::vector<int> g(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::vector<int> stack{1};
  g[1] = seed_image;
  used[seed_image] = true;
  int assigned = 1;
  bool consistent = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const std::pair<const Permutation*, const Permutation*> slots[] = {
        {&from.first, &to.first}, {&from.second, &to.second}};
    for (const auto& [src, dst] : slots) {
      const int y = (*src)(x);
      const int image = (*dst)(g[x]);
      if (g[y] == 0) {
        if (used[image]) {
          consistent = false;
          continue;
        }
        g[y] = image;
        used[image] = true;
        ++assigned;
        stack.push_back(y);
      } else if (g[y] != image) {
        consistent = false;
      }
    }
  }
  if (assigned != n) {
    if (!IsTransitive(std::vector<Permutation>{from.first, from.second}, n)) {
      throw DessinError(ErrorCode::kNotTransitive,
                        "conjugator search needs a transitive source pair");
    }
    return std::nullopt;
  }
  if (!consistent) return std::nullopt;
  g.erase(g.begin());
  Permutation result = Permutation::FromImages(std::move(g));
  if (Conjugate(from.first, result) != to.first ||
      Conjugate(from.second, result) != to.second) {
    return std::nullopt;
  }
  return result;
}

std::optional<Permutation> FindSimultaneousConjugator(
    const PermutationPair& from, const PermutationPair& to) {
  const int n = from.first.degree();
  if (!IsTransitive(std::vector<Permutation>{from.first, from.second}, n)) {
    throw DessinError(ErrorCode::kNotTransitive,
                      "conjugator search needs a transitive source pair");
  }
  RequireSameDegree(from.first, to.first);
  if (from.first.CycleType() != to.first.CycleType() ||
      from.second.CycleType() != to.second.CycleType()) {
    return std::nullopt;
  }
  for (int c = 1; c <= n; ++c) {
    if (auto g = PropagateConjugator(from, to, c)) return g;
  }
  return std::nullopt;
}

}  // namespace dessins
