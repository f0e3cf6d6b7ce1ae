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

#include "dessins/delta_matroid.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "dessins/error.h"
#include "json.hpp"

namespace dessins {
namespace {

void RequireFamily(int ground_size, const std::vector<EdgeSet>& family) {
  if (family.empty()) {
    throw DessinError(ErrorCode::kEmptyFamily, "feasible family is empty");
  }
  if (ground_size < 0 || ground_size > EdgeSet::kMaxElement) {
    throw DessinError(ErrorCode::kOutOfRange, "ground size outside 0..64");
  }
  for (EdgeSet f : family) {
    if (!f.WithinGround(ground_size)) {
      throw DessinError(ErrorCode::kOutOfRange,
                        "feasible set " + f.ToString() + " outside 1.." +
                            std::to_string(ground_size));
    }
  }
}

std::unordered_set<std::uint64_t> MaskSet(const std::vector<EdgeSet>& family) {
  std::unordered_set<std::uint64_t> out;
  for (EdgeSet f : family) out.insert(f.mask());
  return out;
}

void RequireScanBound(const CleanDessin& d) {
  if (d.edge_count() > kMaxScanEdges) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "feasibility scans are limited to " +
                          std::to_string(kMaxScanEdges) + " edges");
  }
}

// Edge number of every dart, 1-based.
std::vector<int> EdgeOfDart(const CleanDessin& d) {
  std::vector<int> edge(d.n_darts() + 1);
  for (int j = 1; j <= d.edge_count(); ++j) {
    edge[d.edges()[j - 1].first] = j;
    edge[d.edges()[j - 1].second] = j;
  }
  return edge;
}

int CountCycles(const std::vector<int>& images, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int count = 0;
  for (size_t start = 1; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (size_t x = start; !seen[x]; x = images[x]) seen[x] = 1;
  }
  return count;
}

bool QuasiTreeFeasible(const CleanDessin& d, EdgeSet f,
                       const std::vector<int>& edge_of_dart) {
  const int n = d.n_darts();
  const CycleDecomposition vertices = d.sigma().Cycles();
  if (f.empty()) return vertices.size() == 1;

  auto in_f = [&](int x) { return f.Contains(edge_of_dart[x]); };
  for (const Cycle& v : vertices) {
    if (std::none_of(v.begin(), v.end(), in_f)) return false;
  }

  // Restrictions to the darts of F; sigma skips the absent darts.
  std::vector<int> sigma_f(n + 1, 0);
  std::vector<int> alpha_f(n + 1, 0);
  std::vector<int> darts;
  for (int x = 1; x <= n; ++x) {
    if (!in_f(x)) continue;
    darts.push_back(x);
    int y = d.sigma()(x);
    while (!in_f(y)) y = d.sigma()(y);
    sigma_f[x] = y;
    alpha_f[x] = d.alpha()(x);
  }

  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{darts.front()};
  seen[darts.front()] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {sigma_f[x], alpha_f[x]}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != darts.size()) return false;

  std::fill(seen.begin(), seen.end(), 0);
  int boundaries = 0;
  for (int start : darts) {
    if (seen[start]) continue;
    ++boundaries;
    for (int x = start; !seen[x]; x = alpha_f[sigma_f[x]]) seen[x] = 1;
  }
  return boundaries == 1;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const DeltaMatroid& a, const DeltaMatroid& b)
      : a_(a), b_(b), m_(a.ground_size()), image_(m_ + 1, 0),
        used_(m_ + 1, false) {
    signature_a_ = Signatures(a_);
    signature_b_ = Signatures(b_);
  }

  bool Run() { return Extend(1); }

 private:
  // For each element, how many feasible sets of each size contain it.
  std::vector<std::vector<int>> Signatures(const DeltaMatroid& d) const {
    std::vector<std::vector<int>> sig(m_ + 1, std::vector<int>(m_ + 1, 0));
    for (EdgeSet f : d.feasible()) {
      for (int e : f.Elements()) ++sig[e][f.size()];
    }
    return sig;
  }

  // Projections of both families onto the elements assigned so far must
  // agree as multisets.
  bool PartialMapConsistent(int assigned) const {
    std::vector<std::uint64_t> left;
    std::vector<std::uint64_t> right;
    std::uint64_t image_mask = 0;
    for (int e = 1; e <= assigned; ++e) {
      image_mask |= std::uint64_t{1} << (image_[e] - 1);
    }
    for (EdgeSet f : a_.feasible()) {
      std::uint64_t mapped = 0;
      for (int e = 1; e <= assigned; ++e) {
        if (f.Contains(e)) mapped |= std::uint64_t{1} << (image_[e] - 1);
      }
      left.push_back(mapped);
    }
    for (EdgeSet f : b_.feasible()) right.push_back(f.mask() & image_mask);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return left == right;
  }

  bool Extend(int e) {
    if (e > m_) return true;
    for (int target = 1; target <= m_; ++target) {
      if (used_[target] || signature_a_[e] != signature_b_[target]) continue;
      image_[e] = target;
      used_[target] = true;
      if (PartialMapConsistent(e) && Extend(e + 1)) return true;
      used_[target] = false;
    }
    image_[e] = 0;
    return false;
  }

  const DeltaMatroid& a_;
  const DeltaMatroid& b_;
  int m_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> signature_a_;
  std::vector<std::vector<int>> signature_b_;
};

}  // namespace

bool CheckSymmetricAxiom(int ground_size, const std::vector<EdgeSet>& family) {
  RequireFamily(ground_size, family);
  const std::unordered_set<std::uint64_t> feasible = MaskSet(family);
  for (EdgeSet f1 : family) {
    for (EdgeSet f2 : family) {
      const EdgeSet diff = f1.SymmetricDifference(f2);
      for (int x : diff.Elements()) {
        bool found = false;
        for (int y : diff.Elements()) {
          const EdgeSet step = EdgeSet{x, y};
          if (feasible.count(f1.SymmetricDifference(step).mask())) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

DeltaMatroid DeltaMatroid::Create(int ground_size,
                                  std::vector<EdgeSet> feasible) {
  if (!CheckSymmetricAxiom(ground_size, feasible)) {
    throw DessinError(ErrorCode::kInvalidArgument,
                      "family violates the symmetric exchange axiom");
  }
  std::sort(feasible.begin(), feasible.end());
  feasible.erase(std::unique(feasible.begin(), feasible.end()),
                 feasible.end());
  return DeltaMatroid(ground_size, std::move(feasible));
}

bool DeltaMatroid::IsFeasible(EdgeSet f) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), f);
}

std::string DeltaMatroid::ToJson() const {
  nlohmann::json sets = nlohmann::json::array();
  for (EdgeSet f : feasible_) sets.push_back(f.Elements());
  nlohmann::json out;
  out["ground"] = ground_size_;
  out["feasible"] = std::move(sets);
  return out.dump();
}

std::string DeltaMatroid::ToString() const {
  std::string out = "{";
  for (size_t i = 0; i < feasible_.size(); ++i) {
    if (i > 0) out += ',';
    out += feasible_[i].ToString();
  }
  return out + "}";
}

DeltaMatroid DeltaMatroidOfMap(const CleanDessin& d) {
  RequireScanBound(d);
  const int n = d.n_darts();
  const int m = d.edge_count();
  std::vector<int> partner(n + 1);
  for (int x = 1; x <= n; ++x) partner[x] = d.alpha()(x);
  const std::vector<int> edge_of_dart = EdgeOfDart(d);

  std::vector<EdgeSet> feasible;
  std::vector<int> face(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  const std::uint64_t full = EdgeSet::Full(m).mask();
  for (std::uint64_t f = 0; f <= full; ++f) {
    const EdgeSet dualised = EdgeSet::FromMask(full & ~f);
    // Faces of the partial dual: x -> phi(c_S(x)).
    for (int x = 1; x <= n; ++x) {
      const int moved = dualised.Contains(edge_of_dart[x]) ? partner[x] : x;
      face[x] = d.phi()(moved);
    }
    if (CountCycles(face, seen) == 1) feasible.push_back(EdgeSet::FromMask(f));
  }
  return DeltaMatroid::Create(m, std::move(feasible));
}

DeltaMatroid QuasiTreeOracle(const CleanDessin& d) {
  RequireScanBound(d);
  const std::vector<int> edge_of_dart = EdgeOfDart(d);
  const std::uint64_t full = EdgeSet::Full(d.edge_count()).mask();
  std::vector<EdgeSet> feasible;
  for (std::uint64_t f = 0; f <= full; ++f) {
    if (QuasiTreeFeasible(d, EdgeSet::FromMask(f), edge_of_dart)) {
      feasible.push_back(EdgeSet::FromMask(f));
    }
  }
  return DeltaMatroid::Create(d.edge_count(), std::move(feasible));
}

DeltaMatroid Twist(const DeltaMatroid& delta, EdgeSet s) {
  if (!s.WithinGround(delta.ground_size())) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "twist set " + s.ToString() + " outside 1.." +
                          std::to_string(delta.ground_size()));
  }
  std::vector<EdgeSet> twisted;
  for (EdgeSet f : delta.feasible()) twisted.push_back(f.SymmetricDifference(s));
  return DeltaMatroid::Create(delta.ground_size(), std::move(twisted));
}

DeltaMatroid DualDeltaMatroid(const DeltaMatroid& delta) {
  return Twist(delta, EdgeSet::Full(delta.ground_size()));
}

bool IsMatroid(const DeltaMatroid& delta) {
  const std::vector<EdgeSet>& family = delta.feasible();
  const int rank = family.front().size();
  for (EdgeSet b : family) {
    if (b.size() != rank) return false;
  }
  const std::unordered_set<std::uint64_t> bases = MaskSet(family);
  for (EdgeSet b1 : family) {
    for (EdgeSet b2 : family) {
      for (int x : b1.Elements()) {
        if (b2.Contains(x)) continue;
        bool found = false;
        for (int y : b2.Elements()) {
          if (b1.Contains(y)) continue;
          const EdgeSet swapped = b1.SymmetricDifference(EdgeSet{x, y});
          if (bases.count(swapped.mask())) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool DeltaIsomorphic(const DeltaMatroid& a, const DeltaMatroid& b) {
  if (a.ground_size() > kMaxIsomorphismGround ||
      b.ground_size() > kMaxIsomorphismGround) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "delta-matroid isomorphism is limited to ground size " +
                          std::to_string(kMaxIsomorphismGround));
  }
  if (a.ground_size() != b.ground_size()) return false;
  if (a.feasible().size() != b.feasible().size()) return false;
  // Sorted by size first, so equal size profiles compare elementwise.
  for (size_t i = 0; i < a.feasible().size(); ++i) {
    if (a.feasible()[i].size() != b.feasible()[i].size()) return false;
  }
  return IsomorphismSearch(a, b).Run();
}

bool DeltaSelfDual(const DeltaMatroid& delta) {
  return DeltaIsomorphic(delta, DualDeltaMatroid(delta));
}

}  // namespace dessins
