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

#include "dessins/catalogue.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "dessins/error.h"
#include "json.hpp"

namespace dessins {
namespace {

Permutation StandardInvolution(int n) {
  std::vector<int> images(n);
  for (int x = 1; x <= n; x += 2) {
    images[x - 1] = x + 1;
    images[x] = x;
  }
  return Permutation::FromImages(std::move(images));
}

// All elements of the centralizer of (1 2)(3 4)...: permute the pairs and
// optionally swap inside each pair. Zero-based images.
std::vector<std::vector<int>> CentralizerOfStandardInvolution(int n) {
  const int m = n / 2;
  std::vector<int> pair_order(m);
  std::iota(pair_order.begin(), pair_order.end(), 0);
  std::vector<std::vector<int>> elements;
  do {
    for (int flips = 0; flips < (1 << m); ++flips) {
      std::vector<int> g(n);
      for (int i = 0; i < m; ++i) {
        const int flip = (flips >> i) & 1;
        g[2 * i] = 2 * pair_order[i] + flip;
        g[2 * i + 1] = 2 * pair_order[i] + (1 - flip);
      }
      elements.push_back(std::move(g));
    }
  } while (std::next_permutation(pair_order.begin(), pair_order.end()));
  return elements;
}

// g^-1 s g on zero-based images: renames x as g(x).
std::vector<int> ConjugateImages(const std::vector<int>& s,
                                 const std::vector<int>& g) {
  std::vector<int> out(s.size());
  for (size_t x = 0; x < s.size(); ++x) out[g[x]] = g[s[x]];
  return out;
}

// Position of p in the lexicographic order of all permutations of its size.
std::uint64_t LexRank(const std::vector<int>& p) {
  const size_t n = p.size();
  std::uint64_t rank = 0;
  for (size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

bool TransitiveWithStandardInvolution(const std::vector<int>& sigma) {
  const size_t n = sigma.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {sigma[x], x ^ 1}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::vector<int> ToOneBased(std::vector<int> images) {
  for (int& v : images) ++v;
  return images;
}

}  // namespace

std::vector<CleanDessin> EnumerateCleanDessins(int n_darts) {
  if (n_darts < 2 || n_darts % 2 != 0) {
    throw DessinError(ErrorCode::kInvalidArgument,
                      "map enumeration needs a positive even dart count");
  }
  if (n_darts > kMaxEnumerationDarts) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "map enumeration is limited to " +
                          std::to_string(kMaxEnumerationDarts) + " darts");
  }
  const Permutation alpha = StandardInvolution(n_darts);
  const std::vector<std::vector<int>> centralizer =
      CentralizerOfStandardInvolution(n_darts);

  std::uint64_t total = 1;
  for (int i = 2; i <= n_darts; ++i) total *= i;
  std::vector<bool> visited(total, false);

  std::vector<CleanDessin> maps;
  std::vector<int> sigma(n_darts);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t rank = 0;
  // next_permutation walks the lexicographic order, so `rank` tracks LexRank
  // and the first member met of each class is its minimum.
  do {
    if (!visited[rank] && TransitiveWithStandardInvolution(sigma)) {
      for (const std::vector<int>& g : centralizer) {
        visited[LexRank(ConjugateImages(sigma, g))] = true;
      }
      maps.push_back(AsClean(Dessin::Make(
          n_darts, Permutation::FromImages(ToOneBased(sigma)), alpha)));
    }
    ++rank;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return maps;
}

Permutation CanonicalSigma(const CleanDessin& d) {
  const int n = d.n_darts();
  if (d.alpha() != StandardInvolution(n)) {
    throw DessinError(ErrorCode::kInvalidArgument,
                      "canonical sigma needs alpha = (1 2)(3 4)...");
  }
  std::vector<int> sigma(n);
  for (int x = 1; x <= n; ++x) sigma[x - 1] = d.sigma()(x) - 1;
  std::vector<int> best = sigma;
  for (const std::vector<int>& g : CentralizerOfStandardInvolution(n)) {
    best = std::min(best, ConjugateImages(sigma, g));
  }
  return Permutation::FromImages(ToOneBased(std::move(best)));
}

CatalogueEntry CatalogueReport(const Dessin& d) {
  std::optional<std::uint64_t> order;
  if (d.n_darts() <= kMaxGroupOrderDegree) {
    order = MonodromyOrder(d, std::numeric_limits<std::uint64_t>::max());
  }
  CatalogueEntry entry{d,
                       PassportOf(d),
                       d.genus(),
                       order,
                       MonodromyIsAbelian(d),
                       AutomorphismCount(d),
                       IsRegular(d),
                       IsSelfDual(d),
                       false,
                       std::nullopt,
                       std::nullopt,
                       std::nullopt};
  try {
    const CleanDessin map = AsClean(d);
    entry.clean = true;
    if (map.edge_count() <= kMaxReportEdges) {
      entry.delta = DeltaMatroidOfMap(map);
      entry.delta_is_matroid = IsMatroid(*entry.delta);
      entry.delta_self_dual = DeltaSelfDual(*entry.delta);
    }
  } catch (const DessinError& e) {
    if (e.code() != ErrorCode::kNotClean) throw;
  }
  return entry;
}

std::string CatalogueEntry::ToJson() const {
  nlohmann::json out;
  out["n"] = dessin.n_darts();
  out["sigma"] = dessin.sigma().ToString();
  out["alpha"] = dessin.alpha().ToString();
  out["phi"] = dessin.phi().ToString();
  out["passport"] = passport.ToString();
  out["genus"] = genus;
  out["monodromy_order"] =
      monodromy_order ? nlohmann::json(*monodromy_order) : nlohmann::json();
  out["abelian"] = abelian;
  out["automorphisms"] = automorphisms;
  out["regular"] = regular;
  out["self_dual"] = self_dual;
  out["clean"] = clean;
  if (delta) {
    out["delta_matroid"] = nlohmann::json::parse(delta->ToJson());
    out["delta_is_matroid"] = *delta_is_matroid;
    out["delta_self_dual"] = *delta_self_dual;
  }
  return out.dump();
}

std::string CatalogueEntry::ToText() const {
  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::string out;
  out += "n: " + std::to_string(dessin.n_darts()) + "\n";
  out += "sigma: " + dessin.sigma().ToString() + "\n";
  out += "alpha: " + dessin.alpha().ToString() + "\n";
  out += "phi: " + dessin.phi().ToString() + "\n";
  out += "passport: " + passport.ToString() + "\n";
  out += "genus: " + std::to_string(genus) + "\n";
  out += "monodromy order: " +
         (monodromy_order ? std::to_string(*monodromy_order)
                          : std::string("not computed")) +
         "\n";
  out += "abelian: " + yes_no(abelian) + "\n";
  out += "automorphisms: " + std::to_string(automorphisms) + "\n";
  out += "regular: " + yes_no(regular) + "\n";
  out += "self-dual: " + yes_no(self_dual) + "\n";
  out += "clean: " + yes_no(clean) + "\n";
  if (delta) {
    out += "delta-matroid: " + delta->ToString() + "\n";
    out += "delta-matroid is matroid: " + yes_no(*delta_is_matroid) + "\n";
    out += "delta-matroid self-dual: " + yes_no(*delta_self_dual) + "\n";
  }
  return out;
}

}  // namespace dessins
