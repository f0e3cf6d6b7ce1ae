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

#include "dessins/edge_set.h"

#include "dessins/error.h"

namespace dessins {
namespace {

std::uint64_t Bit(int j) {
  if (j < 1 || j > EdgeSet::kMaxElement) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "edge index " + std::to_string(j) + " outside 1..64");
  }
  return std::uint64_t{1} << (j - 1);
}

}  // namespace

EdgeSet::EdgeSet(std::initializer_list<int> elements) {
  for (int j : elements) mask_ |= Bit(j);
}

EdgeSet EdgeSet::FromElements(const std::vector<int>& elements) {
  std::uint64_t mask = 0;
  for (int j : elements) mask |= Bit(j);
  return EdgeSet(mask);
}

EdgeSet EdgeSet::Full(int m) {
  if (m < 0 || m > kMaxElement) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "ground size " + std::to_string(m) + " outside 0..64");
  }
  return EdgeSet(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

bool EdgeSet::WithinGround(int m) const { return MaxElement() <= m; }

std::vector<int> EdgeSet::Elements() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

EdgeSet EdgeSet::Complement(int m) const {
  return EdgeSet(Full(m).mask_ & ~mask_);
}

std::string EdgeSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int j : Elements()) {
    if (!first) out += ',';
    out += std::to_string(j);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(EdgeSet a, EdgeSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal sizes: the set holding the smallest element of the symmetric
  // difference comes first.
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less
                            : std::strong_ordering::greater;
}

}  // namespace dessins
