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

#include "visco/subsets.hpp"

#include "visco/errors.hpp"

namespace visco {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  Subset s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_rank(const Subset& s, int n) {
  const int k = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    if (s[i] <= prev || s[i] >= n) throw IndexError("bad subset element");
    for (int v = prev + 1; v < s[i]; ++v) {
      rank += binomial(n - 1 - v, k - 1 - i);
    }
    prev = s[i];
  }
  return rank;
}

int insertion_sign(const Subset& prefix, int extra) {
  int greater = 0;
  for (int x : prefix) {
    if (x > extra) ++greater;
  }
  return (greater % 2 == 0) ? 1 : -1;
}

}  // namespace visco
