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

#pragma once

#include <cstdint>
#include <vector>

namespace visco {

/// A k-subset of {0,...,n-1}, kept sorted ascending.
using Subset = std::vector<int>;

std::uint64_t binomial(int n, int k);

/// All k-subsets of {0,...,n-1} in lexicographic order. This ordering is
/// part of every external format of the library.
std::vector<Subset> k_subsets(int n, int k);

/// Lexicographic rank of a sorted k-subset among all k-subsets of
/// {0,...,n-1}.
std::uint64_t subset_rank(const Subset& s, int n);

/// Sign of the permutation sorting (prefix ++ {extra}), where `prefix` is
/// sorted and does not contain `extra`: (-1)^(number of prefix elements
/// greater than extra).
int insertion_sign(const Subset& prefix, int extra);

}  // namespace visco
