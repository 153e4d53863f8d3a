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

#include <vector>

#include "visco/matrix.hpp"
#include "visco/polytope.hpp"
#include "visco/subsets.hpp"

namespace visco {

/// A matroid on ground set {0,...,n-1} of rank r, by its list of bases
/// (sorted r-subsets, lexicographically ordered).
struct Matroid {
  int n = 0;
  int r = 0;
  std::vector<Subset> bases;
};

/// True iff `family` is nonempty and satisfies the basis exchange axiom:
/// for all B1, B2 in the family and x in B1\B2 there is y in B2\B1 with
/// B1 - x + y in the family.
bool is_basis_family(int n, int r, const std::vector<Subset>& family);

/// Column matroid of an r x n matrix of rank r: bases are the supports of
/// the nonzero maximal minors. Throws RankDeficient.
Matroid matroid_from_matrix(const RationalMatrix& m);

/// Rank of a ground subset: the largest intersection with a basis.
int subset_rank_in(const Matroid& m, const Subset& e);

/// True iff the ground set admits no bipartition E1 | E2 (both nonempty)
/// with rank(E1) + rank(E2) = r. Brute force over the 2^(n-1)-1 splits.
bool is_connected(const Matroid& m);

/// Convex hull of the basis indicator vectors in Z^n. Its dimension is
/// n-1 exactly when the matroid is connected.
LatticePolytope polytope_of(const Matroid& m);

/// Edge test: every edge of the hull of the given hypersimplex vertices
/// steps from one r-subset to another exchanging a single element, i.e.
/// has direction e_i - e_j.
bool matroid_edge_oracle(int r, int n, const std::vector<Subset>& vertex_subset);

/// True iff the hypersimplex vertices indexed by `vertex_subset` span a
/// matroid polytope. Decided by the exchange axiom and cross-checked
/// against the edge oracle on every call.
bool is_matroid_subpolytope(int r, int n,
                            const std::vector<Subset>& vertex_subset);

}  // namespace visco
