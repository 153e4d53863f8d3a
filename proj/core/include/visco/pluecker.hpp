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
#include "visco/rational.hpp"
#include "visco/subsets.hpp"

namespace visco {

/// A point of the Grassmannian G(r,n) in homogeneous coordinates: one exact
/// rational per r-subset of {0,...,n-1}, in lexicographic subset order.
struct PlueckerVector {
  int r = 0;
  int n = 0;
  QVec coords;  // size C(n,r)

  const Rat& at(const Subset& s) const { return coords[subset_rank(s, n)]; }
  Rat& at(const Subset& s) { return coords[subset_rank(s, n)]; }

  bool is_zero() const;

  /// Scales so the first nonzero coordinate is 1.
  PlueckerVector normalized() const;

  /// Equality as projective points (agree up to one common nonzero scalar).
  bool projectively_equal(const PlueckerVector& other) const;
};

/// Plücker coordinates of the row space of an r x n matrix of rank r:
/// coordinate S = determinant of the columns S, over all r-subsets in
/// lexicographic order. Throws RankDeficient when the rank is below r.
PlueckerVector maximal_minors(const RationalMatrix& m);

/// Checks every Grassmann relation indexed by an (r-1)-subset S and an
/// (r+1)-subset T:  sum_{j in T} (-1)^pos(j,T) p_{S+j} p_{T-j} = 0,
/// with p of a repeated index read as zero. True for images of
/// maximal_minors; an independence oracle for Grassmannian membership.
bool pluecker_relations_ok(const PlueckerVector& p);

/// Coordinate-wise torus action: coordinate S is multiplied by
/// prod_{i in S} t_i. Throws ZeroScale when some t_i = 0.
PlueckerVector torus_act(const QVec& t, const PlueckerVector& p);

}  // namespace visco
