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
#include "visco/stanley.hpp"
#include "visco/subdivision.hpp"

namespace visco {

/// Chain complex of rational vector spaces: dims[k] generators in degree k,
/// boundaries[k] mapping degree k to degree k-1 (boundaries[0] is empty).
struct ChainComplex {
  std::vector<int> dims;
  std::vector<RationalMatrix> boundaries;

  /// True iff consecutive boundaries compose to zero.
  bool boundary_squares_to_zero() const;
};

/// dim H_k = dims[k] - rank d_k - rank d_{k+1}, exact.
std::vector<int> homology_dims(const ChainComplex& c);

/// Cellular chain complex of the faces with in_k && !in_l, with incidence
/// signs from the poset orientations. in_k must be closed under subfaces,
/// and in_l closed under subfaces within in_k; otherwise NotSubcomplex.
ChainComplex relative_complex(const FacePoset& poset,
                              const std::vector<bool>& in_k,
                              const std::vector<bool>& in_l);
ChainComplex relative_complex(const FacePoset& poset,
                              const std::vector<bool>& in_l);

/// H^i of the structure sheaf of the glued fibre, i = 0..r-1, computed as
/// the homology of the pair (all faces, faces in the base boundary)
/// reindexed by i -> n-1-i. Expected (1, 0, ..., 0).
std::vector<int> cohomology_OS(const Subdivision& s);

/// H^i of the structure sheaf of the visible boundary, i = 0..r-2: the pair
/// (boundary faces, faces in the (x=0) locus) reindexed by i -> n-2-i.
std::vector<int> cohomology_OB(const Subdivision& s);

/// H^i of the log canonical sheaf, i = 0..r-1, by the long-exact-sequence
/// bookkeeping h^i(-B): 0, h^0(O_B)-1, h^{i-1}(O_B)...; then
/// h^i = h^{r-1-i}(-B). Expected (binom(n-1,r-1), 0, ..., 0).
std::vector<int> cohomology_omega(const Subdivision& s);

struct CohomologyReport {
  std::vector<int> h_os;
  std::vector<int> h_ob;
  std::vector<int> h_omega;
};
CohomologyReport cohomology_report(const Subdivision& s);

/// Relative homology of skeleton pairs of the simplex on n vertices,
/// built directly from subsets of [n], independent of the subdivision
/// machinery. dims_low kills the (n-r-1)-skeleton (complex spans degrees
/// n-r..n-2); dims_literal kills the (n-r)-skeleton. wedge_cokernel_dim is
/// the rank deficit of wedging with (1,...,1): dim coker(v -> e ^ v) on
/// (r-1)-vectors, the closed-form count binom(n-1, r-1).
struct SkeletonPairReport {
  std::vector<int> dims_low;      // indexed by degree 0..n-2
  std::vector<int> dims_literal;  // indexed by degree 0..n-2
  int wedge_cokernel_dim = 0;
  int matching = -1;  // 0: dims_low matches the fibre pipeline, 1: literal
};
SkeletonPairReport skeleton_pair_oracle(int r, int n);

/// The weight-a piece of the face complex on interior faces (graded by
/// codimension, differentials scaled by gluing characters) is exact except
/// at the top, where it is one-dimensional. Throws BadParams when a = 0 or
/// outside the cone over the base; BadGluing on bad data.
bool graded_exactness_check(const Subdivision& s, const GluingData& t,
                            const WeightPoint& a);

}  // namespace visco
