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

#include "visco/dd.hpp"
#include "visco/rational.hpp"
#include "visco/subsets.hpp"

namespace visco {

/// A polytope spanned by distinct integer points. The vertex sets handled
/// here are 0/1 (hypersimplex subsets), for which every listed point is an
/// extreme point of the hull.
struct LatticePolytope {
  int ambient = 0;
  std::vector<IVec> vertices;

  int dim() const;
  QVec vertex_q(int i) const { return to_qvec(vertices[i]); }
};

/// Vertices e_{i_1} + ... + e_{i_r} over all r-subsets of an n-set, in
/// lexicographic subset order; the slice of the unit cube at coordinate sum
/// r. Throws BadParams unless 1 <= r <= n-1.
LatticePolytope hypersimplex(int r, int n);

/// A face, recorded by the set of polytope vertices lying on it.
struct Face {
  Subset vertex_indices;
  int dim = 0;
};

/// The full face poset of a polytope (or of a polytopal complex): all
/// nonempty faces graded by dimension, facet-of covers, and one stored
/// orientation per face (an ordered basis of its direction space). The
/// incidence signs derived from the orientations satisfy boundary-of-
/// boundary = 0.
struct FacePoset {
  std::vector<QVec> vertex_coords;
  std::vector<Face> faces;                      // sorted by (dim, vertex set)
  std::vector<std::vector<int>> facets_of;      // covers, per face
  std::vector<std::vector<QVec>> orientations;  // per face, dim-many vectors
  int top_dim = 0;

  int index_of(const Subset& vertex_indices) const;  // -1 when absent
  QVec barycenter(int face) const;
  std::vector<int> faces_of_dim(int d) const;
};

/// Face poset of a single polytope via exact facet enumeration.
FacePoset face_poset(const LatticePolytope& p);

/// Glued face poset of a polytopal complex: the union of the face posets of
/// the given cells (vertex index sets into `vertex_coords`), deduplicated.
/// Cells must intersect pairwise in common faces for the result to be a
/// complex; this is checked elsewhere.
FacePoset complex_poset(const std::vector<QVec>& vertex_coords,
                        const std::vector<Subset>& cells);

/// Sign comparing the stored orientation of facet G with the boundary
/// orientation induced from face F: +1 when they agree. Throws NotFacet
/// when G is not a facet of F.
int incidence(const FacePoset& poset, int face, int facet);

/// Aligns orientations with a fixed orientation of the top-dimensional
/// cells and, for codimension-1 faces on the boundary of the support,
/// with the orientation induced from the containing cell. Homology ranks
/// are independent of this; it fixes the signs of the emitted complexes.
void align_orientations(FacePoset& poset);

/// H-representation of the hull of a face (by vertex indices), cached use.
HRep face_hrep(const FacePoset& poset, int face);

}  // namespace visco
