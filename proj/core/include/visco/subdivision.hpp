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

#include <optional>
#include <string>
#include <vector>

#include "visco/matroid.hpp"
#include "visco/polytope.hpp"
#include "visco/rational.hpp"

namespace visco {

/// A height per base vertex, the lifting data of a regular subdivision.
struct HeightFunction {
  QVec values;  // one per base vertex, same order
};

/// A polyhedral subdivision of a lattice polytope: maximal cells given as
/// vertex-index sets, plus the derived glued face poset and cached facet
/// descriptions. Build through make_subdivision.
struct Subdivision {
  LatticePolytope base;
  std::vector<Subset> cells;  // canonical: sorted index sets, sorted list

  FacePoset poset;            // glued faces of all cells
  HRep base_hrep;
  std::vector<HRep> cell_hreps;

  /// Coordinate sum of base vertices (the r of a hypersimplex base).
  int level() const;
  int n() const { return base.ambient; }
  int dim() const { return base.dim(); }

  /// Face indices (into poset) of the interior facets, with the two cells
  /// sharing each: valid subdivisions only.
  struct InteriorFacet {
    int face;
    int cell_a;
    int cell_b;
  };
  std::vector<InteriorFacet> interior_facets() const;

  /// True iff the poset face lies in the boundary of the base polytope.
  bool face_on_base_boundary(int face) const;
  /// True iff some coordinate vanishes identically on the face.
  bool face_in_zero_locus(int face) const;
  /// Cells (indices) whose vertex set contains the face's.
  std::vector<int> cells_containing_face(int face) const;
};

Subdivision make_subdivision(const LatticePolytope& base,
                             std::vector<Subset> cells);

/// Projections of the lower facets of the lifted hull conv{(v, w(v))}.
/// Constant heights produce the trivial subdivision.
Subdivision regular_subdivision(const LatticePolytope& p,
                                const HeightFunction& w);

HeightFunction constant_heights(const LatticePolytope& p);
/// Heights |x_0 + x_1 - level/ r ... | folding along sum_{i in block} x_i = 1:
/// on a hypersimplex this lifts to the two-cell split separating the
/// vertices inside the block from those disjoint from it.
HeightFunction split_heights(const LatticePolytope& p);
HeightFunction random_heights(const LatticePolytope& p, std::uint64_t seed);

struct ValidationReport {
  bool spans_ok = false;
  bool volume_ok = false;
  bool common_face_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return spans_ok && volume_ok && common_face_ok; }
};

/// Checks that each cell spans the base dimension, that cell volumes add to
/// the base volume exactly (lexicographic triangulation), and that every
/// cell pair meets in a common face.
ValidationReport validate(const Subdivision& s);

/// Every maximal cell spans a matroid polytope. Throws InvalidSubdivision
/// when validate fails, BadParams when the base is not a hypersimplex slice.
bool is_matroid_decomposition(const Subdivision& s);

enum class FaceRegion {
  Interior,        // not in the boundary of the base
  OnesBoundary,    // in the boundary, meets only facets (x_i = 1)
  ZerosContained,  // inside the union of the facets (x_i = 0)
};
std::vector<FaceRegion> classify_boundary_faces(const Subdivision& s);

/// The faces avoiding the (x_i = 0) locus, graded by stratum dimension
/// dim(face) - (n - r).
struct Stratum {
  int face = 0;
  int face_dim = 0;
  int stratum_dim = 0;
};
struct StrataPoset {
  std::vector<Stratum> elements;
  std::vector<int> count_by_stratum_dim() const;  // index = stratum dim
};
StrataPoset strata_poset(const Subdivision& s);

/// The face cut out by x_i = 1 for all i in I (an (r-1)-subset, 0-based):
/// the simplex on the vertices e_I + e_j, j outside I. Throws BadIndex.
Face gamma_face(int r, int n, const Subset& I);

/// The unique maximal cell containing the gamma face of I, with the
/// quotient cone of the cell at that face. Generators live in Z^(r-1),
/// coordinates indexed by I. Throws NotUnique when the cell is not unique
/// (the input is then not a matroid decomposition), NotSimplicial /
/// NotUnimodular when the quotient cone fails the respective check.
struct CellReport {
  int cell = 0;
  std::vector<QVec> cone_generators;  // extreme rays, primitive
  bool simplicial = false;
  bool unimodular = false;
};
CellReport cell_containing_gamma(const Subdivision& s, const Subset& I);

/// Exact normalized volume of the hull of the given base vertices, measured
/// in the base's hull coordinates (d! times the Euclidean volume there).
Rat relative_volume(const Subdivision& s, const Subset& vertex_set);

}  // namespace visco
