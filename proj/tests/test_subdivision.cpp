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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "visco/errors.hpp"
#include "visco/subdivision.hpp"

using namespace visco;

namespace {

Subdivision trivial_subdivision(int r, int n) {
  return regular_subdivision(hypersimplex(r, n),
                             constant_heights(hypersimplex(r, n)));
}

Subdivision split_subdivision(int r, int n) {
  return regular_subdivision(hypersimplex(r, n),
                             split_heights(hypersimplex(r, n)));
}

}  // namespace

TEST_CASE("constant heights lift to the trivial subdivision") {
  const Subdivision s = trivial_subdivision(2, 4);
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0] == Subset{0, 1, 2, 3, 4, 5});
  CHECK(validate(s).ok());
}

TEST_CASE("the split heights on the octahedron give the two known cells") {
  const Subdivision s = split_subdivision(2, 4);
  REQUIRE(s.cells.size() == 2);
  // Vertex order 12,13,14,23,24,34.
  CHECK(s.cells[0] == Subset{0, 1, 2, 3, 4});
  CHECK(s.cells[1] == Subset{1, 2, 3, 4, 5});
  CHECK(validate(s).ok());
  CHECK(is_matroid_decomposition(s));
}

TEST_CASE("generic heights triangulate the octahedron") {
  const auto p = hypersimplex(2, 4);
  const Subdivision s = regular_subdivision(p, random_heights(p, 91));
  CHECK(s.cells.size() == 4);
  for (const Subset& c : s.cells) CHECK(c.size() == 4);
  CHECK(validate(s).ok());
  CHECK_FALSE(is_matroid_decomposition(s));
}

TEST_CASE("regular subdivisions validate across sizes and seeds") {
  for (const auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
    const auto p = hypersimplex(r, n);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Subdivision s = regular_subdivision(p, random_heights(p, seed));
      const auto report = validate(s);
      CHECK_MESSAGE(report.ok(), "r=", r, " n=", n, " seed=", seed);
    }
  }
}

TEST_CASE("duplicated full cell fails the volume check only") {
  const auto p = hypersimplex(2, 4);
  const Subset all{0, 1, 2, 3, 4, 5};
  const Subdivision s = make_subdivision(p, {all, all});
  const auto report = validate(s);
  CHECK(report.spans_ok);
  CHECK_FALSE(report.volume_ok);
  CHECK(report.common_face_ok);
  CHECK_THROWS_AS(is_matroid_decomposition(s), InvalidSubdivision);
}

TEST_CASE("cells meeting in a non-face fail the common-face check") {
  const auto p = hypersimplex(2, 4);
  const Subdivision s =
      make_subdivision(p, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}});
  const auto report = validate(s);
  CHECK(report.spans_ok);
  CHECK_FALSE(report.common_face_ok);
}

TEST_CASE("a missing cell fails the volume check") {
  const auto p = hypersimplex(2, 4);
  const Subdivision s = make_subdivision(p, {{0, 1, 2, 3, 4}});
  const auto report = validate(s);
  CHECK(report.spans_ok);
  CHECK_FALSE(report.volume_ok);
}

TEST_CASE("boundary classification on the trivial octahedron") {
  const Subdivision s = trivial_subdivision(2, 4);
  const auto regions = classify_boundary_faces(s);

  const int top = s.poset.index_of({0, 1, 2, 3, 4, 5});
  REQUIRE(top >= 0);
  CHECK(regions[top] == FaceRegion::Interior);

  // Facet (x_1 = 1): vertices 12, 13, 14.
  const int ones_facet = s.poset.index_of({0, 1, 2});
  REQUIRE(ones_facet >= 0);
  CHECK(regions[ones_facet] == FaceRegion::OnesBoundary);

  // Vertex 12 lies in (x_3 = 0).
  const int vertex = s.poset.index_of({0});
  REQUIRE(vertex >= 0);
  CHECK(regions[vertex] == FaceRegion::ZerosContained);
}

TEST_CASE("strata poset counts: trivial (2,4) and (3,5)") {
  {
    const StrataPoset sp = strata_poset(trivial_subdivision(2, 4));
    CHECK(sp.elements.size() == 5);
    CHECK(sp.count_by_stratum_dim() == std::vector<int>{4, 1});
  }
  {
    const StrataPoset sp = strata_poset(trivial_subdivision(3, 5));
    CHECK(sp.elements.size() == 16);
    CHECK(sp.count_by_stratum_dim() == std::vector<int>{10, 5, 1});
  }
  {
    // Stratum dims stay nonnegative and the top element sits at r-1.
    for (const Subdivision& s :
         {split_subdivision(2, 4), split_subdivision(2, 5),
          trivial_subdivision(3, 5)}) {
      const StrataPoset sp = strata_poset(s);
      int top = -1;
      for (const Stratum& e : sp.elements) {
        CHECK(e.stratum_dim >= 0);
        top = std::max(top, e.stratum_dim);
      }
      CHECK(top == s.level() - 1);
    }
  }
}

TEST_CASE("strata_poset rejects non-matroidal input") {
  const auto p = hypersimplex(2, 4);
  const Subdivision s = regular_subdivision(p, random_heights(p, 91));
  CHECK_THROWS_AS(strata_poset(s), NotMatroidal);
}

TEST_CASE("gamma faces: simplex shape and facet case") {
  const Face g = gamma_face(3, 5, {0, 1});
  CHECK(g.dim == 2);
  CHECK(g.vertex_indices == Subset{0, 1, 2});  // 123, 124, 125

  const Face f = gamma_face(2, 4, {0});
  CHECK(f.vertex_indices == Subset{0, 1, 2});  // 12, 13, 14
  CHECK(f.dim == 2);

  for (int n : {4, 5, 6}) {
    for (int r : {2, 3}) {
      for (const Subset& I : k_subsets(n, r - 1)) {
        CHECK(gamma_face(r, n, I).vertex_indices.size() ==
              static_cast<std::size_t>(n - r + 1));
      }
    }
  }
  CHECK_THROWS_AS(gamma_face(3, 5, {0}), BadIndex);
  CHECK_THROWS_AS(gamma_face(3, 5, {1, 0}), BadIndex);
  CHECK_THROWS_AS(gamma_face(3, 5, {0, 7}), BadIndex);
}

TEST_CASE("trivial subdivision: quotient cone is the negative orthant") {
  const Subdivision s = trivial_subdivision(3, 6);
  for (const Subset& I : k_subsets(6, 2)) {
    const CellReport report = cell_containing_gamma(s, I);
    CHECK(report.cell == 0);
    CHECK(report.simplicial);
    CHECK(report.unimodular);
    REQUIRE(report.cone_generators.size() == 2);
    // Extreme rays -e_1, -e_2 of the quotient plane.
    CHECK(report.cone_generators[0] == QVec{Rat(-1), Rat(0)});
    CHECK(report.cone_generators[1] == QVec{Rat(0), Rat(-1)});
  }
}

TEST_CASE("split cells carry the gamma faces uniquely") {
  const Subdivision s = split_subdivision(2, 4);
  const CellReport r0 = cell_containing_gamma(s, {0});
  CHECK(r0.cell == 0);  // facet (x_1=1) lives in the cell keeping vertex 12
  const CellReport r2 = cell_containing_gamma(s, {2});
  CHECK(r2.cell == 1);  // facet (x_3=1) lives with vertex 34
  for (int i = 0; i < 4; ++i) {
    const CellReport rep = cell_containing_gamma(s, {i});
    CHECK(rep.simplicial);
    CHECK(rep.unimodular);
  }
}

TEST_CASE("all gamma checks pass on every tested matroid decomposition") {
  const std::vector<Subdivision> tested = {
      trivial_subdivision(2, 4), trivial_subdivision(2, 5),
      trivial_subdivision(3, 5), split_subdivision(2, 4),
      split_subdivision(2, 5)};
  for (const Subdivision& s : tested) {
    REQUIRE(is_matroid_decomposition(s));
    for (const Subset& I : k_subsets(s.n(), s.level() - 1)) {
      const CellReport rep = cell_containing_gamma(s, I);
      CHECK(rep.simplicial);
      CHECK(rep.unimodular);
    }
  }
}

TEST_CASE("a non-matroidal triangulation leaves some gamma face shared") {
  const auto p = hypersimplex(3, 5);
  const Subdivision s = regular_subdivision(p, random_heights(p, 1));
  REQUIRE(validate(s).ok());
  REQUIRE_FALSE(is_matroid_decomposition(s));
  int not_unique = 0;
  for (const Subset& I : k_subsets(5, 2)) {
    try {
      cell_containing_gamma(s, I);
    } catch (const NotUnique&) {
      ++not_unique;
    }
  }
  CHECK(not_unique >= 1);
}

TEST_CASE("relative volumes are additive for the split") {
  const Subdivision s = split_subdivision(2, 4);
  Subset all{0, 1, 2, 3, 4, 5};
  const Rat total = relative_volume(s, all);
  CHECK(total == relative_volume(s, s.cells[0]) + relative_volume(s, s.cells[1]));
  CHECK(total == 4);  // normalized volume of this hypersimplex
}

TEST_CASE("heights must cover every vertex") {
  const auto p = hypersimplex(2, 4);
  HeightFunction w;
  w.values.assign(3, Rat(0));
  CHECK_THROWS_AS(regular_subdivision(p, w), BadParams);
}
