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
#include "visco/homology.hpp"

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

int euler(const std::vector<int>& dims) {
  int chi = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * dims[k];
  }
  return chi;
}

}  // namespace

TEST_CASE("relative interval: one class in degree one") {
  LatticePolytope seg;
  seg.ambient = 1;
  seg.vertices = {IVec{0}, IVec{1}};
  const FacePoset poset = face_poset(seg);
  std::vector<bool> endpoints(poset.faces.size(), false);
  for (int v : poset.faces_of_dim(0)) endpoints[v] = true;

  const ChainComplex c = relative_complex(poset, endpoints);
  CHECK(c.dims == std::vector<int>{0, 1});
  CHECK(c.boundary_squares_to_zero());
  CHECK(homology_dims(c) == std::vector<int>{0, 1});
}

TEST_CASE("circle: the boundary of a triangle") {
  const FacePoset poset = face_poset(hypersimplex(1, 3));
  std::vector<bool> in_k(poset.faces.size(), true);
  for (int f : poset.faces_of_dim(2)) in_k[f] = false;
  const ChainComplex c = relative_complex(
      poset, in_k, std::vector<bool>(poset.faces.size(), false));
  CHECK(c.boundary_squares_to_zero());
  const auto h = homology_dims(c);
  CHECK(h[0] == 1);
  CHECK(h[1] == 1);
}

TEST_CASE("zero boundaries give homology equal to dims") {
  ChainComplex c;
  c.dims = {3, 2};
  c.boundaries = {RationalMatrix(0, 3), RationalMatrix(3, 2)};
  CHECK(homology_dims(c) == std::vector<int>{3, 2});
}

TEST_CASE("relative_complex rejects a non-closed subcomplex") {
  const FacePoset poset = face_poset(hypersimplex(1, 3));
  std::vector<bool> bad(poset.faces.size(), false);
  bad[poset.faces_of_dim(1).front()] = true;  // an edge without its vertices
  CHECK_THROWS_AS(relative_complex(poset, bad), NotSubcomplex);
}

TEST_CASE("euler characteristic is rank-nullity consistent") {
  for (const Subdivision& s :
       {trivial_subdivision(2, 4), split_subdivision(2, 4),
        trivial_subdivision(3, 5)}) {
    std::vector<bool> none(s.poset.faces.size(), false);
    const ChainComplex c = relative_complex(s.poset, none);
    CHECK(c.boundary_squares_to_zero());
    CHECK(euler(homology_dims(c)) == euler(c.dims));
  }
}

TEST_CASE("structure sheaf cohomology is a point's") {
  CHECK(cohomology_OS(trivial_subdivision(2, 4)) == std::vector<int>{1, 0});
  CHECK(cohomology_OS(trivial_subdivision(3, 5)) == std::vector<int>{1, 0, 0});
  CHECK(cohomology_OS(trivial_subdivision(3, 6)) == std::vector<int>{1, 0, 0});
  CHECK(cohomology_OS(split_subdivision(2, 4)) == std::vector<int>{1, 0});
  CHECK(cohomology_OS(split_subdivision(2, 5)) == std::vector<int>{1, 0});
}

TEST_CASE("the full fibre pair has no stray homology") {
  const Subdivision s = trivial_subdivision(3, 5);
  std::vector<bool> in_l(s.poset.faces.size(), false);
  for (std::size_t f = 0; f < in_l.size(); ++f) {
    in_l[f] = s.face_on_base_boundary(static_cast<int>(f));
  }
  const auto h = homology_dims(relative_complex(s.poset, in_l));
  for (std::size_t k = 0; k + 3 < h.size(); ++k) CHECK(h[k] == 0);
}

TEST_CASE("boundary sheaf cohomology: marked points and binomials") {
  CHECK(cohomology_OB(trivial_subdivision(2, 4)) == std::vector<int>{4});
  CHECK(cohomology_OB(trivial_subdivision(2, 5)) == std::vector<int>{5});
  CHECK(cohomology_OB(trivial_subdivision(3, 5)) == std::vector<int>{1, 6});
  CHECK(cohomology_OB(trivial_subdivision(3, 6)) == std::vector<int>{1, 10});
  CHECK(cohomology_OB(split_subdivision(2, 4)) == std::vector<int>{4});
  CHECK(cohomology_OB(split_subdivision(2, 5)) == std::vector<int>{5});
}

TEST_CASE("log canonical sections: binomial count, vanishing above") {
  CHECK(cohomology_omega(trivial_subdivision(2, 4)) == std::vector<int>{3, 0});
  CHECK(cohomology_omega(trivial_subdivision(2, 5)) == std::vector<int>{4, 0});
  CHECK(cohomology_omega(trivial_subdivision(3, 5)) ==
        std::vector<int>{6, 0, 0});
  CHECK(cohomology_omega(trivial_subdivision(3, 6)) ==
        std::vector<int>{10, 0, 0});
  CHECK(cohomology_omega(split_subdivision(2, 4)) == std::vector<int>{3, 0});
  CHECK(cohomology_omega(split_subdivision(2, 5)) == std::vector<int>{4, 0});
}

TEST_CASE("cohomology pipelines reject non-matroidal subdivisions") {
  const auto p = hypersimplex(2, 4);
  const Subdivision s = regular_subdivision(p, random_heights(p, 91));
  CHECK_THROWS_AS(cohomology_OS(s), NotMatroidal);
}

TEST_CASE("skeleton pairs: wedge cokernel and matching convention") {
  for (const auto [r, n] :
       {std::pair{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    const SkeletonPairReport report = skeleton_pair_oracle(r, n);
    CHECK(report.wedge_cokernel_dim ==
          static_cast<int>(binomial(n - 1, r - 1)));
    CHECK(report.matching == 0);
    if (r >= 3) {
      // Dimension n-r carries the binomial, n-2 the single class.
      CHECK(report.dims_low[n - r] ==
            static_cast<int>(binomial(n - 1, r - 1)));
      CHECK(report.dims_low[n - 2] == 1);
      for (int k = n - r + 1; k < n - 2; ++k) CHECK(report.dims_low[k] == 0);
    }
  }
}

TEST_CASE("skeleton pair (3,6) has a ten-dimensional class in degree 3") {
  const SkeletonPairReport report = skeleton_pair_oracle(3, 6);
  CHECK(report.dims_low[3] == 10);
}

TEST_CASE("graded exactness on trivial subdivisions, all level-one weights") {
  for (const auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
    const Subdivision s = trivial_subdivision(r, n);
    const GluingData t = GluingData::identity(s);
    for (const IVec& a : cone_lattice_points(s.base_hrep, n, r, 1)) {
      CHECK(graded_exactness_check(s, t, WeightPoint{a}));
    }
  }
}

TEST_CASE("graded exactness on the split with random gluing") {
  const Subdivision s = split_subdivision(2, 4);
  for (std::uint64_t seed : {21, 22, 23}) {
    const GluingData t = GluingData::random_coboundary(s, seed);
    for (int d = 1; d <= 2; ++d) {
      for (const IVec& a : cone_lattice_points(s.base_hrep, 4, 2, d)) {
        CHECK(graded_exactness_check(s, t, WeightPoint{a}));
      }
    }
  }
}

TEST_CASE("graded exactness rejects the zero weight and outside weights") {
  const Subdivision s = trivial_subdivision(2, 4);
  const GluingData t = GluingData::identity(s);
  CHECK_THROWS_AS(graded_exactness_check(s, t, WeightPoint{{0, 0, 0, 0}}),
                  BadParams);
  CHECK_THROWS_AS(graded_exactness_check(s, t, WeightPoint{{3, 1, 0, 0}}),
                  BadParams);
}
