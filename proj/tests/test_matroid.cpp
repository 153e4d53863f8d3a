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

#include <random>

#include "visco/arrangement.hpp"
#include "visco/errors.hpp"
#include "visco/matroid.hpp"

using namespace visco;

namespace {

Matroid uniform_matroid(int r, int n) {
  return Matroid{n, r, k_subsets(n, r)};
}

}  // namespace

TEST_CASE("exchange axiom: uniform family, broken pair, near-uniform") {
  CHECK(is_basis_family(4, 2, k_subsets(4, 2)));
  CHECK_FALSE(is_basis_family(4, 2, {{0, 1}, {2, 3}}));
  CHECK(is_basis_family(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK_FALSE(is_basis_family(4, 2, {}));
}

TEST_CASE("matroid_from_matrix: generic, parallel columns, nine lines") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> dist(-9, 9);
  RationalMatrix generic(3, 6);
  bool uniform = false;
  while (!uniform) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 6; ++j) generic.at(i, j) = dist(rng);
    }
    if (rank(generic) < 3) continue;
    uniform = matroid_from_matrix(generic).bases.size() == binomial(6, 3);
  }
  CHECK(matroid_from_matrix(generic).bases == k_subsets(6, 3));

  // Columns (1,0), (1,0), (0,1), (1,1): only {1,2} fails.
  RationalMatrix cols{{Rat(1), Rat(1), Rat(0), Rat(1)},
                      {Rat(0), Rat(0), Rat(1), Rat(1)}};
  const Matroid m = matroid_from_matrix(cols);
  std::vector<Subset> expected = k_subsets(4, 2);
  expected.erase(expected.begin());  // drop {0,1}
  CHECK(m.bases == expected);

  RationalMatrix degenerate{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS_AS(matroid_from_matrix(degenerate), RankDeficient);
}

TEST_CASE("nine lines fixture: dependent triples match the incidences") {
  const Arrangement a = nine_lines_fixture();
  const Matroid m = matroid_from_matrix(a.forms.transposed());
  CHECK(m.n == 9);
  CHECK(m.r == 3);
  CHECK(is_basis_family(9, 3, m.bases));
  CHECK(m.bases.size() < binomial(9, 3));

  auto is_basis = [&m](Subset s) {
    std::sort(s.begin(), s.end());
    return std::binary_search(m.bases.begin(), m.bases.end(), s);
  };
  // Doubled lines are dependent with anything.
  CHECK_FALSE(is_basis({0, 3, 6}));
  CHECK_FALSE(is_basis({1, 4, 8}));
  // Line 7 passes through the intersection of lines 1 and 2 (and 4, 5).
  CHECK_FALSE(is_basis({0, 1, 6}));
  CHECK_FALSE(is_basis({3, 4, 6}));
  CHECK_FALSE(is_basis({1, 2, 7}));
  CHECK_FALSE(is_basis({2, 0, 8}));
  // Generic triples survive.
  CHECK(is_basis({0, 1, 2}));
  CHECK(is_basis({6, 7, 8}));
  CHECK(is_basis({0, 1, 7}));
}

TEST_CASE("connectedness: uniform true, split and free false") {
  CHECK(is_connected(uniform_matroid(2, 4)));
  CHECK_FALSE(is_connected(Matroid{3, 2, {{0, 1}, {0, 2}}}));
  CHECK_FALSE(is_connected(uniform_matroid(2, 2)));
  CHECK_FALSE(is_connected(uniform_matroid(3, 3)));
}

TEST_CASE("polytope_of: hypersimplex, split, point") {
  const auto p = polytope_of(uniform_matroid(2, 4));
  CHECK(p.vertices == hypersimplex(2, 4).vertices);
  CHECK(p.dim() == 3);

  const auto split = polytope_of(Matroid{3, 2, {{0, 1}, {0, 2}}});
  CHECK(split.dim() < 2);

  const auto pt = polytope_of(Matroid{3, 2, {{0, 1}}});
  CHECK(pt.dim() == 0);
}

TEST_CASE("is_matroid_subpolytope: full set, broken pair, split cell") {
  CHECK(is_matroid_subpolytope(2, 4, k_subsets(4, 2)));
  CHECK_FALSE(is_matroid_subpolytope(2, 4, {{0, 1}, {2, 3}}));
  CHECK(is_matroid_subpolytope(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("edge oracle rejects the long diagonal directly") {
  CHECK_FALSE(matroid_edge_oracle(2, 4, {{0, 1}, {2, 3}}));
  CHECK(matroid_edge_oracle(2, 4, {{0, 1}, {0, 2}}));
  CHECK(matroid_edge_oracle(2, 4, {{0, 1}}));
}

TEST_CASE("exchange and edge tests agree on all vertex subsets (exhaustive)") {
  for (const auto [r, n] : {std::pair{2, 4}, {2, 5}}) {
    const auto verts = k_subsets(n, r);
    const std::size_t total = 1u << verts.size();
    for (std::size_t mask = 1; mask < total; ++mask) {
      std::vector<Subset> family;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask & (1u << i)) family.push_back(verts[i]);
      }
      CHECK(is_basis_family(n, r, family) == matroid_edge_oracle(r, n, family));
    }
  }
}

TEST_CASE("connected iff full-dimensional polytope (exhaustive small cases)") {
  for (const auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}, {1, 4}}) {
    const auto verts = k_subsets(n, r);
    const std::size_t total = 1u << verts.size();
    for (std::size_t mask = 1; mask < total; ++mask) {
      std::vector<Subset> family;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask & (1u << i)) family.push_back(verts[i]);
      }
      if (!is_basis_family(n, r, family)) continue;
      const Matroid m{n, r, family};
      CHECK(is_connected(m) == (polytope_of(m).dim() == n - 1));
    }
  }
}
