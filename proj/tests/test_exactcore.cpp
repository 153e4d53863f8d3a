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

#include "visco/errors.hpp"
#include "visco/matrix.hpp"
#include "visco/pluecker.hpp"
#include "visco/rational.hpp"
#include "visco/subsets.hpp"

using namespace visco;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Rat cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  REQUIRE(n == m.cols());
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rat sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    const Rat term = m.at(0, j) * cofactor_det(sub);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                             std::size_t cols, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/8") == Rat(-3, 4));
  CHECK(parse_rational("5") == Rat(5));
  CHECK(format_rational(Rat(5)) == "5");
  CHECK(format_rational(Rat(Int(10), Int(-4))) == "-5/2");
  CHECK(parse_rational("10/-4") == Rat(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("subset enumeration is lexicographic") {
  const auto subs = k_subsets(4, 2);
  REQUIRE(subs.size() == 6);
  CHECK(subs[0] == Subset{0, 1});
  CHECK(subs[1] == Subset{0, 2});
  CHECK(subs[5] == Subset{2, 3});
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CHECK(subset_rank(subs[i], 4) == i);
  }
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
}

TEST_CASE("rank: identity and proportional rows") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  RationalMatrix m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(rank(m) == 1);
  CHECK(rank(RationalMatrix(0, 0)) == 0);
}

TEST_CASE("rank of random 3x6 with all minors nonzero is 3") {
  std::mt19937_64 rng(20260810);
  RationalMatrix m(3, 6);
  bool all_nonzero = false;
  while (!all_nonzero) {
    m = random_matrix(rng, 3, 6);
    all_nonzero = true;
    // Minor-expansion oracle over all C(6,3) column triples.
    for (const Subset& s : k_subsets(6, 3)) {
      RationalMatrix sub(3, 3);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) sub.at(i, j) = m.at(i, s[j]);
      }
      if (cofactor_det(sub) == 0) {
        all_nonzero = false;
        break;
      }
    }
  }
  CHECK(rank(m) == 3);
}

TEST_CASE("minor: identity, single entry, 2x2") {
  const auto id = RationalMatrix::identity(3);
  CHECK(minor_det(id, {0, 1}, {0, 1}) == 1);
  RationalMatrix m{{Rat(7), Rat(2)}, {Rat(3), Rat(5)}};
  CHECK(minor_det(m, {0}, {0}) == m.at(0, 0));
  RationalMatrix m2{{Rat(1), Rat(1)}, {Rat(1), Rat(2)}};
  CHECK(minor_det(m2, {0, 1}, {0, 1}) == 1);
  CHECK_THROWS_AS(minor_det(m2, {0, 5}, {0, 1}), IndexError);
  CHECK_THROWS_AS(minor_det(m2, {0}, {0, 1}), IndexError);
}

TEST_CASE("determinant matches cofactor oracle on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix m = random_matrix(rng, n, n, -6, 6);
    // Mix in non-integer entries.
    m.at(0, 0) += Rat(1, 3);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("maximal_minors: 2x2 identity") {
  const auto p = maximal_minors(RationalMatrix::identity(2));
  REQUIRE(p.coords.size() == 1);
  CHECK(p.coords[0] == 1);
}

TEST_CASE("maximal_minors: frozen 2x4 example") {
  RationalMatrix m{{Rat(1), Rat(0), Rat(1), Rat(1)},
                   {Rat(0), Rat(1), Rat(1), Rat(2)}};
  const auto p = maximal_minors(m);
  const QVec expected{Rat(1), Rat(1), Rat(2), Rat(-1), Rat(-1), Rat(1)};
  CHECK(p.coords == expected);
}

TEST_CASE("maximal_minors throws on rank-deficient input") {
  RationalMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
  CHECK_THROWS_AS(maximal_minors(m), RankDeficient);
}

TEST_CASE("row scaling scales every coordinate (multilinearity)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m = random_matrix(rng, 2, 5);
    if (rank(m) < 2) continue;
    const Rat c(3, 2);
    RationalMatrix scaled = m;
    for (std::size_t j = 0; j < m.cols(); ++j) scaled.at(0, j) *= c;
    const auto p = maximal_minors(m);
    const auto q = maximal_minors(scaled);
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
      CHECK(q.coords[k] == c * p.coords[k]);
    }
  }
}

TEST_CASE("minor expansion oracle: coordinates equal per-subset cofactor dets") {
  std::mt19937_64 rng(99);
  for (const auto [r, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
    for (int trial = 0; trial < 5; ++trial) {
      RationalMatrix m = random_matrix(rng, r, n);
      if (rank(m) < static_cast<std::size_t>(r)) continue;
      const auto p = maximal_minors(m);
      const auto subs = k_subsets(n, r);
      for (std::size_t idx = 0; idx < subs.size(); ++idx) {
        RationalMatrix sub(r, r);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(i, subs[idx][j]);
        }
        CHECK(p.coords[idx] == cofactor_det(sub));
      }
    }
  }
}

TEST_CASE("pluecker_relations_ok on constructed points") {
  std::mt19937_64 rng(123);
  int checked = 0;
  while (checked < 50) {
    const int r = 2 + static_cast<int>(rng() % 2);
    const int n = r + 2 + static_cast<int>(rng() % 2);
    RationalMatrix m = random_matrix(rng, r, n);
    if (rank(m) < static_cast<std::size_t>(r)) continue;
    CHECK(pluecker_relations_ok(maximal_minors(m)));
    ++checked;
  }
}

TEST_CASE("pluecker relations: coordinate point true, fake point false") {
  PlueckerVector p;
  p.r = 2;
  p.n = 4;
  p.coords.assign(6, Rat(0));
  p.at({0, 1}) = 1;
  CHECK(pluecker_relations_ok(p));
  p.at({2, 3}) = 1;  // p12 p34 - p13 p24 + p14 p23 = 1
  CHECK_FALSE(pluecker_relations_ok(p));
}

TEST_CASE("rank invariant under row operations and transposition") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + rng() % 3;
    const std::size_t cols = 2 + rng() % 4;
    RationalMatrix m = random_matrix(rng, rows, cols);
    const std::size_t rk = rank(m);
    CHECK(rank(m.transposed()) == rk);
    RationalMatrix mixed = m;
    for (std::size_t j = 0; j < cols; ++j) {
      mixed.at(0, j) += Rat(5, 3) * m.at(rows - 1, j);
    }
    CHECK(rank(mixed) == rk);
  }
}

TEST_CASE("torus action: identity, composition, commutes with minors") {
  std::mt19937_64 rng(5);
  RationalMatrix m = random_matrix(rng, 2, 4);
  while (rank(m) < 2) m = random_matrix(rng, 2, 4);
  const auto p = maximal_minors(m);

  const QVec ones(4, Rat(1));
  CHECK(torus_act(ones, p).coords == p.coords);

  const QVec t{Rat(2), Rat(1, 3), Rat(-1), Rat(5)};
  const QVec s{Rat(1, 2), Rat(3), Rat(7), Rat(-2)};
  QVec st(4);
  for (int i = 0; i < 4; ++i) st[i] = s[i] * t[i];
  CHECK(torus_act(s, torus_act(t, p)).coords == torus_act(st, p).coords);

  // Matrix-level action then extraction agrees with the coordinate action.
  RationalMatrix scaled = m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 4; ++j) scaled.at(i, j) *= t[j];
  }
  CHECK(maximal_minors(scaled).coords == torus_act(t, p).coords);

  CHECK(torus_act(t, p).r == 2);
  CHECK(pluecker_relations_ok(torus_act(t, p)));
  const QVec bad{Rat(0), Rat(1), Rat(1), Rat(1)};
  CHECK_THROWS_AS(torus_act(bad, p), ZeroScale);
}

TEST_CASE("kernel and solve are exact") {
  RationalMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
  const auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    CHECK(dot(m.row(0), v) == 0);
    CHECK(dot(m.row(1), v) == 0);
  }
  QVec x;
  CHECK(solve(RationalMatrix::identity(3), {Rat(1), Rat(2), Rat(3)}, x));
  CHECK(x == QVec{Rat(1), Rat(2), Rat(3)});
  CHECK_FALSE(solve(m, {Rat(1), Rat(3)}, x));
}

TEST_CASE("primitive vector normalization") {
  CHECK(primitive({Rat(1, 2), Rat(-3, 2)}) == QVec{Rat(1), Rat(-3)});
  CHECK(primitive({Rat(-2), Rat(4)}) == QVec{Rat(1), Rat(-2)});
  CHECK(primitive({Rat(0), Rat(0)}) == QVec{Rat(0), Rat(0)});
}
