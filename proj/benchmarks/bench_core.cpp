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

#include <benchmark/benchmark.h>

#include <random>

#include "visco/homology.hpp"
#include "visco/residue.hpp"
#include "visco/stanley.hpp"

using namespace visco;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = Rat(dist(rng), 1 + (rng() % 7));
    }
  }
  return m;
}

void BM_RankBareiss(benchmark::State& state) {
  const auto m = random_matrix(state.range(0), state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankBareiss)->Arg(8)->Arg(16)->Arg(24);

void BM_FacetEnumeration(benchmark::State& state) {
  const auto p = hypersimplex(state.range(0), state.range(1));
  VRep v;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    v.points.push_back(p.vertex_q(static_cast<int>(i)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(v_to_h(v));
}
BENCHMARK(BM_FacetEnumeration)->Args({2, 4})->Args({2, 6})->Args({3, 6});

void BM_FacePoset(benchmark::State& state) {
  const auto p = hypersimplex(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(face_poset(p));
}
BENCHMARK(BM_FacePoset)->Args({2, 4})->Args({2, 5})->Args({3, 5});

void BM_LogCanonicalSections(benchmark::State& state) {
  const auto p = hypersimplex(state.range(0), state.range(1));
  const Subdivision s = regular_subdivision(p, constant_heights(p));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_omega(s));
}
BENCHMARK(BM_LogCanonicalSections)->Args({2, 5})->Args({3, 5})->Args({3, 6});

void BM_GradedDimLevel2(benchmark::State& state) {
  const auto p = hypersimplex(2, 5);
  const Subdivision s = regular_subdivision(p, split_heights(p));
  const GluingData t = GluingData::random_coboundary(s, 7);
  const auto points = cone_lattice_points(s.base_hrep, 5, 2, 2);
  for (auto _ : state) {
    int total = 0;
    for (const IVec& a : points) {
      total += graded_dim(s, t, WeightPoint{a}, false);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GradedDimLevel2);

void BM_ResidueMatrix(benchmark::State& state) {
  const Arrangement a =
      random_generic_arrangement(state.range(0), state.range(1), 99);
  for (auto _ : state) benchmark::DoNotOptimize(residue_matrix(a));
}
BENCHMARK(BM_ResidueMatrix)->Args({2, 6})->Args({3, 6});

}  // namespace

BENCHMARK_MAIN();
