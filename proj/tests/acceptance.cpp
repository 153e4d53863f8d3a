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

// Integration suite: one check per line, exact expectations throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "visco/errors.hpp"
#include "visco/homology.hpp"
#include "visco/io.hpp"
#include "visco/residue.hpp"

using namespace visco;

namespace {

int failures = 0;

void check(int number, const std::string& name,
           const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name << " ("
            << ms << " ms)";
  if (!error.empty()) std::cout << " exception: " << error;
  std::cout << "\n";
  if (!ok) ++failures;
}

Subdivision trivial_subdivision(int r, int n) {
  const LatticePolytope p = hypersimplex(r, n);
  return regular_subdivision(p, constant_heights(p));
}

Subdivision split_subdivision(int r, int n) {
  const LatticePolytope p = hypersimplex(r, n);
  return regular_subdivision(p, split_heights(p));
}

// The decompositions every per-cell and per-gamma criterion ranges over.
std::vector<Subdivision> tested_decompositions() {
  std::vector<Subdivision> out;
  out.push_back(trivial_subdivision(2, 4));
  out.push_back(trivial_subdivision(2, 5));
  out.push_back(trivial_subdivision(3, 5));
  out.push_back(trivial_subdivision(3, 6));
  out.push_back(split_subdivision(2, 4));
  out.push_back(split_subdivision(2, 5));
  return out;
}

AffinePoint random_point_off_hyperplanes(const Arrangement& a,
                                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-30, 30);
  while (true) {
    AffinePoint u;
    u.coords.resize(a.r);
    for (int k = 0; k < a.r; ++k) u.coords[k] = dist(rng);
    bool ok = false;
    for (const Rat& c : u.coords) ok = ok || c != 0;
    for (int i = 0; ok && i < a.n; ++i) ok = a.form_value(i, u.coords) != 0;
    if (ok) return u;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<int, int>> sizes = {
      {2, 4}, {2, 5}, {3, 5}, {3, 6}};

  check(1, "global sections of the log canonical sheaf", [&] {
    for (const auto& [r, n] : sizes) {
      std::vector<int> expect(r, 0);
      expect[0] = static_cast<int>(binomial(n - 1, r - 1));
      if (cohomology_omega(trivial_subdivision(r, n)) != expect) return false;
    }
    return true;
  });

  check(2, "structure sheaf cohomology vanishes above degree zero", [&] {
    std::vector<Subdivision> subject;
    for (const auto& [r, n] : sizes) subject.push_back(trivial_subdivision(r, n));
    subject.push_back(split_subdivision(2, 4));
    subject.push_back(split_subdivision(2, 5));
    for (const Subdivision& s : subject) {
      std::vector<int> expect(s.level(), 0);
      expect[0] = 1;
      if (cohomology_OS(s) != expect) return false;
    }
    return true;
  });

  check(3, "skeleton pair oracle matches the binomial and the pipeline", [&] {
    for (const auto& [r, n] : sizes) {
      const SkeletonPairReport rep = skeleton_pair_oracle(r, n);
      if (rep.wedge_cokernel_dim != static_cast<int>(binomial(n - 1, r - 1))) {
        return false;
      }
      if (rep.matching != 0) return false;  // the lower-skeleton convention
      if (r >= 3 &&
          rep.dims_low[n - r] != static_cast<int>(binomial(n - 1, r - 1))) {
        return false;
      }
    }
    return true;
  });

  check(4, "residue matrix is the inclusion, symbolic = determinant", [&] {
    for (int r : {2, 3}) {
      for (int n : {4, 5, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
          const Arrangement a =
              random_generic_arrangement(r, n, 7000 + 100 * r + 10 * n + trial);
          if (!verify_residue_theorem(a)) return false;
          for (const Subset& J : k_subsets(n - 1, r - 1)) {
            const LogForm w = wedge_basis_form(r, n, J);
            for (const Subset& I : k_subsets(n, r - 1)) {
              if (iterated_residue(a, w, I) !=
                  residue_determinant_oracle(w, I)) {
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  });

  check(5, "translated planes contain the all-ones vector", [&] {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 10; ++trial) {
      const int r = 2 + trial % 2;
      const int n = r + 2 + trial % 3;
      const Arrangement a = random_generic_arrangement(r, n, 8000 + trial);
      for (int k = 0; k < 20; ++k) {
        const AffinePoint u = random_point_off_hyperplanes(a, rng);
        if (!contains_e(gm_translate(a, u))) return false;
      }
    }
    return true;
  });

  check(6, "graded dimension is one on the cone, zero outside", [&] {
    for (const Subdivision& s :
         {trivial_subdivision(2, 4), trivial_subdivision(2, 5),
          split_subdivision(2, 4), split_subdivision(2, 5)}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GluingData t = GluingData::random_coboundary(s, 9000 + seed);
        const HilbertReport rep = hilbert_report(s, t, 3, 50, seed);
        if (!rep.pass || rep.outside_checked != 50) return false;
      }
    }
    return true;
  });

  check(7, "cells of matroid decompositions are saturated to level 3", [&] {
    for (const Subdivision& s : tested_decompositions()) {
      for (const Subset& cell : s.cells) {
        std::vector<Subset> supports;
        for (int vi : cell) {
          Subset sup;
          for (int i = 0; i < s.n(); ++i) {
            if (s.base.vertices[vi][i] != 0) sup.push_back(i);
          }
          supports.push_back(std::move(sup));
        }
        const Matroid m{s.n(), s.level(), supports};
        for (int d = 1; d <= 3; ++d) {
          if (!white_check(m, d)) return false;
        }
      }
    }
    return true;
  });

  check(8, "each gamma face sits in one cell with a unimodular cone", [&] {
    for (const Subdivision& s : tested_decompositions()) {
      if (!is_matroid_decomposition(s)) return false;
      for (const Subset& I : k_subsets(s.n(), s.level() - 1)) {
        const CellReport rep = cell_containing_gamma(s, I);
        if (!rep.simplicial || !rep.unimodular) return false;
      }
    }
    // Converse: a non-matroidal triangulation leaves some gamma face
    // in more than one cell.
    const LatticePolytope p = hypersimplex(3, 5);
    const Subdivision tri = regular_subdivision(p, random_heights(p, 1));
    if (is_matroid_decomposition(tri)) return false;
    int not_unique = 0;
    for (const Subset& I : k_subsets(5, 2)) {
      try {
        cell_containing_gamma(tri, I);
      } catch (const NotUnique&) {
        ++not_unique;
      }
    }
    return not_unique >= 1;
  });

  check(9, "strata counts of the trivial fibres", [&] {
    const StrataPoset a = strata_poset(trivial_subdivision(2, 4));
    if (a.elements.size() != 5) return false;
    if (a.count_by_stratum_dim() != std::vector<int>{4, 1}) return false;
    const StrataPoset b = strata_poset(trivial_subdivision(3, 5));
    if (b.count_by_stratum_dim() != std::vector<int>{10, 5, 1}) return false;
    return true;
  });

  check(10, "weight pieces of the face complex are exact below the top", [&] {
    for (const Subdivision& s :
         {trivial_subdivision(2, 4), trivial_subdivision(2, 5),
          split_subdivision(2, 4), split_subdivision(2, 5)}) {
      const GluingData t = GluingData::random_coboundary(s, 4242);
      for (int d = 1; d <= 2; ++d) {
        for (const IVec& a :
             cone_lattice_points(s.base_hrep, s.n(), s.level(), d)) {
          if (!graded_exactness_check(s, t, WeightPoint{a})) return false;
        }
      }
    }
    return true;
  });

  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
