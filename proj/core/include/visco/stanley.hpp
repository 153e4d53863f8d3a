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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "visco/matroid.hpp"
#include "visco/subdivision.hpp"

namespace visco {

/// A torus weight: a nonnegative integer vector. As a point of the cone
/// over a level-r base it sits at level sum/r.
struct WeightPoint {
  IVec a;

  long long coordinate_sum() const;
  /// Level against rank r; -1 when the sum is not divisible by r.
  long long level(int r) const;
  bool is_zero() const;
};

/// Character value prod t_i^(a_i), exact.
Rat character_value(const QVec& t, const IVec& a);

/// Torus elements attached to the facet inclusions of a subdivision's face
/// poset, acting on restriction maps through character values. Keys are
/// (face, facet) pairs of poset indices; every facet inclusion carries an
/// entry with all coordinates nonzero.
class GluingData {
 public:
  /// All entries 1.
  static GluingData identity(const Subdivision& s);
  /// Entries s_tau / s_sigma for one random nonzero vector per face; such
  /// data satisfies the compatibility condition by construction.
  static GluingData random_coboundary(const Subdivision& s, std::uint64_t seed);

  const QVec& at(int face, int facet) const;  // BadGluing when absent
  void set(int face, int facet, QVec t);      // ZeroScale on zero entries

  const std::map<std::pair<int, int>, QVec>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<int, int>, QVec> entries_;
};

/// Compatibility across each diamond sigma > tau_1, tau_2 > upsilon of the
/// poset: the two composite character values agree on every lattice point
/// of Cone(upsilon) up to the given level. Returns false with a message on
/// the first violation.
bool cocycle_ok(const Subdivision& s, const GluingData& t, int max_level,
                std::string* why = nullptr);

/// All a >= 0 with a/level inside the hull and coordinate sum r*level.
/// Assumes the hull lies in the unit cube (0/1 vertex sets), so a_i <=
/// level. level 0 yields the origin.
std::vector<IVec> cone_lattice_points(const HRep& hull, int n, int r,
                                      int level);

/// Dimension of the weight-a piece of the glued algebra: the kernel of the
/// character-scaled difference map from the cells whose cone contains a to
/// the interior facets whose cone contains a. Throws BadGluing on missing
/// or incompatible gluing data (set check_gluing = false after validating
/// once).
int graded_dim(const Subdivision& s, const GluingData& t, const WeightPoint& a,
               bool check_gluing = true);

struct HilbertReport {
  bool pass = false;
  long long points_checked = 0;
  long long outside_checked = 0;
  std::vector<std::pair<IVec, int>> failures;  // weight, graded dimension
};

/// graded_dim = 1 on every cone lattice point of level <= d_max and 0 on
/// `outside_samples` seeded points with a coordinate above their level.
HilbertReport hilbert_report(const Subdivision& s, const GluingData& t,
                             int d_max, int outside_samples = 50,
                             std::uint64_t seed = 12345);
bool hilbert_check(const Subdivision& s, const GluingData& t, int d_max);

/// Product rule for trivial gluing: a + b when some maximal cell's cone
/// contains both points, nothing otherwise.
std::optional<WeightPoint> stanley_product(const WeightPoint& a,
                                           const WeightPoint& b,
                                           const Subdivision& s);

/// Every lattice point of level d in the cone over the matroid polytope is
/// a sum of d basis indicator vectors.
bool white_check(const Matroid& m, int d);

}  // namespace visco
