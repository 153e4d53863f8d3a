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

#include "visco/matrix.hpp"
#include "visco/pluecker.hpp"
#include "visco/rational.hpp"

namespace visco {

/// An ordered arrangement of n hyperplanes in projective (r-1)-space, given
/// by homogeneous linear equations: row i of `forms` holds the coefficients
/// of the i-th linear form on affine r-space. The forms must span, i.e. the
/// n x r matrix has rank r.
struct Arrangement {
  int r = 0;
  int n = 0;
  RationalMatrix forms;  // n x r

  /// Value of the i-th form at a chart representative u (0-based i).
  Rat form_value(int i, const QVec& u) const;
};

/// A chart representative of a point of projective (r-1)-space: r rational
/// coordinates, not all zero.
struct AffinePoint {
  QVec coords;
};

/// True iff all C(n,r) maximal minors of forms^T are nonzero, i.e. every r
/// of the hyperplanes meet transversally.
bool is_general_position(const Arrangement& a);

/// The point of G(r,n) cut out by the arrangement: Plücker coordinates of
/// the r-plane {(F_1(w),...,F_n(w)) : w} in affine n-space. The torus orbit
/// of this point is independent of the chosen equations.
PlueckerVector gm_point(const Arrangement& a);

/// The translate of the arrangement plane moving the image of u to
/// e = (1,...,1): an r x n matrix with entry (k,i) = forms(i,k)/F_i(u).
/// Its row space always contains e. Throws OnHyperplane when some
/// F_i(u) = 0.
RationalMatrix gm_translate(const Arrangement& a, const AffinePoint& u);

/// True iff the row space of w (an r x n matrix) contains e = (1,...,1).
bool contains_e(const RationalMatrix& w);

/// The Gauss-map image of u: the (r-1)-plane in k^n / k.e spanned by the
/// translated plane modulo e, written in the basis sending e_i to the class
/// of e_i - e_n for i < n. A point of G(r-1, n-1).
PlueckerVector gauss_point(const Arrangement& a, const AffinePoint& u);

/// The same plane computed the dual way: as the annihilator in h of the
/// kernel of lambda -> sum_i lambda_i grad(F_i)/F_i(u). Must agree with
/// gauss_point projectively; kept separate as a consistency oracle.
PlueckerVector gauss_point_annihilator(const Arrangement& a,
                                       const AffinePoint& u);

/// Arrangement of n points 0,1,...,n-1 on the projective line, encoded as
/// forms x - c*y. In general position for any n.
Arrangement points_on_line(int n);

/// Nine lines in the projective plane: a generic triangle, each side doubled,
/// and through each triangle vertex one extra generic line. Not in general
/// position; the standard stress test for matroid extraction.
Arrangement nine_lines_fixture();

/// Deterministic generic arrangement with small integer forms; resamples
/// from the seeded generator until in general position.
Arrangement random_generic_arrangement(int r, int n, std::uint64_t seed);

}  // namespace visco
