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

#include <utility>
#include <vector>

#include "visco/matrix.hpp"
#include "visco/rational.hpp"

namespace visco {

/// Extreme rays and lineality basis of a polyhedral cone.
struct ConeRays {
  std::vector<QVec> rays;       // primitive representatives
  std::vector<QVec> lineality;  // basis of the lineality space
};

/// Double description: extreme rays of {x in R^dim : <g,x> >= 0 for all g}.
/// Exact rational arithmetic throughout; meant for desk-scale dimensions.
ConeRays cone_from_inequalities(const std::vector<QVec>& gens, int dim);

/// Linear inequality a.x >= b, or equation a.x = b.
using AffineForm = std::pair<QVec, Rat>;

/// Facet inequalities and affine-hull equations of a polyhedron, in the
/// ambient coordinates.
struct HRep {
  std::vector<AffineForm> ineqs;  // a.x >= b, one per facet
  std::vector<AffineForm> eqs;    // a.x  = b, affine hull
};

/// Points and recession rays.
struct VRep {
  std::vector<QVec> points;
  std::vector<QVec> rays;
};

/// Converts generators to facet form. The input polyhedron may be
/// lower-dimensional; its affine hull is emitted as equations.
HRep v_to_h(const VRep& v);

/// Vertex/ray enumeration from facet form. The result of a bounded input
/// has no rays. Throws InvalidSubdivision-free plain Error on an unbounded
/// lineality (not a use case here).
VRep h_to_v(const HRep& h);

/// Membership test against an HRep, exact.
bool hrep_contains(const HRep& h, const QVec& x);

}  // namespace visco
