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

#include "visco/arrangement.hpp"
#include "visco/matrix.hpp"

namespace visco {

/// A log differential form on the arrangement complement: the wedge of r-1
/// factors sum_j lambda_j dF_j/F_j, each factor recorded by its coefficient
/// covector lambda with coordinate sum zero.
struct LogForm {
  std::vector<QVec> factors;
};

/// The wedge of the factors e_j - e_{n-1} (0-based) over j in J, the
/// standard basis of the forms with sum-zero coefficients.
LogForm wedge_basis_form(int r, int n, const Subset& J);

/// Iterated residue of the form at the point where the hyperplanes indexed
/// by I (an (r-1)-subset, increasing order) meet, by exact univariate
/// partial-fraction arithmetic after adapting coordinates to I. Supported
/// for r = 2 and r = 3 (UnsupportedRank beyond); OnDegenerate when the
/// arrangement is not in general position.
Rat iterated_residue(const Arrangement& a, const LogForm& w, const Subset& I);

/// The closed-form value: the minor of the factor matrix on the columns I.
/// An independent oracle for iterated_residue.
Rat residue_determinant_oracle(const LogForm& w, const Subset& I);

/// Rows: lexicographic wedges of the basis e_i - e_{n-1} of the sum-zero
/// covectors; columns: (r-1)-subsets I; entries: iterated residues (the
/// determinant route for r > 3). For arrangements in general position this
/// matrix is the coordinate matrix of a fixed linear inclusion and does not
/// depend on the arrangement.
RationalMatrix residue_matrix(const Arrangement& a);

/// The coordinate matrix of wedge^(r-1) of the inclusion of the sum-zero
/// covectors into all covectors, in the same bases.
RationalMatrix inclusion_matrix(int r, int n);

/// residue_matrix equals inclusion_matrix exactly and has full row rank
/// binom(n-1, r-1).
bool verify_residue_theorem(const Arrangement& a);

/// A character of the quotient torus: an integer vector with sum zero.
struct CharacterVector {
  IVec m;
};

/// Residue of the invariant form d chi^m / chi^m along the facet divisor
/// with outward normal e_i: the pairing <e_i, m> = m_i.
long long toric_residue(const CharacterVector& m, int i);

}  // namespace visco
