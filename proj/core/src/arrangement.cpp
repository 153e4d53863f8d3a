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

#include "visco/arrangement.hpp"

#include <random>

#include "visco/errors.hpp"

namespace visco {

Rat Arrangement::form_value(int i, const QVec& u) const {
  if (i < 0 || i >= n) throw IndexError("form index out of range");
  if (static_cast<int>(u.size()) != r) throw IndexError("point dimension mismatch");
  return dot(forms.row(i), u);
}

bool is_general_position(const Arrangement& a) {
  const RationalMatrix plane = a.forms.transposed();  // r x n
  if (rank(plane) != static_cast<std::size_t>(a.r)) return false;
  Subset all_rows(a.r);
  for (int i = 0; i < a.r; ++i) all_rows[i] = i;
  for (const Subset& s : k_subsets(a.n, a.r)) {
    if (minor_det(plane, all_rows, s) == 0) return false;
  }
  return true;
}

PlueckerVector gm_point(const Arrangement& a) {
  return maximal_minors(a.forms.transposed());
}

RationalMatrix gm_translate(const Arrangement& a, const AffinePoint& u) {
  QVec values(a.n);
  for (int i = 0; i < a.n; ++i) {
    values[i] = a.form_value(i, u.coords);
    if (values[i] == 0) throw OnHyperplane("point lies on hyperplane " + std::to_string(i + 1));
  }
  RationalMatrix m(a.r, a.n);
  for (int k = 0; k < a.r; ++k) {
    for (int i = 0; i < a.n; ++i) {
      m.at(k, i) = a.forms.at(i, k) / values[i];
    }
  }
  if (rank(m) != static_cast<std::size_t>(a.r)) {
    throw RankDeficient("forms do not span");
  }
  return m;
}

bool contains_e(const RationalMatrix& w) {
  RationalMatrix stacked = w;
  stacked.push_row(QVec(w.cols(), Rat(1)));
  return rank(stacked) == w.rows();
}

namespace {

// Quotient map to k^n / k.e in the basis [e_1 - e_n, ..., e_{n-1} - e_n]:
// x maps to (x_1 - x_n, ..., x_{n-1} - x_n).
QVec quotient_by_e(const QVec& x) {
  QVec out(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i] - x.back();
  return out;
}

PlueckerVector plane_from_spanning_rows(const std::vector<QVec>& rows) {
  return maximal_minors(
      RationalMatrix::from_rows(row_space_basis(RationalMatrix::from_rows(rows))));
}

}  // namespace

PlueckerVector gauss_point(const Arrangement& a, const AffinePoint& u) {
  const RationalMatrix m = gm_translate(a, u);
  std::vector<QVec> images;
  images.reserve(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    images.push_back(quotient_by_e(m.row(k)));
  }
  return plane_from_spanning_rows(images);
}

PlueckerVector gauss_point_annihilator(const Arrangement& a,
                                       const AffinePoint& u) {
  const RationalMatrix m = gm_translate(a, u);
  // Functionals vanishing on the translated plane; e in the plane forces
  // them to have coordinate sum zero, so they live in h*.
  const std::vector<QVec> ker = kernel_basis(m);
  RationalMatrix pairing(ker.size(), a.n - 1);
  for (std::size_t j = 0; j < ker.size(); ++j) {
    // Pair against representatives e_i, i < n: drop the last coordinate.
    for (int i = 0; i + 1 < a.n; ++i) pairing.at(j, i) = ker[j][i];
  }
  return plane_from_spanning_rows(kernel_basis(pairing));
}

Arrangement points_on_line(int n) {
  Arrangement a;
  a.r = 2;
  a.n = n;
  a.forms = RationalMatrix(n, 2);
  for (int i = 0; i < n; ++i) {
    a.forms.at(i, 0) = 1;
    a.forms.at(i, 1) = -i;
  }
  return a;
}

Arrangement nine_lines_fixture() {
  // Triangle x, y, z; each side repeated (scaled equations, same lines);
  // then one generic line through each triangle vertex:
  //   x + 2y = 0 through (0:0:1), y + 3z = 0 through (1:0:0),
  //   5x + z = 0 through (0:1:0).
  Arrangement a;
  a.r = 3;
  a.n = 9;
  a.forms = RationalMatrix(9, 3);
  auto set = [&a](int i, int c0, int c1, int c2) {
    a.forms.at(i, 0) = c0;
    a.forms.at(i, 1) = c1;
    a.forms.at(i, 2) = c2;
  };
  set(0, 1, 0, 0);
  set(1, 0, 1, 0);
  set(2, 0, 0, 1);
  set(3, 2, 0, 0);
  set(4, 0, 3, 0);
  set(5, 0, 0, 5);
  set(6, 1, 2, 0);
  set(7, 0, 1, 3);
  set(8, 5, 0, 1);
  return a;
}

Arrangement random_generic_arrangement(int r, int n, std::uint64_t seed) {
  if (r < 1 || n < r) throw BadParams("need n >= r >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  Arrangement a;
  a.r = r;
  a.n = n;
  while (true) {
    a.forms = RationalMatrix(n, r);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < r; ++k) a.forms.at(i, k) = dist(rng);
    }
    if (is_general_position(a)) return a;
  }
}

}  // namespace visco
